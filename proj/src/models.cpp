#include "secular/models.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "secular/error.hpp"

namespace secular {

namespace {

struct KindName {
  ModelKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {ModelKind::MathieuPiEven, "mathieu-pi-even"},
    {ModelKind::MathieuPiOdd, "mathieu-pi-odd"},
    {ModelKind::Mathieu2PiEven, "mathieu-2pi-even"},
    {ModelKind::Mathieu2PiOdd, "mathieu-2pi-odd"},
    {ModelKind::Generic, "generic"},
};

std::vector<Rational> ones(std::size_t n) { return std::vector<Rational>(n, Rational(1)); }

}  // namespace

std::string to_string(ModelKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  throw Error(ErrorKind::Parse, "unknown model kind '" + std::string(name) + "'");
}

bool is_mathieu(ModelKind kind) { return kind != ModelKind::Generic; }

BandedOperator::BandedOperator(std::vector<Rational> diag0,
                               std::map<int, std::vector<Rational>> bands, bool truncation)
    : diag0_(std::move(diag0)), bands_(std::move(bands)), truncation_(truncation) {
  const std::size_t m = diag0_.size();
  if (m == 0) throw Error(ErrorKind::InvalidModel, "operator needs dimension >= 1");
  for (const auto& [offset, entries] : bands_) {
    const auto width = static_cast<std::size_t>(offset < 0 ? -offset : offset);
    if (width >= m) {
      throw Error(ErrorKind::InvalidModel, "band offset " + std::to_string(offset) +
                                               " does not fit dimension " + std::to_string(m));
    }
    if (entries.size() != m - width) {
      throw Error(ErrorKind::InvalidModel,
                  "band " + std::to_string(offset) + " has " + std::to_string(entries.size()) +
                      " entries, expected " + std::to_string(m - width));
    }
    bandwidth_ = std::max(bandwidth_, width);
  }
  if (bandwidth_ == 0) bandwidth_ = 1;

  order_.resize(m);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [this](std::size_t a, std::size_t b) { return diag0_[a] < diag0_[b]; });
  for (std::size_t i = 1; i < m; ++i) {
    if (diag0_[order_[i]] == diag0_[order_[i - 1]]) {
      throw Error(ErrorKind::Degenerate,
                  "unperturbed spectrum is degenerate: value " + diag0_[order_[i]].to_string() +
                      " appears more than once");
    }
  }
}

Rational BandedOperator::coupling(std::size_t row, std::size_t col) const {
  const long offset = static_cast<long>(col) - static_cast<long>(row);
  const auto it = bands_.find(static_cast<int>(offset));
  if (it == bands_.end()) return {};
  const std::size_t k = offset >= 0 ? row : col;
  return it->second[k];
}

std::size_t BandedOperator::site_of_state(std::size_t n) const {
  if (n < 1 || n > dim()) {
    throw Error(ErrorKind::InvalidArgument,
                "state " + std::to_string(n) + " outside 1.." + std::to_string(dim()));
  }
  return order_[n - 1];
}

BandedOperator build_mathieu(ModelKind subspace, std::size_t dim) {
  if (dim < 2) throw Error(ErrorKind::DimensionTooSmall, "Mathieu models need dim >= 2");
  std::vector<Rational> diag0(dim);
  std::vector<Rational> self(dim);
  std::vector<Rational> upper = ones(dim - 1);
  std::vector<Rational> lower = ones(dim - 1);

  switch (subspace) {
    case ModelKind::Mathieu2PiEven:
    case ModelKind::Mathieu2PiOdd:
      // cos((2k-1)x) or sin((2k-1)x); 2cos(2x) maps cos x to cos x + cos 3x
      // and sin x to sin 3x - sin x.
      for (std::size_t k = 0; k < dim; ++k) {
        const long odd = 2 * static_cast<long>(k) + 1;
        diag0[k] = Rational(odd * odd);
      }
      self[0] = subspace == ModelKind::Mathieu2PiEven ? Rational(1) : Rational(-1);
      break;
    case ModelKind::MathieuPiEven:
      // 1, cos(2x), cos(4x), ...; the sqrt(2) normalisation pair is replaced
      // by the similar rational pair (2, 1).
      for (std::size_t k = 0; k < dim; ++k) {
        const long even = 2 * static_cast<long>(k);
        diag0[k] = Rational(even * even);
      }
      upper[0] = Rational(2);
      lower[0] = Rational(1);
      break;
    case ModelKind::MathieuPiOdd:
      // sin(2x), sin(4x), ...
      for (std::size_t k = 0; k < dim; ++k) {
        const long even = 2 * static_cast<long>(k + 1);
        diag0[k] = Rational(even * even);
      }
      break;
    case ModelKind::Generic:
      throw Error(ErrorKind::InvalidModel, "build_mathieu called with the generic kind");
  }

  std::map<int, std::vector<Rational>> bands;
  bands.emplace(0, std::move(self));
  bands.emplace(1, std::move(upper));
  bands.emplace(-1, std::move(lower));
  return BandedOperator(std::move(diag0), std::move(bands), true);
}

BandedOperator build_generic(const ModelSpec& spec) {
  if (spec.kind != ModelKind::Generic) {
    throw Error(ErrorKind::InvalidModel, "build_generic needs kind 'generic'");
  }
  if (spec.dim != 0 && spec.dim != spec.diag0.size()) {
    throw Error(ErrorKind::InvalidModel, "dim " + std::to_string(spec.dim) + " disagrees with " +
                                             std::to_string(spec.diag0.size()) + " diag0 entries");
  }
  std::vector<Rational> diag0;
  diag0.reserve(spec.diag0.size());
  for (const auto& s : spec.diag0) diag0.push_back(Rational::parse(s));
  std::map<int, std::vector<Rational>> bands;
  for (const auto& [offset, entries] : spec.bands) {
    auto& out = bands[offset];
    for (const auto& s : entries) out.push_back(Rational::parse(s));
  }
  return BandedOperator(std::move(diag0), std::move(bands), false);
}

BandedOperator build_model(const ModelSpec& spec, std::size_t min_dim) {
  if (spec.kind == ModelKind::Generic) return build_generic(spec);
  return build_mathieu(spec.kind, std::max({spec.dim, min_dim, std::size_t{2}}));
}

ModelSpec parse_model_spec(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw Error(ErrorKind::Parse, "model file needs a string field 'kind'");
  }

  auto rational_string = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(ErrorKind::Parse, "matrix entries must be rational strings such as \"3/4\"");
  };

  ModelSpec spec;
  spec.kind = parse_model_kind(doc["kind"].get<std::string>());
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned()) throw Error(ErrorKind::Parse, "'dim' must be a positive integer");
    spec.dim = doc["dim"].get<std::size_t>();
  }
  if (spec.kind != ModelKind::Generic) return spec;

  if (!doc.contains("diag0") || !doc["diag0"].is_array()) {
    throw Error(ErrorKind::Parse, "generic model needs a 'diag0' list");
  }
  for (const auto& v : doc["diag0"]) spec.diag0.push_back(rational_string(v));
  if (doc.contains("bands")) {
    if (!doc["bands"].is_object()) throw Error(ErrorKind::Parse, "'bands' must map offsets to lists");
    for (const auto& [key, list] : doc["bands"].items()) {
      int offset = 0;
      try {
        std::size_t used = 0;
        offset = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "band key '" + key + "' is not an integer offset");
      }
      if (!list.is_array()) throw Error(ErrorKind::Parse, "band '" + key + "' must be a list");
      auto& out = spec.bands[offset];
      for (const auto& v : list) out.push_back(rational_string(v));
    }
  }
  return spec;
}

ModelSpec load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open model file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model_spec(buffer.str());
}

}  // namespace secular
