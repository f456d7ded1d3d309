#include "secular/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "secular/eplocate.hpp"
#include "secular/error.hpp"
#include "secular/rspt.hpp"

namespace secular::cli {

namespace {

using nlohmann::ordered_json;

constexpr unsigned kHumanDigits = 10;

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::Series, "series"}, {Command::Ese, "ese"},     {Command::Ep, "ep"},
    {Command::Table, "table"},   {Command::Check, "check"}, {Command::Radius, "radius"},
};

std::size_t parse_index(const std::string& token, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size() || token.front() == '-') {
    throw Error(ErrorKind::InvalidArgument, std::string("bad ") + what + " '" + token + "'");
  }
  return static_cast<std::size_t>(v);
}

std::string join_rationals(std::span<const Rational> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ", ";
    s += values[i].to_string();
  }
  return s;
}

ordered_json rational_list(std::span<const Rational> values) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["command"] = to_string(c.command);
  j["model"] = c.model_label;
  j["states"] = c.states;
  if (c.command == Command::Table) {
    j["orders"] = c.orders;
  } else {
    j["order"] = c.order;
  }
  j["mode"] = to_string(c.mode);
  j["precision_bits"] = c.precision_bits;
  j["seed"] = c.seed;
  if (c.lambda) j["lambda"] = *c.lambda;
  return j;
}

unsigned full_digits(const RunConfig& c) { return decimal_digits(c.precision_bits); }

LocateOptions locate_options(const RunConfig& c) {
  LocateOptions o;
  o.precision_bits = c.precision_bits;
  o.seed = c.seed;
  return o;
}

BandedOperator operator_for(const RunConfig& c) {
  const std::size_t top = *std::max_element(c.states.begin(), c.states.end());
  return build_model(c.model, minimal_dim(top, c.order, 1));
}

void print_csv_line(std::ostream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& cell : cells) {
    if (!first) out << ',';
    out << cell;
    first = false;
  }
  out << '\n';
}

int run_series(const RunConfig& c, std::ostream& out) {
  const BandedOperator op = operator_for(c);
  std::vector<EigenSeries> all;
  for (auto s : c.states) all.push_back(rs_series(op, s, c.order));

  switch (c.format) {
    case OutputFormat::Human:
      for (const auto& es : all) {
        if (all.size() > 1) out << "E_" << es.state << ": ";
        out << join_rationals(es.series.coeffs()) << '\n';
      }
      break;
    case OutputFormat::Json: {
      ordered_json doc;
      doc["config"] = config_json(c);
      doc["series"] = ordered_json::array();
      for (const auto& es : all) {
        ordered_json row;
        row["state"] = es.state;
        row["order"] = es.series.order();
        row["coeffs"] = rational_list(es.series.coeffs());
        doc["series"].push_back(row);
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "state,j,coeff\n";
      for (const auto& es : all) {
        for (std::size_t j = 0; j <= es.series.order(); ++j) {
          print_csv_line(out, {std::to_string(es.state), std::to_string(j), es.series[j].to_string()});
        }
      }
      break;
  }
  return kSuccess;
}

int run_ese(const RunConfig& c, std::ostream& out) {
  const BandedOperator op = operator_for(c);
  std::vector<EigenSeries> all;
  for (auto s : c.states) all.push_back(rs_series(op, s, c.order));
  const EsePolynomial ese = build_ese(all);
  const Polynomial disc = ese_discriminant(ese, c.mode);

  switch (c.format) {
    case OutputFormat::Human:
      for (std::size_t j = 1; j <= ese.n_states(); ++j) {
        out << "p_" << j << "(lambda) = " << ese.p[j - 1].to_string("lambda") << '\n';
      }
      out << "discriminant(lambda) = " << disc.to_string("lambda") << '\n';
      break;
    case OutputFormat::Json: {
      ordered_json doc;
      doc["config"] = config_json(c);
      doc["p"] = ordered_json::array();
      for (const auto& p : ese.p) doc["p"].push_back(rational_list(p.coeffs()));
      doc["discriminant"] = rational_list(disc.coeffs());
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "name,j,coeff\n";
      for (std::size_t j = 1; j <= ese.n_states(); ++j) {
        const auto coeffs = ese.p[j - 1].coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
          print_csv_line(out, {"p" + std::to_string(j), std::to_string(k), coeffs[k].to_string()});
        }
      }
      for (std::size_t k = 0; k < disc.coeffs().size(); ++k) {
        print_csv_line(out, {"discriminant", std::to_string(k), disc.coeffs()[k].to_string()});
      }
      break;
  }
  return kSuccess;
}

ordered_json estimate_json(const ExceptionalPointEstimate& e, unsigned digits) {
  ordered_json row;
  row["K"] = e.order;
  row["lambda_p"] = {{"re", format(e.lambda_p.re, digits)}, {"im", format(e.lambda_p.im, digits)}};
  row["modulus"] = format(e.modulus, digits);
  row["gap"] = format(e.coalescence_gap, digits);
  row["residual"] = format(e.discriminant_residual, digits);
  return row;
}

int report_rows(const RunConfig& c, const std::vector<EpTableRow>& rows, bool with_reference, std::ostream& out) {
  const unsigned digits = full_digits(c);
  PrecisionGuard guard(c.precision_bits);
  const Real reference(kMathieuReferenceModulus);

  switch (c.format) {
    case OutputFormat::Human:
      out << std::left << std::setw(4) << "K" << std::setw(15) << "|lambda_p|" << std::setw(30) << "lambda_p"
          << std::setw(12) << "gap";
      if (with_reference) out << "deviation";
      out << '\n';
      for (const auto& row : rows) {
        out << std::left << std::setw(4) << row.order;
        if (!row.estimate) {
          out << "failed: " << row.error << '\n';
          continue;
        }
        const auto& e = *row.estimate;
        const std::string pair = format_fixed(e.lambda_p.re, 9) + " +- " +
                                 format_fixed(boost::multiprecision::abs(e.lambda_p.im), 9) + "i";
        out << std::setw(15) << format_fixed(e.modulus, 9) << std::setw(30) << pair << std::setw(12)
            << format(e.coalescence_gap, 2);
        if (with_reference) out << format(Real(e.modulus - reference), 3);
        out << '\n';
      }
      if (with_reference) out << "reference |lambda_p| = " << kMathieuReferenceModulus << '\n';
      break;
    case OutputFormat::Json: {
      ordered_json doc;
      doc["config"] = config_json(c);
      doc["rows"] = ordered_json::array();
      for (const auto& row : rows) {
        if (row.estimate) {
          doc["rows"].push_back(estimate_json(*row.estimate, digits));
        } else {
          doc["rows"].push_back({{"K", row.order}, {"error", row.error}});
        }
      }
      doc["reference"] = kMathieuReferenceModulus;
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "K,re,im,modulus,gap,residual,deviation,error\n";
      for (const auto& row : rows) {
        if (!row.estimate) {
          print_csv_line(out, {std::to_string(row.order), "", "", "", "", "", "", "\"" + row.error + "\""});
          continue;
        }
        const auto& e = *row.estimate;
        print_csv_line(out, {std::to_string(e.order), format(e.lambda_p.re, digits), format(e.lambda_p.im, digits),
                             format(e.modulus, digits), format(e.coalescence_gap, digits),
                             format(e.discriminant_residual, digits), format(Real(e.modulus - reference), digits),
                             ""});
      }
      break;
  }
  const bool any_ok = std::any_of(rows.begin(), rows.end(), [](const EpTableRow& r) { return r.estimate.has_value(); });
  return any_ok ? kSuccess : kNumericalFailure;
}

int run_ep(const RunConfig& c, std::ostream& out) {
  const ExceptionalPointEstimate e = locate_ep(c.model, c.states, c.order, c.mode, locate_options(c));
  EpTableRow row;
  row.order = c.order;
  row.estimate = e;
  return report_rows(c, {row}, false, out);
}

int run_table(const RunConfig& c, std::ostream& out) {
  const auto rows = ep_table(c.model, c.states, c.orders, c.mode, locate_options(c));
  return report_rows(c, rows, true, out);
}

int run_check(const RunConfig& c, std::ostream& out) {
  if (!c.lambda) throw Error(ErrorKind::InvalidArgument, "check needs --lambda");
  const Rational lambda = Rational::parse(*c.lambda);
  const BandedOperator op = operator_for(c);
  const std::size_t top = *std::max_element(c.states.begin(), c.states.end());
  const std::vector<double> oracle = oracle_eigenvalues(c.model, lambda.to_double(), c.oracle_dim, top);

  PrecisionGuard guard(c.precision_bits);
  const Complex x(to_real(lambda.value()));
  struct Line {
    std::size_t state;
    double series;
    double oracle;
    double delta;
  };
  std::vector<Line> lines;
  double worst = 0.0;
  for (auto s : c.states) {
    const EigenSeries es = rs_series(op, s, c.order);
    const double v = evaluate(es.series, x, c.precision_bits).re.convert_to<double>();
    const double o = oracle[s - 1];
    lines.push_back({s, v, o, std::abs(v - o)});
    worst = std::max(worst, std::abs(v - o));
  }

  auto num = [](double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
  };
  switch (c.format) {
    case OutputFormat::Human:
      out << "lambda = " << lambda.to_string() << ", order " << c.order << ", oracle dim " << c.oracle_dim << '\n';
      for (const auto& l : lines) {
        out << "E_" << l.state << ": series " << num(l.series) << "  oracle " << num(l.oracle) << "  |delta| "
            << num(l.delta) << '\n';
      }
      out << "max |delta| = " << num(worst) << '\n';
      break;
    case OutputFormat::Json: {
      ordered_json doc;
      doc["config"] = config_json(c);
      doc["oracle_dim"] = c.oracle_dim;
      doc["states"] = ordered_json::array();
      for (const auto& l : lines) {
        doc["states"].push_back({{"state", l.state}, {"series", num(l.series)}, {"oracle", num(l.oracle)},
                                 {"delta", num(l.delta)}});
      }
      doc["max_delta"] = num(worst);
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "state,series,oracle,delta\n";
      for (const auto& l : lines) {
        print_csv_line(out, {std::to_string(l.state), num(l.series), num(l.oracle), num(l.delta)});
      }
      break;
  }
  return kSuccess;
}

int run_radius(const RunConfig& c, std::ostream& out) {
  const BandedOperator op = operator_for(c);
  auto num = [](double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
  };
  std::vector<std::pair<std::size_t, RadiusEstimate>> results;
  for (auto s : c.states) results.emplace_back(s, estimate_radius(rs_series(op, s, c.order)));

  switch (c.format) {
    case OutputFormat::Human:
      for (const auto& [s, r] : results) {
        out << "E_" << s << ": radius " << num(r.radius) << " +- " << num(r.uncertainty) << " ("
            << to_string(r.method) << "; root test " << num(r.root_test) << ")\n";
      }
      break;
    case OutputFormat::Json: {
      ordered_json doc;
      doc["config"] = config_json(c);
      doc["estimates"] = ordered_json::array();
      for (const auto& [s, r] : results) {
        doc["estimates"].push_back({{"state", s},
                                    {"radius", num(r.radius)},
                                    {"uncertainty", num(r.uncertainty)},
                                    {"method", to_string(r.method)},
                                    {"root_test", num(r.root_test)},
                                    {"ratio_fit", num(r.ratio_fit)}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "state,radius,uncertainty,method,root_test,ratio_fit\n";
      for (const auto& [s, r] : results) {
        print_csv_line(out, {std::to_string(s), num(r.radius), num(r.uncertainty), to_string(r.method),
                             num(r.root_test), num(r.ratio_fit)});
      }
      break;
  }
  return kSuccess;
}

}  // namespace

std::string to_string(Command command) {
  for (const auto& [c, name] : kCommands) {
    if (c == command) return name;
  }
  return "unknown";
}

std::vector<std::size_t> parse_orders(const std::string& text) {
  std::vector<std::size_t> orders;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::size_t lo = parse_index(text.substr(0, dots), "order");
    const std::size_t hi = parse_index(text.substr(dots + 2), "order");
    if (hi < lo) throw Error(ErrorKind::InvalidArgument, "order range '" + text + "' is descending");
    for (std::size_t k = lo; k <= hi; ++k) orders.push_back(k);
  } else {
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) orders.push_back(parse_index(token, "order"));
  }
  if (orders.empty()) throw Error(ErrorKind::InvalidArgument, "empty order list");
  if (!std::is_sorted(orders.begin(), orders.end())) {
    throw Error(ErrorKind::InvalidArgument, "orders must be ascending");
  }
  return orders;
}

std::vector<std::size_t> parse_states(const std::string& text) {
  std::vector<std::size_t> states;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const std::size_t s = parse_index(token, "state");
    if (s == 0) throw Error(ErrorKind::InvalidArgument, "states are 1-based");
    states.push_back(s);
  }
  if (states.empty()) throw Error(ErrorKind::InvalidArgument, "empty state list");
  return states;
}

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Degenerate:
    case ErrorKind::DimensionTooSmall:
    case ErrorKind::InvalidModel:
      return kModelError;
    case ErrorKind::NonConvergence:
    case ErrorKind::NoExceptionalPoint:
    case ErrorKind::TooFewCoefficients:
    case ErrorKind::OracleConvergence:
    case ErrorKind::DivisionByZero:
    case ErrorKind::InexactDivision:
    case ErrorKind::ZeroPolynomial:
      return kNumericalFailure;
    case ErrorKind::OrderMismatch:
    case ErrorKind::Parse:
    case ErrorKind::DuplicateState:
    case ErrorKind::InvalidArgument:
      return kConfigError;
  }
  return kConfigError;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Series: return run_series(config, out);
      case Command::Ese: return run_ese(config, out);
      case Command::Ep: return run_ep(config, out);
      case Command::Table: return run_table(config, out);
      case Command::Check: return run_check(config, out);
      case Command::Radius: return run_radius(config, out);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kConfigError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effective secular equation: perturbation series, resummation and exceptional points"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string model_name = "mathieu-2pi-even";
  std::string model_file;
  std::string states_text;
  std::size_t state = 0;
  std::size_t order = 13;
  std::string orders_text = "10..13";
  std::string mode = "full";
  unsigned precision_bits = kDefaultPrecisionBits;
  std::string format = "human";
  std::uint64_t seed = RunConfig{}.seed;
  std::string lambda;
  std::size_t dim = 0;
  std::size_t oracle_dim = 40;

  auto* model_opt = app.add_option("--model", model_name, "Built-in model name");
  app.add_option("--model-file", model_file, "JSON model file")->excludes(model_opt);
  app.add_option("--states", states_text, "Comma-separated 1-based state indices (default 1,2)");
  app.add_option("--state", state, "Single state index");
  app.add_option("--order", order, "Perturbation order K");
  app.add_option("--orders", orders_text, "Order range a..b or list for `table`");
  app.add_option("--mode", mode, "Discriminant truncation: full | truncate-after");
  app.add_option("--precision-bits", precision_bits, "Working precision in bits")->check(CLI::Range(53u, 100000u));
  app.add_option("--format", format, "human | json | csv");
  app.add_option("--seed", seed, "Root-finder initialisation seed");
  app.add_option("--lambda", lambda, "Coupling for `check` (rational or decimal)");
  app.add_option("--dim", dim, "Matrix dimension for built-in models (0 = automatic)");
  app.add_option("--oracle-dim", oracle_dim, "Dense oracle dimension for `check`");

  app.add_subcommand("series", "Exact perturbation coefficients of the selected states");
  app.add_subcommand("ese", "Secular-equation coefficients and discriminant in lambda");
  app.add_subcommand("ep", "Exceptional point nearest the origin at one order");
  app.add_subcommand("table", "Exceptional point over a range of orders");
  app.add_subcommand("check", "Compare partial sums with dense diagonalisation at --lambda");
  app.add_subcommand("radius", "Convergence radius from the coefficient sequence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }

  RunConfig config;
  try {
    for (const auto& [command, name] : kCommands) {
      if (app.got_subcommand(name)) config.command = command;
    }
    if (!model_file.empty()) {
      config.model = load_model_file(model_file);
      config.model_label = model_file;
    } else {
      config.model.kind = parse_model_kind(model_name);
      config.model_label = model_name;
      if (config.model.kind == ModelKind::Generic) {
        throw Error(ErrorKind::InvalidArgument, "generic models are read with --model-file");
      }
    }
    if (dim != 0) config.model.dim = dim;
    if (state != 0) {
      config.states = {state};
    } else if (!states_text.empty()) {
      config.states = parse_states(states_text);
    } else if (config.command == Command::Series || config.command == Command::Radius) {
      config.states = {1};
    }
    config.order = order;
    config.orders = parse_orders(orders_text);
    config.mode = parse_truncation_mode(mode);
    config.precision_bits = precision_bits;
    if (format == "human") {
      config.format = OutputFormat::Human;
    } else if (format == "json") {
      config.format = OutputFormat::Json;
    } else if (format == "csv") {
      config.format = OutputFormat::Csv;
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown format '" + format + "'");
    }
    config.seed = seed;
    if (!lambda.empty()) config.lambda = lambda;
    config.oracle_dim = oracle_dim;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return run(config, out, err);
}

}  // namespace secular::cli
