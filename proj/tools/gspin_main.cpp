#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gspin/suite.hpp"

namespace {

// "0.5:2" -> doubled bounds {1, 4}; accepts integers and .5 halves.
std::pair<int, int> parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw gspin::ConfigError("window must be LO:HI, e.g. 0.5:2");
  auto parse_half = [](const std::string& s) -> int {
    if (s.empty()) throw gspin::ConfigError("empty window bound");
    double v = std::stod(s);
    double doubled = v * 2.0;
    long r = std::lround(doubled);
    if (std::abs(doubled - static_cast<double>(r)) > 1e-9)
      throw gspin::ConfigError("window bounds must be half-integers: " + s);
    return static_cast<int>(r);
  };
  return {parse_half(text.substr(0, colon)), parse_half(text.substr(colon + 1))};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path);
  if (!out) throw gspin::ConfigError("io-error: cannot write " + path);
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gspin: exact verifier for the algebraic universe of G-spin models"};
  std::string group = "cyclic:2";
  std::string window = "0.5:2";
  std::string suites = "all";
  std::string scalar = "exact";
  double tol = 1e-8;
  int samples = 500;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out_path;
  std::string eval_expr;
  std::string dump_what;
  std::int64_t max_cases = 2'000'000;
  bool stable_timing = false;

  app.add_option("--group", group,
                 "cyclic:N | dihedral:N | symmetric:N | file:PATH");
  app.add_option("--window", window, "half-integer range LO:HI, e.g. 0.5:2");
  app.add_option("--suite", suites,
                 "comma list of hopf,field,expectation,crossed,basic,quasi,dual,"
                 "iterated,matrixfield,tower,all");
  app.add_option("--scalar", scalar, "exact | float (identities are always exact)");
  app.add_option("--tol", tol, "PSD tolerance");
  app.add_option("--samples", samples, "sample count for large sweeps");
  app.add_option("--seed", seed, "seed for sampled sweeps");
  app.add_option("--max-cases", max_cases, "exhaustive-sweep threshold");
  app.add_option("--format", format, "json | text");
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--eval", eval_expr, "evaluate one expression and exit");
  app.add_option("--dump", dump_what,
                 "emit an algebra as JSON: field | double | dualdouble | crossed");
  app.add_flag("--stable-timing", stable_timing, "zero elapsed_ms in reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    gspin::SuiteConfig cfg;
    cfg.group = gspin::GroupSpec::parse(group);
    std::tie(cfg.win_lo2, cfg.win_hi2) = parse_window(window);
    cfg.suites = split_list(suites);
    if (scalar != "exact" && scalar != "float")
      throw gspin::ConfigError("--scalar must be exact or float");
    cfg.exact_scalars = scalar == "exact";
    cfg.tol = tol;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.max_cases = max_cases;
    cfg.stable_timing = stable_timing;
    if (format != "json" && format != "text")
      throw gspin::ConfigError("--format must be json or text");

    if (!eval_expr.empty()) {
      gspin::EvalSession session = gspin::EvalSession::make(cfg);
      write_output(out_path, session.eval(eval_expr) + "\n");
      return 0;
    }
    if (!dump_what.empty()) {
      gspin::GSpinUniverse u = gspin::GSpinUniverse::base(cfg);
      std::string payload;
      if (dump_what == "field") {
        payload = gspin::algebra_to_json(*u.field);
      } else if (dump_what == "double") {
        payload = gspin::algebra_to_json(*u.dg->alg);
      } else if (dump_what == "dualdouble") {
        payload = gspin::algebra_to_json(*u.dual->alg);
      } else if (dump_what == "crossed") {
        u.need_crossed(cfg);
        payload = gspin::algebra_to_json(*u.fxd);
      } else {
        throw gspin::ConfigError("--dump must be field, double, dualdouble or crossed");
      }
      write_output(out_path, payload + "\n");
      return 0;
    }

    gspin::Report rep = gspin::run_suite(cfg);
    write_output(out_path, format == "json" ? gspin::report_to_json(rep)
                                            : gspin::report_to_text(rep));
    return gspin::suite_exit_code(rep);
  } catch (const gspin::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const gspin::GroupError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const gspin::ExprError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
