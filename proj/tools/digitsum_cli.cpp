// Command-line front end: exact evaluation of digital sums and the related
// Takagi-like functions, exhaustive inequality verification, tableau
// construction, sharpness tables, and CSV plot data.
//
// Exit codes: 0 success (and, for verify, no counterexample); 1 a sweep found
// a counterexample or an internal check failed; 2 usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "digitsum/digits.hpp"
#include "digitsum/takagi.hpp"
#include "digitsum/tableau.hpp"
#include "digitsum/verifier.hpp"

namespace {

using digitsum::Base;
using digitsum::BAdicRational;
using digitsum::Integer;
using digitsum::Natural;
using digitsum::Rational;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Natural parse_natural(const std::string& text, const std::string& flag) {
  try {
    Natural n(text, 10);
    if (n < 0) throw UsageError(flag + " must be nonnegative");
    return n;
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": '" + text + "' is not a valid integer");
  }
}

void require_flag(const std::string& value, const std::string& flag) {
  if (value.empty()) throw UsageError("missing required flag " + flag);
}

json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

// Writes to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + out_path + "'");
  out << content;
}

// Fixed-point decimal with `digits` places, rounded half up, computed in
// exact integer arithmetic.
std::string decimal_string(const Rational& q, unsigned digits) {
  const bool negative = sgn(q) < 0;
  const Rational magnitude = abs(q);
  const Integer scale = digitsum::integer_pow(Integer(10), digits);
  Integer scaled;  // round(|q| * 10^digits)
  {
    const Rational t = magnitude * Rational(scale) + digitsum::make_rational(1, 2);
    mpz_fdiv_q(scaled.get_mpz_t(), t.get_num().get_mpz_t(),
               t.get_den().get_mpz_t());
  }
  const Integer whole = scaled / scale;
  std::string frac = Integer(scaled % scale).get_str();
  frac.insert(0, digits - frac.size(), '0');
  return (negative ? "-" : "") + whole.get_str() + "." + frac;
}

std::string tableau_text(const digitsum::Tableau& t) {
  std::size_t cell = 1;
  for (const auto& row : t.entries) {
    for (long long v : row) {
      cell = std::max(cell, std::to_string(v).size());
    }
  }
  std::ostringstream os;
  for (const auto& row : t.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << (j ? " " : "") << std::setw(static_cast<int>(cell)) << row[j];
    }
    os << "\n";
  }
  return os.str();
}

struct EvalArgs {
  std::string function;
  int base = 0;
  std::string n, m, k, l;
  int level = -1;
  unsigned depth = 40;
  std::string format = "text";
  std::string out;
};

int run_eval(const EvalArgs& args) {
  const Base b(args.base);
  const auto badic_x = [&]() {
    require_flag(args.k, "--k");
    if (args.level < 0) throw UsageError("missing required flag --level");
    return BAdicRational(parse_natural(args.k, "--k"),
                         static_cast<unsigned>(args.level), b);
  };

  std::optional<Rational> value;
  std::optional<digitsum::TruncatedValue> truncated;
  std::optional<bool> flag;
  if (args.function == "s") {
    require_flag(args.n, "--n");
    value = Rational(digitsum::digit_sum(parse_natural(args.n, "--n"), b));
  } else if (args.function == "S") {
    require_flag(args.n, "--n");
    value = Rational(
        digitsum::cumulative_digit_sum(parse_natural(args.n, "--n"), b));
  } else if (args.function == "Sigma") {
    require_flag(args.m, "--m");
    require_flag(args.n, "--n");
    value = Rational(digitsum::block_sum(parse_natural(args.m, "--m"),
                                         parse_natural(args.n, "--n"), b));
  } else if (args.function == "avg") {
    require_flag(args.m, "--m");
    require_flag(args.n, "--n");
    value = digitsum::average_digit_sum(parse_natural(args.m, "--m"),
                                        parse_natural(args.n, "--n"), b);
  } else if (args.function == "dominates") {
    require_flag(args.n, "--n");
    require_flag(args.m, "--m");
    flag = digitsum::digit_dominates(parse_natural(args.n, "--n"),
                                     parse_natural(args.m, "--m"), b);
  } else if (args.function == "h") {
    value = digitsum::h_at_badic(badic_x());
  } else if (args.function == "omega") {
    value = digitsum::omega_at_badic(badic_x());
  } else if (args.function == "g") {
    value = digitsum::g_exact(badic_x().value(), b);
  } else if (args.function == "phi") {
    value = digitsum::phi(badic_x().value(), b);
  } else if (args.function == "F") {
    truncated = digitsum::delange_F(badic_x().value(), b, args.depth);
  } else if (args.function == "residual") {
    require_flag(args.n, "--n");
    truncated = digitsum::delange_residual(parse_natural(args.n, "--n"), b,
                                           args.depth);
  } else if (args.function == "slack-super") {
    require_flag(args.m, "--m");
    require_flag(args.n, "--n");
    value = Rational(digitsum::superadditivity_slack(
        parse_natural(args.m, "--m"), parse_natural(args.n, "--n"), b));
  } else if (args.function == "slack-ternary") {
    require_flag(args.k, "--k");
    require_flag(args.l, "--l");
    require_flag(args.m, "--m");
    value = Rational(digitsum::ternary_slack(parse_natural(args.k, "--k"),
                                             parse_natural(args.l, "--l"),
                                             parse_natural(args.m, "--m")));
  } else if (args.function == "slack-general") {
    require_flag(args.m, "--m");
    require_flag(args.k, "--k");
    value = Rational(digitsum::general_bound_slack(
        parse_natural(args.m, "--m"), parse_natural(args.k, "--k"), b));
  } else if (args.function == "slack-times-b") {
    require_flag(args.n, "--n");
    require_flag(args.k, "--k");
    value = Rational(digitsum::times_b_slack(parse_natural(args.n, "--n"),
                                             parse_natural(args.k, "--k"), b));
  } else if (args.function == "slack-convex-h") {
    require_flag(args.m, "--m");
    require_flag(args.k, "--k");
    if (args.level < 0) throw UsageError("missing required flag --level");
    value = digitsum::approx_convexity_h_slack(
        parse_natural(args.m, "--m"), parse_natural(args.k, "--k"),
        static_cast<unsigned>(args.level), b);
  } else if (args.function == "slack-lev") {
    require_flag(args.m, "--m");
    require_flag(args.k, "--k");
    require_flag(args.l, "--l");
    if (args.level < 0) throw UsageError("missing required flag --level");
    value = digitsum::lev_slack(
        parse_natural(args.m, "--m"), parse_natural(args.k, "--k"),
        parse_natural(args.l, "--l"), static_cast<unsigned>(args.level));
  } else {
    throw UsageError("unknown eval function '" + args.function + "'");
  }

  std::string text;
  if (args.format == "json") {
    json j;
    if (flag) {
      j["value"] = *flag;
    } else if (truncated) {
      j["value"] = rational_json(truncated->value);
      j["error_bound"] = rational_json(truncated->error_bound);
      j["depth"] = truncated->depth;
    } else {
      j["value"] = rational_json(*value);
    }
    text = j.dump(2) + "\n";
  } else if (args.format == "text") {
    if (flag) {
      text = *flag ? "true\n" : "false\n";
    } else if (truncated) {
      text = "value=" + truncated->value.get_str() +
             " error_bound=" + truncated->error_bound.get_str() +
             " depth=" + std::to_string(truncated->depth) + "\n";
    } else {
      text = value->get_str() + "\n";
    }
  } else {
    throw UsageError("eval supports --format text|json");
  }
  emit(args.out, text);
  return 0;
}

struct VerifyArgs {
  std::string theorem;
  int base = 2;
  long long max_m = -1, max_n = -1, max_k = -1;
  int level = -1;
  long long witness_cap = 1000;
  int jobs = 1;
  unsigned depth = 40;
  std::string format = "text";
  std::string out;
};

int run_verify_tableau(const VerifyArgs& args) {
  if (args.max_k < 1) throw UsageError("verify tableau requires --max-k >= 1");
  const Base b(args.base);
  json violations = json::array();
  for (long long k = 1; k <= args.max_k; ++k) {
    const auto report = digitsum::verify_tableau(digitsum::build_tableau(b, k));
    for (const auto& v : report.violations) {
      violations.push_back({{"k", k},
                            {"row", v.row},
                            {"col", v.col},
                            {"detail", v.detail}});
    }
  }
  std::string text;
  if (args.format == "json") {
    json j;
    j["theorem_id"] = "tableau";
    j["range"] = "b=" + std::to_string(args.base) + ", 1<=k<=" +
                 std::to_string(args.max_k);
    j["checked"] = args.max_k;
    j["violations"] = violations;
    text = j.dump(2) + "\n";
  } else {
    text = "theorem:    tableau\nrange:      b=" + std::to_string(args.base) +
           ", 1<=k<=" + std::to_string(args.max_k) +
           "\nchecked:    " + std::to_string(args.max_k) +
           "\nviolations: " + std::to_string(violations.size()) + "\n";
  }
  emit(args.out, text);
  return violations.empty() ? 0 : 1;
}

int run_verify_delange(const VerifyArgs& args) {
  if (args.max_n < 1) throw UsageError("verify delange requires --max-n >= 1");
  const Base b(args.base);
  unsigned long long failures = 0;
  unsigned long long exact_zero = 0;
  Rational max_abs = 0;
  Rational max_bound = 0;
  for (long long n = 1; n <= args.max_n; ++n) {
    const auto r = digitsum::delange_residual(Natural(static_cast<long>(n)), b,
                                              args.depth);
    const Rational mag = abs(r.value);
    if (mag > r.error_bound) ++failures;
    if (sgn(r.value) == 0) ++exact_zero;
    max_abs = std::max(max_abs, mag);
    max_bound = std::max(max_bound, r.error_bound);
  }
  std::string text;
  if (args.format == "json") {
    json j;
    j["theorem_id"] = "delange";
    j["range"] = "b=" + std::to_string(args.base) + ", 1<=n<=" +
                 std::to_string(args.max_n) +
                 ", depth=" + std::to_string(args.depth);
    j["checked"] = args.max_n;
    j["outside_bound"] = failures;
    j["exact_zero"] = exact_zero;
    j["max_abs_residual"] = rational_json(max_abs);
    j["max_error_bound"] = rational_json(max_bound);
    text = j.dump(2) + "\n";
  } else {
    text = "theorem:        delange\nrange:          b=" +
           std::to_string(args.base) + ", 1<=n<=" + std::to_string(args.max_n) +
           ", depth=" + std::to_string(args.depth) +
           "\nchecked:        " + std::to_string(args.max_n) +
           "\noutside bound:  " + std::to_string(failures) +
           "\nexact zeros:    " + std::to_string(exact_zero) +
           "\nmax |residual|: " + max_abs.get_str() +
           "\nmax bound:      " + max_bound.get_str() + "\n";
  }
  emit(args.out, text);
  return failures == 0 ? 0 : 1;
}

int run_verify(const VerifyArgs& args) {
  if (args.theorem == "tableau") return run_verify_tableau(args);
  if (args.theorem == "delange") return run_verify_delange(args);

  const auto id = digitsum::theorem_from_name(args.theorem);
  if (!id) throw UsageError("unknown theorem '" + args.theorem + "'");
  digitsum::SweepRange range;
  range.base = args.base;
  range.max_m = args.max_m;
  range.max_n = args.max_n;
  range.max_k = args.max_k;
  range.level = args.level;
  range.witness_cap = args.witness_cap;
  range.jobs = args.jobs;
  if (args.format != "json" && args.format != "text") {
    throw UsageError("verify supports --format text|json");
  }
  digitsum::SweepReport report;
  try {
    report = digitsum::sweep(*id, range);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(args.out, args.format == "json" ? report_to_json(report) + "\n"
                                       : report_to_text(report));
  return report.counterexamples.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact digital-sum identities, inequalities and plots"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate one operation exactly");
  eval->add_option("function", eval_args.function,
                   "s|S|Sigma|avg|dominates|h|omega|g|phi|F|residual|"
                   "slack-super|slack-ternary|slack-general|slack-times-b|"
                   "slack-convex-h|slack-lev")
      ->required();
  eval->add_option("--base", eval_args.base)->required();
  eval->add_option("--n", eval_args.n);
  eval->add_option("--m", eval_args.m);
  eval->add_option("--k", eval_args.k);
  eval->add_option("--l", eval_args.l);
  eval->add_option("--level", eval_args.level);
  eval->add_option("--depth", eval_args.depth);
  eval->add_option("--format", eval_args.format);
  eval->add_option("--out", eval_args.out);

  VerifyArgs verify_args;
  auto* verify =
      app.add_subcommand("verify", "sweep an inequality over a full range");
  verify
      ->add_option("theorem", verify_args.theorem,
                   "superadditivity|ternary|general-bound|times-b|convex-h|"
                   "convex-lev|tableau|delange")
      ->required();
  verify->add_option("--base", verify_args.base);
  verify->add_option("--max-m", verify_args.max_m);
  verify->add_option("--max-n", verify_args.max_n);
  verify->add_option("--max-k", verify_args.max_k);
  verify->add_option("--level", verify_args.level);
  verify->add_option("--witness-cap", verify_args.witness_cap);
  verify->add_option("--jobs", verify_args.jobs);
  verify->add_option("--depth", verify_args.depth);
  verify->add_option("--format", verify_args.format);
  verify->add_option("--out", verify_args.out);

  struct {
    int base = 0;
    long long k = 0;
    std::string format = "text";
    std::string out;
  } tab_args;
  auto* tab = app.add_subcommand("tableau", "build the canonical tableau");
  tab->add_option("--base", tab_args.base)->required();
  tab->add_option("--k", tab_args.k)->required();
  tab->add_option("--format", tab_args.format);
  tab->add_option("--out", tab_args.out);

  struct {
    int base = 0;
    long long max_n = 8;
    std::string format = "text";
    std::string out;
  } sharp_args;
  auto* sharp =
      app.add_subcommand("sharpness", "second-difference ratios along the "
                                      "extremal family of the general bound");
  sharp->add_option("--base", sharp_args.base)->required();
  sharp->add_option("--max-n", sharp_args.max_n);
  sharp->add_option("--format", sharp_args.format);
  sharp->add_option("--out", sharp_args.out);

  struct {
    std::string function;
    int base = 0;
    int level = -1;
    long long samples = -1;
    unsigned depth = 40;
    std::string out;
  } plot_args;
  auto* plot =
      app.add_subcommand("plot", "emit exact samples on the k/b^level grid, "
                                 "or truncated decimal samples on i/N");
  plot->add_option("function", plot_args.function, "h|omega|g")->required();
  plot->add_option("--base", plot_args.base)->required();
  plot->add_option("--level", plot_args.level,
                   "exact mode: sample at every k/base^level");
  plot->add_option("--samples", plot_args.samples,
                   "decimal mode: N+1 uniform samples i/N, series cut at "
                   "--depth terms");
  plot->add_option("--depth", plot_args.depth);
  plot->add_option("--out", plot_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return run_eval(eval_args);
    if (verify->parsed()) return run_verify(verify_args);

    if (tab->parsed()) {
      const Base b(tab_args.base);
      const auto t = digitsum::build_tableau(b, tab_args.k);
      const auto check = digitsum::verify_tableau(t);
      if (!check.valid) {
        std::cerr << "error: constructed tableau failed verification\n";
        return 1;
      }
      std::string text;
      if (tab_args.format == "json") {
        json j;
        j["base"] = tab_args.base;
        j["k"] = tab_args.k;
        j["entries"] = t.entries;
        text = j.dump(2) + "\n";
      } else if (tab_args.format == "text") {
        text = tableau_text(t);
      } else {
        throw UsageError("tableau supports --format text|json");
      }
      emit(tab_args.out, text);
      return 0;
    }

    if (sharp->parsed()) {
      const Base b(sharp_args.base);
      if (sharp_args.max_n < 1) throw UsageError("--max-n must be >= 1");
      const long long limit = (sharp_args.base + 1) / 2;
      std::string text;
      if (sharp_args.format == "csv") {
        text = "n,ratio_num,ratio_den\n";
        for (long long n = 1; n <= sharp_args.max_n; ++n) {
          const Rational r =
              digitsum::sharpness_ratio(b, static_cast<unsigned>(n));
          text += std::to_string(n) + "," + r.get_num().get_str() + "," +
                  r.get_den().get_str() + "\n";
        }
      } else if (sharp_args.format == "json") {
        json rows = json::array();
        for (long long n = 1; n <= sharp_args.max_n; ++n) {
          const Rational r =
              digitsum::sharpness_ratio(b, static_cast<unsigned>(n));
          rows.push_back({{"n", n}, {"ratio", rational_json(r)}});
        }
        json j;
        j["base"] = sharp_args.base;
        j["bound"] = limit;
        j["ratios"] = rows;
        text = j.dump(2) + "\n";
      } else if (sharp_args.format == "text") {
        text = "bound floor((b+1)/2) = " + std::to_string(limit) + "\n";
        for (long long n = 1; n <= sharp_args.max_n; ++n) {
          const Rational r =
              digitsum::sharpness_ratio(b, static_cast<unsigned>(n));
          text += "n=" + std::to_string(n) + " ratio=" + r.get_str() + "\n";
        }
      } else {
        throw UsageError("sharpness supports --format text|json|csv");
      }
      emit(sharp_args.out, text);
      return 0;
    }

    if (plot->parsed()) {
      const Base b(plot_args.base);
      if (plot_args.function != "h" && plot_args.function != "omega" &&
          plot_args.function != "g") {
        throw UsageError("plot supports h|omega|g");
      }
      if ((plot_args.level >= 0) == (plot_args.samples >= 0)) {
        throw UsageError("plot takes exactly one of --level or --samples");
      }

      std::string text;
      if (plot_args.level >= 0) {
        if (plot_args.level > 12) {
          throw UsageError("--level must be between 0 and 12");
        }
        const unsigned level = static_cast<unsigned>(plot_args.level);
        const Integer bn =
            digitsum::integer_pow(Integer(plot_args.base), level);
        text = "x_num,x_den,y_num,y_den\n";
        for (Integer k = 0; k <= bn; ++k) {
          Rational y;
          if (plot_args.function == "h") {
            y = digitsum::h_at_badic(BAdicRational(k, level, b));
          } else if (plot_args.function == "omega") {
            y = digitsum::omega_at_badic(BAdicRational(k, level, b));
          } else {
            y = digitsum::g_exact(digitsum::make_rational(k, bn), b);
          }
          const Rational x = digitsum::make_rational(k, bn);
          text += x.get_num().get_str() + "," + x.get_den().get_str() + "," +
                  y.get_num().get_str() + "," + y.get_den().get_str() + "\n";
        }
      } else {
        if (plot_args.samples < 1 || plot_args.samples > 10000000) {
          throw UsageError("--samples must be between 1 and 10^7");
        }
        if (plot_args.depth < 1) throw UsageError("--depth must be >= 1");
        text = "x,value\n";
        for (long long i = 0; i <= plot_args.samples; ++i) {
          const Rational x = digitsum::make_rational(
              static_cast<long>(i), static_cast<long>(plot_args.samples));
          Rational y;
          if (plot_args.function == "h") {
            y = digitsum::h_partial(x, b, plot_args.depth);
          } else if (plot_args.function == "omega") {
            y = digitsum::omega_partial(x, b, plot_args.depth);
          } else {
            y = digitsum::g_exact(x, b);
          }
          text += decimal_string(x, 17) + "," + decimal_string(y, 17) + "\n";
        }
      }
      emit(plot_args.out, text);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
