#include "digitsum/verifier.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "digitsum/digits.hpp"
#include "digitsum/takagi.hpp"

namespace digitsum {

Integer superadditivity_slack(const Natural& m, const Natural& n, Base b) {
  detail::require_nonnegative(m, "superadditivity_slack");
  detail::require_nonnegative(n, "superadditivity_slack");
  return cumulative_digit_sum(m + n, b) - cumulative_digit_sum(m, b) -
         cumulative_digit_sum(n, b) - std::min(m, n);
}

Integer ternary_slack(const Natural& k, const Natural& l, const Natural& m) {
  detail::require_nonnegative(l, "ternary_slack");
  if (l > k || k > m) {
    throw std::invalid_argument("ternary_slack requires 0 <= l <= k <= m");
  }
  const Base b3(3);
  const Integer lhs = cumulative_digit_sum(m + k + l, b3) +
                      cumulative_digit_sum(m - k, b3) +
                      cumulative_digit_sum(m - l, b3) -
                      3 * cumulative_digit_sum(m, b3);
  return 2 * k + l - lhs;
}

Integer general_bound_slack(const Natural& m, const Natural& k, Base b) {
  detail::require_nonnegative(k, "general_bound_slack");
  if (k > m) throw std::invalid_argument("general_bound_slack requires k <= m");
  const Integer lhs = cumulative_digit_sum(m + k, b) +
                      cumulative_digit_sum(m - k, b) -
                      2 * cumulative_digit_sum(m, b);
  return ((b.value() + 1) / 2) * k - lhs;
}

Integer times_b_slack(const Natural& n, const Natural& k, Base b) {
  detail::require_nonnegative(n, "times_b_slack");
  detail::require_nonnegative(k, "times_b_slack");
  const long base = b.value();
  return base * block_sum(n, n + k, b) + Integer(base) * (base - 1) * k / 2 -
         block_sum(n, n + base * k, b);
}

Rational times_b_average_slack(const Natural& n, const Natural& k, Base b) {
  if (k < 1) {
    throw std::invalid_argument("times_b_average_slack requires k >= 1");
  }
  return make_rational(times_b_slack(n, k, b), b.value() * k);
}

Rational approx_convexity_h_slack(const Natural& m, const Natural& k,
                                  unsigned level, Base b) {
  detail::require_nonnegative(k, "approx_convexity_h_slack");
  if (k > m) {
    throw std::invalid_argument("approx_convexity_h_slack requires k <= m");
  }
  const Integer bn = integer_pow(Integer(b.value()), level);
  if (m + k > bn) {
    throw std::invalid_argument(
        "approx_convexity_h_slack requires m + k <= base^level");
  }
  const Rational lo = h_at_badic(BAdicRational(m - k, level, b));
  const Rational hi = h_at_badic(BAdicRational(m + k, level, b));
  const Rational mid = h_at_badic(BAdicRational(m, level, b));
  return lo + hi + make_rational(((b.value() + 1) / 2) * k, bn) - 2 * mid;
}

Rational lev_slack(const Natural& m, const Natural& k, const Natural& l,
                   unsigned level) {
  detail::require_nonnegative(l, "lev_slack");
  if (l > k || k > m) {
    throw std::invalid_argument("lev_slack requires 0 <= l <= k <= m");
  }
  const Base b3(3);
  const Integer tn = integer_pow(Integer(3), level);
  if (m + k + l > tn) {
    throw std::invalid_argument("lev_slack requires m + k + l <= 3^level");
  }
  const Rational hx = h_at_badic(BAdicRational(m - k, level, b3));
  const Rational hy = h_at_badic(BAdicRational(m - l, level, b3));
  const Rational hz = h_at_badic(BAdicRational(m + k + l, level, b3));
  const Rational mid = h_at_badic(BAdicRational(m, level, b3));
  return hx + hy + hz + make_rational(2 * k + l, tn) - 3 * mid;
}

Rational sharpness_ratio(Base b, unsigned n) {
  if (n < 1) throw std::invalid_argument("sharpness_ratio requires n >= 1");
  const Integer bn = integer_pow(Integer(b.value()), n);
  if (b.value() % 2 == 0) {
    const Integer half = bn / 2;
    return make_rational(
        cumulative_digit_sum(bn, b) - 2 * cumulative_digit_sum(half, b), half);
  }
  const Integer kn = (bn - 1) / 2;
  return make_rational(cumulative_digit_sum(2 * kn, b) -
                           2 * cumulative_digit_sum(kn, b),
                       kn);
}

// ---------------------------------------------------------------------------
// Sweep engine
// ---------------------------------------------------------------------------

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::kSuperadditivity:
      return "superadditivity";
    case TheoremId::kTernary:
      return "ternary";
    case TheoremId::kGeneralBound:
      return "general-bound";
    case TheoremId::kTimesB:
      return "times-b";
    case TheoremId::kConvexH:
      return "convex-h";
    case TheoremId::kConvexLev:
      return "convex-lev";
  }
  return "unknown";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  if (name == "superadditivity") return TheoremId::kSuperadditivity;
  if (name == "ternary") return TheoremId::kTernary;
  if (name == "general-bound" || name == "general_bound") {
    return TheoremId::kGeneralBound;
  }
  if (name == "times-b" || name == "times_b") return TheoremId::kTimesB;
  if (name == "convex-h" || name == "convex_h") return TheoremId::kConvexH;
  if (name == "convex-lev" || name == "convex_lev") {
    return TheoremId::kConvexLev;
  }
  return std::nullopt;
}

namespace {

long digit_sum_ll(long n, long base) {
  long s = 0;
  while (n > 0) {
    s += n % base;
    n /= base;
  }
  return s;
}

// table[i] = S_b(i) for 0 <= i <= max_n.
std::vector<Integer> prefix_table(long max_n, long base) {
  std::vector<Integer> table(static_cast<std::size_t>(max_n) + 1);
  table[0] = 0;
  for (long i = 0; i < max_n; ++i) {
    table[static_cast<std::size_t>(i) + 1] =
        table[static_cast<std::size_t>(i)] + digit_sum_ll(i, base);
  }
  return table;
}

using Tuple = std::vector<long long>;

struct Partial {
  unsigned long long checked = 0;
  bool has_min = false;
  Rational min_slack;
  Tuple min_at;
  unsigned long long equality_count = 0;
  std::set<Tuple> witnesses;
  std::set<Tuple> counterexamples;
};

// Keeps the cap lexicographically smallest tuples.
void bounded_insert(std::set<Tuple>& dst, const Tuple& t, long long cap) {
  if (cap <= 0) return;
  if (static_cast<long long>(dst.size()) < cap) {
    dst.insert(t);
    return;
  }
  auto last = std::prev(dst.end());
  if (t < *last) {
    dst.insert(t);
    dst.erase(std::prev(dst.end()));
  }
}

void note(Partial& p, long long cap, const Tuple& tuple,
          const Rational& slack) {
  ++p.checked;
  if (!p.has_min || slack < p.min_slack ||
      (slack == p.min_slack && tuple < p.min_at)) {
    p.has_min = true;
    p.min_slack = slack;
    p.min_at = tuple;
  }
  const int s = sgn(slack);
  if (s == 0) {
    ++p.equality_count;
    bounded_insert(p.witnesses, tuple, cap);
  } else if (s < 0) {
    bounded_insert(p.counterexamples, tuple, cap);
  }
}

void merge_into(Partial& acc, const Partial& part, long long cap) {
  acc.checked += part.checked;
  acc.equality_count += part.equality_count;
  if (part.has_min &&
      (!acc.has_min || part.min_slack < acc.min_slack ||
       (part.min_slack == acc.min_slack && part.min_at < acc.min_at))) {
    acc.has_min = true;
    acc.min_slack = part.min_slack;
    acc.min_at = part.min_at;
  }
  for (const auto& t : part.witnesses) bounded_insert(acc.witnesses, t, cap);
  for (const auto& t : part.counterexamples) {
    bounded_insert(acc.counterexamples, t, cap);
  }
}

// Splits the outer loop 0..outer_max across jobs contiguous chunks; the merge
// is order-independent, so the report does not depend on the partitioning.
template <typename Enumerate>
Partial run_sweep(long outer_max, int jobs, long long cap,
                  const Enumerate& enumerate) {
  jobs = std::max(1, jobs);
  jobs = static_cast<int>(
      std::min<long>(jobs, std::min<long>(outer_max + 1, 64)));
  if (jobs == 1) {
    Partial p;
    for (long outer = 0; outer <= outer_max; ++outer) {
      enumerate(outer, p);
    }
    return p;
  }
  std::vector<Partial> partials(static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  const long chunk = (outer_max + jobs) / jobs;
  for (int w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      try {
        const long lo = w * chunk;
        const long hi = std::min(outer_max, lo + chunk - 1);
        for (long outer = lo; outer <= hi; ++outer) {
          enumerate(outer, partials[static_cast<std::size_t>(w)]);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Partial merged;
  for (const auto& p : partials) merge_into(merged, p, cap);
  return merged;
}

void require_field(long long value, const char* name) {
  if (value < 0) {
    throw std::invalid_argument(std::string("sweep range is missing ") + name);
  }
}

long pow_ll_checked(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (1L << 40)) {
      throw std::invalid_argument("sweep level is too large");
    }
    r *= base;
  }
  return r;
}

}  // namespace

SweepReport sweep(TheoremId theorem, const SweepRange& range) {
  const int base_value = (theorem == TheoremId::kTernary ||
                          theorem == TheoremId::kConvexLev)
                             ? 3
                             : range.base;
  const Base b(base_value);
  const long base = b.value();
  const long long cap = std::max<long long>(range.witness_cap, 0);

  SweepReport report;
  report.theorem = theorem;
  report.witness_cap = cap;

  Partial result;
  switch (theorem) {
    case TheoremId::kSuperadditivity: {
      require_field(range.max_m, "max_m");
      require_field(range.max_n, "max_n");
      const long max_m = static_cast<long>(range.max_m);
      const long max_n = static_cast<long>(range.max_n);
      const auto table = prefix_table(max_m + max_n, base);
      result = run_sweep(
          max_m, range.jobs, cap, [&](long m, Partial& p) {
            for (long n = 0; n <= max_n; ++n) {
              const Integer slack = table[static_cast<std::size_t>(m + n)] -
                                    table[static_cast<std::size_t>(m)] -
                                    table[static_cast<std::size_t>(n)] -
                                    std::min(m, n);
              note(p, cap, {m, n}, Rational(slack));
            }
          });
      report.range = "b=" + std::to_string(base) +
                     ", 0<=m<=" + std::to_string(range.max_m) +
                     ", 0<=n<=" + std::to_string(range.max_n);
      break;
    }
    case TheoremId::kTernary: {
      require_field(range.max_m, "max_m");
      const long max_m = static_cast<long>(range.max_m);
      const auto table = prefix_table(3 * max_m, base);
      result = run_sweep(
          max_m, range.jobs, cap, [&](long m, Partial& p) {
            for (long k = 0; k <= m; ++k) {
              for (long l = 0; l <= k; ++l) {
                const Integer lhs =
                    table[static_cast<std::size_t>(m + k + l)] +
                    table[static_cast<std::size_t>(m - k)] +
                    table[static_cast<std::size_t>(m - l)] -
                    3 * table[static_cast<std::size_t>(m)];
                note(p, cap, {k, l, m}, Rational(2 * k + l - lhs));
              }
            }
          });
      report.range = "b=3, 0<=l<=k<=m<=" + std::to_string(range.max_m);
      break;
    }
    case TheoremId::kGeneralBound: {
      require_field(range.max_m, "max_m");
      const long max_m = static_cast<long>(range.max_m);
      const long c = (base + 1) / 2;
      const auto table = prefix_table(2 * max_m, base);
      result = run_sweep(
          max_m, range.jobs, cap, [&](long m, Partial& p) {
            for (long k = 0; k <= m; ++k) {
              const Integer lhs = table[static_cast<std::size_t>(m + k)] +
                                  table[static_cast<std::size_t>(m - k)] -
                                  2 * table[static_cast<std::size_t>(m)];
              note(p, cap, {m, k}, Rational(c * k - lhs));
            }
          });
      report.range = "b=" + std::to_string(base) +
                     ", 0<=k<=m<=" + std::to_string(range.max_m);
      break;
    }
    case TheoremId::kTimesB: {
      require_field(range.max_n, "max_n");
      require_field(range.max_k, "max_k");
      const long max_n = static_cast<long>(range.max_n);
      const long max_k = static_cast<long>(range.max_k);
      const auto table = prefix_table(max_n + base * max_k, base);
      result = run_sweep(
          max_n, range.jobs, cap, [&](long n, Partial& p) {
            for (long k = 0; k <= max_k; ++k) {
              const Integer slack =
                  base * (table[static_cast<std::size_t>(n + k)] -
                          table[static_cast<std::size_t>(n)]) +
                  Integer(base) * (base - 1) * k / 2 -
                  (table[static_cast<std::size_t>(n + base * k)] -
                   table[static_cast<std::size_t>(n)]);
              note(p, cap, {n, k}, Rational(slack));
            }
          });
      report.range = "b=" + std::to_string(base) +
                     ", 0<=n<=" + std::to_string(range.max_n) +
                     ", 0<=k<=" + std::to_string(range.max_k);
      break;
    }
    case TheoremId::kConvexH: {
      require_field(range.level, "level");
      const long bn = pow_ll_checked(base, range.level);
      result = run_sweep(bn, range.jobs, cap, [&](long m, Partial& p) {
        const long k_max = std::min(m, bn - m);
        for (long k = 0; k <= k_max; ++k) {
          note(p, cap, {m, k},
               approx_convexity_h_slack(
                   m, k, static_cast<unsigned>(range.level), b));
        }
      });
      report.range = "b=" + std::to_string(base) +
                     ", level=" + std::to_string(range.level) +
                     ", grid 0<=k<=m, m+k<=" + std::to_string(bn);
      break;
    }
    case TheoremId::kConvexLev: {
      require_field(range.level, "level");
      const long tn = pow_ll_checked(3, range.level);
      result = run_sweep(tn, range.jobs, cap, [&](long m, Partial& p) {
        for (long k = 0; k <= std::min(m, tn - m); ++k) {
          const long l_max = std::min(k, tn - m - k);
          for (long l = 0; l <= l_max; ++l) {
            note(p, cap, {m, k, l},
                 lev_slack(m, k, l, static_cast<unsigned>(range.level)));
          }
        }
      });
      report.range = "b=3, level=" + std::to_string(range.level) +
                     ", grid 0<=l<=k<=m, m+k+l<=" + std::to_string(tn);
      break;
    }
  }

  report.checked = result.checked;
  report.min_slack = result.min_slack;
  report.min_slack_at = result.min_at;
  report.equality_count = result.equality_count;
  report.equality_witnesses.assign(result.witnesses.begin(),
                                   result.witnesses.end());
  report.counterexamples.assign(result.counterexamples.begin(),
                                result.counterexamples.end());
  return report;
}

namespace {

nlohmann::json rational_to_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

}  // namespace

std::string report_to_json(const SweepReport& report) {
  nlohmann::json j;
  j["theorem_id"] = theorem_name(report.theorem);
  j["range"] = report.range;
  j["checked"] = report.checked;
  j["min_slack"] = rational_to_json(report.min_slack);
  j["min_slack_at"] = report.min_slack_at;
  j["equality_count"] = report.equality_count;
  j["equality_witnesses"] = report.equality_witnesses;
  j["witness_cap"] = report.witness_cap;
  j["counterexamples"] = report.counterexamples;
  return j.dump(2);
}

std::string report_to_text(const SweepReport& report) {
  std::string out;
  out += "theorem:            " + theorem_name(report.theorem) + "\n";
  out += "range:              " + report.range + "\n";
  out += "checked:            " + std::to_string(report.checked) + "\n";
  out += "min slack:          " + report.min_slack.get_str() + " at (";
  for (std::size_t i = 0; i < report.min_slack_at.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(report.min_slack_at[i]);
  }
  out += ")\n";
  out += "equality witnesses: " + std::to_string(report.equality_count);
  if (report.equality_count >
      static_cast<unsigned long long>(report.equality_witnesses.size())) {
    out += " (listing " + std::to_string(report.equality_witnesses.size()) +
           ")";
  }
  out += "\n";
  out += "counterexamples:    " + std::to_string(report.counterexamples.size());
  for (const auto& t : report.counterexamples) {
    out += "\n  violated at (";
    for (std::size_t i = 0; i < t.size(); ++i) {
      out += (i ? ", " : "") + std::to_string(t[i]);
    }
    out += ")";
  }
  out += "\n";
  return out;
}

}  // namespace digitsum
