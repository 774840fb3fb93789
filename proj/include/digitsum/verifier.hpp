#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digitsum/types.hpp"

namespace digitsum {

// ---------------------------------------------------------------------------
// Slack of each inequality: right-hand side minus left-hand side, exact.
// Nonnegative slack means the inequality holds at the tuple; zero marks an
// equality witness.
// ---------------------------------------------------------------------------

/// S_b(m+n) >= S_b(m) + S_b(n) + min(m, n).
Integer superadditivity_slack(const Natural& m, const Natural& n, Base b);

/// S_3(m+k+l) + S_3(m-k) + S_3(m-l) - 3 S_3(m) <= 2k + l, for 0 <= l <= k <= m.
Integer ternary_slack(const Natural& k, const Natural& l, const Natural& m);

/// S_b(m+k) + S_b(m-k) - 2 S_b(m) <= floor((b+1)/2) k, for 0 <= k <= m.
Integer general_bound_slack(const Natural& m, const Natural& k, Base b);

/// Sigma_b(n, n+bk) <= b Sigma_b(n, n+k) + b(b-1)k/2.
Integer times_b_slack(const Natural& n, const Natural& k, Base b);

/// The same inequality per element: mean of s_b over [n, n+bk) versus the
/// mean over [n, n+k) plus (b-1)/2. Requires k >= 1; equals
/// times_b_slack / (bk).
Rational times_b_average_slack(const Natural& n, const Natural& k, Base b);

/// Approximate convexity of h_b at x = (m-k)/b^level, y = (m+k)/b^level,
/// cleared of the outer 1/2:
///   slack = h(x) + h(y) + floor((b+1)/2) k / b^level - 2 h((x+y)/2).
/// Scaled so that slack * b^level == general_bound_slack(m, k, b) exactly.
/// Requires 0 <= k <= m and m + k <= b^level.
Rational approx_convexity_h_slack(const Natural& m, const Natural& k,
                                  unsigned level, Base b);

/// Three-point approximate convexity of h_3 at x = (m-k)/3^level,
/// y = (m-l)/3^level, z = (m+k+l)/3^level, cleared of the outer 1/3:
///   slack = h(x) + h(y) + h(z) + (2k+l)/3^level - 3 h((x+y+z)/3).
/// Scaled so that slack * 3^level == ternary_slack(k, l, m) exactly.
/// Requires 0 <= l <= k <= m and m + k + l <= 3^level.
Rational lev_slack(const Natural& m, const Natural& k, const Natural& l,
                   unsigned level);

/// Normalized second difference along the extremal family of the general
/// bound: for even b, [S_b(b^n) - 2 S_b(b^n/2)] / (b^n/2); for odd b,
/// [S_b(2 k_n) - 2 S_b(k_n)] / k_n with k_n = (b^n - 1)/2. Requires n >= 1.
Rational sharpness_ratio(Base b, unsigned n);

// ---------------------------------------------------------------------------
// Exhaustive sweeps
// ---------------------------------------------------------------------------

enum class TheoremId {
  kSuperadditivity,
  kTernary,
  kGeneralBound,
  kTimesB,
  kConvexH,
  kConvexLev,
};

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

/// Inclusive parameter bounds for a sweep. Which fields are required depends
/// on the theorem; unused fields are ignored. base is forced to 3 for the
/// ternary and Lev sweeps.
struct SweepRange {
  int base = 2;
  long long max_m = -1;  // superadditivity, ternary, general-bound
  long long max_n = -1;  // superadditivity, times-b
  long long max_k = -1;  // times-b
  int level = -1;        // convex-h, convex-lev
  long long witness_cap = 1000;
  int jobs = 1;
};

/// Outcome of a sweep. Witness and counterexample tuples follow the slack
/// functions' argument order: (m,n), (k,l,m), (m,k), (n,k), (m,k), (m,k,l).
/// Lists are sorted lexicographically and capped at witness_cap; the merge is
/// associative, so reports are identical for any jobs count.
struct SweepReport {
  TheoremId theorem;
  std::string range;
  unsigned long long checked = 0;
  Rational min_slack;
  std::vector<long long> min_slack_at;
  unsigned long long equality_count = 0;
  std::vector<std::vector<long long>> equality_witnesses;
  std::vector<std::vector<long long>> counterexamples;
  long long witness_cap = 1000;
};

/// Evaluates the theorem's slack on every tuple in the range.
SweepReport sweep(TheoremId theorem, const SweepRange& range);

std::string report_to_json(const SweepReport& report);
std::string report_to_text(const SweepReport& report);

}  // namespace digitsum
