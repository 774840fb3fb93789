// Acceptance suite: every release-gating identity and inequality, checked
// exactly on its full stated range. Prints one PASS/FAIL line per criterion
// and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "digitsum/digits.hpp"
#include "digitsum/takagi.hpp"
#include "digitsum/tableau.hpp"
#include "digitsum/verifier.hpp"

using digitsum::BAdicRational;
using digitsum::Base;
using digitsum::Integer;
using digitsum::make_rational;
using digitsum::Natural;
using digitsum::Rational;
using digitsum::SweepRange;
using digitsum::TheoremId;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& title,
                   const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (problem.empty()) {
    std::printf("PASS  criterion %d: %s (%.1f s)\n", number, title.c_str(),
                seconds);
  } else {
    ++failures;
    std::printf("FAIL  criterion %d: %s (%.1f s): %s\n", number, title.c_str(),
                seconds, problem.c_str());
  }
  std::fflush(stdout);
}

std::string oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  for (int b = 2; b <= 10; ++b) {
    Natural running = 0;  // the naive oracle, accumulated incrementally
    for (long n = 0; n <= 10000; ++n) {
      if (digitsum::cumulative_digit_sum(n, Base(b)) != running) {
        return "mismatch at b=" + std::to_string(b) +
               ", N=" + std::to_string(n);
      }
      running += digitsum::digit_sum(n, Base(b));
    }
    // Anchor the accumulator to the standalone oracle at a few points.
    for (long n : {997L, 5003L, 10000L}) {
      if (digitsum::cumulative_digit_sum_naive(n, Base(b)) !=
          digitsum::cumulative_digit_sum(n, Base(b))) {
        return "naive oracle disagrees at b=" + std::to_string(b) +
               ", N=" + std::to_string(n);
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds >= 10.0) {
    return "took " + std::to_string(seconds) + " s, limit is 10 s";
  }
  return "";
}

std::string closed_forms() {
  for (int b = 2; b <= 10; ++b) {
    for (unsigned n = 0; n <= 12; ++n) {
      const Integer bn = digitsum::integer_pow(Integer(b), n);
      if (digitsum::cumulative_digit_sum(bn, Base(b)) !=
          Integer(n) * bn * (b - 1) / 2) {
        return "power form fails at b=" + std::to_string(b) +
               ", n=" + std::to_string(n);
      }
    }
    for (long m = 0; m <= 2000; ++m) {
      if (digitsum::cumulative_digit_sum(Natural(b) * m, Base(b)) !=
          b * digitsum::cumulative_digit_sum(m, Base(b)) +
              Integer(b) * (b - 1) * m / 2) {
        return "base-multiply form fails at b=" + std::to_string(b) +
               ", m=" + std::to_string(m);
      }
    }
  }
  return "";
}

std::string check_no_counterexamples(const digitsum::SweepReport& report) {
  if (!report.counterexamples.empty()) {
    std::string tuple;
    for (long long v : report.counterexamples.front()) {
      tuple += (tuple.empty() ? "" : ", ") + std::to_string(v);
    }
    return theorem_name(report.theorem) + " violated at (" + tuple + ")";
  }
  if (report.min_slack < 0) {
    return theorem_name(report.theorem) + " has negative min slack";
  }
  return "";
}

std::string theorem_sweeps() {
  const auto start = std::chrono::steady_clock::now();
  const int jobs = 4;

  // Theorem sweeps on their stated ranges.
  for (int b : {2, 3, 5, 10}) {
    SweepRange r;
    r.base = b;
    r.max_m = 500;
    r.max_n = 500;
    r.jobs = jobs;
    r.witness_cap = 0;
    if (auto p = check_no_counterexamples(
            digitsum::sweep(TheoremId::kSuperadditivity, r));
        !p.empty()) {
      return p;
    }
  }
  {
    SweepRange r;
    r.max_m = 300;
    r.jobs = jobs;
    r.witness_cap = 0;
    if (auto p =
            check_no_counterexamples(digitsum::sweep(TheoremId::kTernary, r));
        !p.empty()) {
      return p;
    }
  }
  for (int b = 2; b <= 10; ++b) {
    SweepRange r;
    r.base = b;
    r.max_m = 500;
    r.jobs = jobs;
    r.witness_cap = 0;
    if (auto p = check_no_counterexamples(
            digitsum::sweep(TheoremId::kGeneralBound, r));
        !p.empty()) {
      return p;
    }
  }
  for (int b = 2; b <= 6; ++b) {
    SweepRange r;
    r.base = b;
    r.max_n = 300;
    r.max_k = 300;
    r.jobs = jobs;
    r.witness_cap = 0;
    if (auto p =
            check_no_counterexamples(digitsum::sweep(TheoremId::kTimesB, r));
        !p.empty()) {
      return p;
    }
  }
  for (int b : {2, 3, 4, 5}) {
    for (int level = 1; level <= 4; ++level) {
      SweepRange r;
      r.base = b;
      r.level = level;
      r.jobs = jobs;
      r.witness_cap = 0;
      if (auto p = check_no_counterexamples(
              digitsum::sweep(TheoremId::kConvexH, r));
          !p.empty()) {
        return p;
      }
    }
  }
  for (int level = 1; level <= 3; ++level) {
    SweepRange r;
    r.level = level;
    r.jobs = jobs;
    r.witness_cap = 0;
    if (auto p = check_no_counterexamples(
            digitsum::sweep(TheoremId::kConvexLev, r));
        !p.empty()) {
      return p;
    }
  }

  // Predicted equality families, each member exactly zero.
  for (int b : {2, 3, 5, 10}) {
    for (Integer p = 1; p <= 500; p *= b) {
      for (Integer m = 0; m < p && m <= 500; ++m) {
        if (digitsum::superadditivity_slack(m, p, Base(b)) != 0) {
          return "superadditivity family fails at b=" + std::to_string(b) +
                 ", m=" + m.get_str() + ", n=" + p.get_str();
        }
      }
    }
  }
  for (long m = 0; m <= 300; ++m) {
    if (digitsum::ternary_slack(m, m, m) != 0) {
      return "ternary family fails at k=l=m=" + std::to_string(m);
    }
  }
  for (int b : {2, 4, 6, 8, 10}) {
    for (Integer half = b / 2; 2 * half <= 500; half *= b) {
      if (digitsum::general_bound_slack(half, half, Base(b)) != 0) {
        return "general-bound family fails at b=" + std::to_string(b) +
               ", m=k=" + half.get_str();
      }
    }
  }
  for (int b = 2; b <= 6; ++b) {
    for (long k = 0; k <= 300; ++k) {
      if (digitsum::times_b_slack(0, k, Base(b)) != 0) {
        return "times-b family fails at n=0, k=" + std::to_string(k) +
               ", b=" + std::to_string(b);
      }
    }
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds >= 300.0) {
    return "took " + std::to_string(seconds) + " s, limit is 300 s";
  }
  return "";
}

std::string odd_base_strictness() {
  for (int b : {3, 5, 7, 9}) {
    for (long m = 1; m <= 300; ++m) {
      for (long k = 1; k <= m; ++k) {
        if (digitsum::general_bound_slack(m, k, Base(b)) < 1) {
          return "slack below 1 at b=" + std::to_string(b) +
                 ", m=" + std::to_string(m) + ", k=" + std::to_string(k);
        }
      }
    }
  }
  return "";
}

std::string sharpness() {
  for (int b : {2, 4, 6, 8, 10}) {
    for (unsigned n = 1; n <= 8; ++n) {
      if (digitsum::sharpness_ratio(Base(b), n) != (b + 1) / 2) {
        return "even-base ratio wrong at b=" + std::to_string(b) +
               ", n=" + std::to_string(n);
      }
    }
  }
  for (int b : {3, 5, 7, 9}) {
    for (unsigned n = 1; n <= 8; ++n) {
      const Integer kn = (digitsum::integer_pow(Integer(b), n) - 1) / 2;
      const Rational expected =
          make_rational(b + 1, 2) - make_rational(Integer(b - 1) * n, 2 * kn);
      if (digitsum::sharpness_ratio(Base(b), n) != expected) {
        return "odd-base ratio wrong at b=" + std::to_string(b) +
               ", n=" + std::to_string(n);
      }
    }
  }
  // By n = 8 the base-3 ratio is within 10^-2 of its limit 2.
  const Rational r8 = digitsum::sharpness_ratio(Base(3), 8);
  if (!(r8 > Rational(2) - make_rational(1, 100))) {
    return "base-3 ratio at n=8 is not within 1/100 of 2";
  }
  if (digitsum::sharpness_ratio(Base(3), 8) !=
      Rational(2) - make_rational(8, 3280)) {
    return "base-3 deficit at n=8 is not 8/3280";
  }
  return "";
}

std::string tableau_construction() {
  for (int b = 2; b <= 5; ++b) {
    for (long long k = 1; k <= 200; ++k) {
      const auto report =
          digitsum::verify_tableau(digitsum::build_tableau(Base(b), k));
      if (!report.valid) {
        return "built tableau fails verification at b=" + std::to_string(b) +
               ", k=" + std::to_string(k);
      }
    }
  }
  const digitsum::Tableau reference{
      Base(3), 5, {{0, 1, 2, 3, 4}, {9, 10, 11, 6, 5}, {12, 13, 14, 7, 8}}};
  if (!digitsum::verify_tableau(reference).valid) {
    return "the reference 3x5 arrangement fails verification";
  }
  return "";
}

std::string takagi_route_equivalence() {
  // Full level-8 grids; coarser levels for the two smallest bases.
  for (int b = 2; b <= 6; ++b) {
    const unsigned n = 8;
    const Integer bn = digitsum::integer_pow(Integer(b), n);
    for (Integer k = 0; k <= bn; ++k) {
      if (digitsum::h_at_badic(BAdicRational(k, n, Base(b))) !=
          digitsum::h_partial(make_rational(k, bn), Base(b), n)) {
        return "h route mismatch at k=" + k.get_str() + "/" +
               std::to_string(b) + "^8";
      }
    }
  }
  for (int b : {2, 3}) {
    for (unsigned n = 0; n <= 7; ++n) {
      const Integer bn = digitsum::integer_pow(Integer(b), n);
      for (Integer k = 0; k <= bn; ++k) {
        if (digitsum::h_at_badic(BAdicRational(k, n, Base(b))) !=
            digitsum::h_partial(make_rational(k, bn), Base(b), n)) {
          return "h route mismatch at k=" + k.get_str() + "/" +
                 std::to_string(b) + "^" + std::to_string(n);
        }
      }
    }
  }
  // omega_2 = 2 h_2, omega_3 = h_3, omega_4 = h_2 on level-8 grids.
  {
    const Integer p2 = digitsum::integer_pow(Integer(2), 8);
    for (Integer k = 0; k <= p2; ++k) {
      if (digitsum::omega_at_badic(BAdicRational(k, 8, Base(2))) !=
          2 * digitsum::h_at_badic(BAdicRational(k, 8, Base(2)))) {
        return "omega_2 != 2 h_2 at k=" + k.get_str();
      }
    }
    const Integer p3 = digitsum::integer_pow(Integer(3), 8);
    for (Integer k = 0; k <= p3; ++k) {
      const Rational h3 = digitsum::h_at_badic(BAdicRational(k, 8, Base(3)));
      if (digitsum::omega_at_badic(BAdicRational(k, 8, Base(3))) != h3) {
        return "omega_3 != h_3 at k=" + k.get_str();
      }
      if (h3 != digitsum::h_at_badic(BAdicRational(p3 - k, 8, Base(3)))) {
        return "h_3 symmetry fails at k=" + k.get_str();
      }
    }
    const Integer p4 = digitsum::integer_pow(Integer(4), 8);
    for (Integer k = 0; k <= p4; ++k) {
      if (digitsum::omega_at_badic(BAdicRational(k, 8, Base(4))) !=
          digitsum::h_at_badic(BAdicRational(k, 16, Base(2)))) {
        return "omega_4 != h_2 at k=" + k.get_str() + "/4^8";
      }
    }
  }
  return "";
}

std::string approximate_convexity() {
  for (int b : {2, 3, 4, 5}) {
    for (unsigned level = 1; level <= 4; ++level) {
      const Integer bn = digitsum::integer_pow(Integer(b), level);
      for (Integer m = 0; m <= bn; ++m) {
        const Integer k_hi = std::min(m, Integer(bn - m));
        for (Integer k = 0; k <= k_hi; ++k) {
          const Rational slack =
              digitsum::approx_convexity_h_slack(m, k, level, Base(b));
          if (slack < 0) {
            return "two-point slack negative at b=" + std::to_string(b) +
                   ", level=" + std::to_string(level) + ", m=" + m.get_str() +
                   ", k=" + k.get_str();
          }
          if (slack * bn != digitsum::general_bound_slack(m, k, Base(b))) {
            return "two-point reduction identity fails at b=" +
                   std::to_string(b) + ", m=" + m.get_str() +
                   ", k=" + k.get_str();
          }
        }
      }
    }
  }
  for (unsigned level = 1; level <= 3; ++level) {
    const Integer tn = digitsum::integer_pow(Integer(3), level);
    for (Integer m = 0; m <= tn; ++m) {
      const Integer k_hi = std::min(m, Integer(tn - m));
      for (Integer k = 0; k <= k_hi; ++k) {
        const Integer l_hi = std::min(k, Integer(tn - m - k));
        for (Integer l = 0; l <= l_hi; ++l) {
          const Rational slack = digitsum::lev_slack(m, k, l, level);
          if (slack < 0) {
            return "three-point slack negative at m=" + m.get_str() +
                   ", k=" + k.get_str() + ", l=" + l.get_str();
          }
          if (slack * tn != digitsum::ternary_slack(k, l, m)) {
            return "three-point reduction identity fails at m=" + m.get_str() +
                   ", k=" + k.get_str() + ", l=" + l.get_str();
          }
        }
      }
    }
  }
  return "";
}

std::string delange_decomposition() {
  const Rational tolerance = make_rational(1, 1000000);
  for (int b : {2, 3, 10}) {
    std::set<long> powers;
    for (Integer p = 1; p <= 10000; p *= b) powers.insert(p.get_si());
    for (long n = 1; n <= 10000; ++n) {
      const auto r = digitsum::delange_residual(n, Base(b), 40);
      const Rational mag = abs(r.value);
      if (mag > r.error_bound) {
        return "residual exceeds its bound at b=" + std::to_string(b) +
               ", n=" + std::to_string(n);
      }
      if (mag > tolerance) {
        return "residual exceeds 10^-6 at b=" + std::to_string(b) +
               ", n=" + std::to_string(n);
      }
      if (powers.count(n) && (r.value != 0 || r.error_bound != 0)) {
        return "residual not exactly zero at b=" + std::to_string(b) +
               ", n=" + std::to_string(n);
      }
    }
  }
  return "";
}

}  // namespace

int main() {
  run_criterion(1, "fast cumulative digit sum equals the naive oracle",
                oracle_equivalence);
  run_criterion(2, "power and base-multiply closed forms", closed_forms);
  run_criterion(3, "inequality sweeps: no counterexamples, equality families",
                theorem_sweeps);
  run_criterion(4, "strict inequality for odd bases", odd_base_strictness);
  run_criterion(5, "sharpness ratios along the extremal families", sharpness);
  run_criterion(6, "tableau construction verifies for all b<=5, k<=200",
                tableau_construction);
  run_criterion(7, "h/omega route equivalence and relations on level-8 grids",
                takagi_route_equivalence);
  run_criterion(8, "approximate convexity with exact reduction identities",
                approximate_convexity);
  run_criterion(9, "Delange decomposition residuals", delange_decomposition);
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
