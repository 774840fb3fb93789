#pragma once

#include <vector>

#include "digitsum/types.hpp"

namespace digitsum {

/// Canonical base-b expansion: least-significant digit first, no trailing
/// zero digit. Zero is the empty vector.
struct DigitVector {
  std::vector<int> digits;
  Base base;

  /// Reconstructs the represented integer.
  Natural value() const;
};

/// Base-b digits of n, canonical form.
DigitVector digits(const Natural& n, Base b);

/// s_b(n): sum of the base-b digits of n.
Natural digit_sum(const Natural& n, Base b);

/// S_b(N) = sum of s_b(n) over 0 <= n < N, by direct summation. Linear in N;
/// meant as the reference oracle for cumulative_digit_sum.
Natural cumulative_digit_sum_naive(const Natural& big_n, Base b);

/// S_b(N) in O(log N) big-integer operations, via the digit recursion
///   S_b(b*q + r) = b*S_b(q) + b(b-1)/2 * q + r*s_b(q) + r(r-1)/2.
Natural cumulative_digit_sum(const Natural& big_n, Base b);

/// Sigma_b(s, t) = sum of s_b(r) over s <= r < t. Requires s <= t; the empty
/// block (s == t) is 0.
Natural block_sum(const Natural& s, const Natural& t, Base b);

/// Average of s_b over [s, t), exact. Requires s < t.
Rational average_digit_sum(const Natural& s, const Natural& t, Base b);

/// Digitwise partial order: true iff every base-b digit of n is <= the
/// corresponding digit of m. Non-strict (n relates to itself); callers
/// wanting the strict relation combine with n != m.
bool digit_dominates(const Natural& n, const Natural& m, Base b);

/// Checks s_b(n + sum_i b^{p_i}) <= s_b(n) + #powers. Holds for every input;
/// exposed so the estimate itself can be exercised directly.
bool add_power_bound_check(const Natural& n,
                           const std::vector<unsigned long>& powers, Base b);

}  // namespace digitsum
