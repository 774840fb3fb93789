#pragma once

#include "digitsum/types.hpp"

namespace digitsum {

/// k / base^level, canonicalized so that base does not divide k unless
/// level == 0, with k reduced into the fundamental period [0, base^level]
/// (the represented functions are 1-periodic).
class BAdicRational {
 public:
  BAdicRational(const Natural& k, unsigned level, Base b);

  const Natural& numerator() const noexcept { return k_; }
  unsigned level() const noexcept { return level_; }
  Base base() const noexcept { return base_; }

  /// The represented rational k / base^level.
  Rational value() const;

 private:
  Natural k_;
  unsigned level_;
  Base base_;
};

/// g_b(x): the 1-periodic integral of (b-1)/2 - floor(b t) from 0 to x.
/// Piecewise linear with value i(b-i)/(2b) at the breakpoints i/b.
Rational g_exact(const Rational& x, Base b);

/// Maximum of g_b over a period, attained at floor(b/2)/b.
Rational g_max(Base b);

/// Partial sum of the first `depth` terms of h_b(x) = sum b^{-n} g_b(b^n x).
/// For x = k/b^n and depth >= n this is the exact value of h_b(x).
Rational h_partial(const Rational& x, Base b, unsigned depth);

/// h_b at a b-adic rational, evaluated in closed form through the cumulative
/// digital sum: h_b(k/b^n) = b^{-n}((b-1)/2 * k * n - S_b(k)).
Rational h_at_badic(const BAdicRational& x);

/// phi_b(x) = min(dist(x, Z), 1/b).
Rational phi(const Rational& x, Base b);

/// omega_b at a b-adic rational: the series sum b^{-m} phi_b(b^m x) is finite
/// there (terms at index >= level vanish) and is evaluated exactly.
Rational omega_at_badic(const BAdicRational& x);

/// Partial sum of the first `depth` terms of omega_b(x); the tail after
/// depth terms is at most b^{-depth}/(b-1). Matches omega_at_badic whenever
/// x = k/b^n and depth >= n.
Rational omega_partial(const Rational& x, Base b, unsigned depth);

/// An exact partial evaluation together with a certified bound on the
/// distance to the true function value.
struct TruncatedValue {
  Rational value;
  unsigned depth;
  Rational error_bound;  // |true value - value| <= error_bound
};

/// h_b(x) truncated after `depth` terms; the bound is the geometric tail
/// g_max(b) * b^{1-depth} / (b-1). Requires depth >= 1.
TruncatedValue h_truncated(const Rational& x, Base b, unsigned depth);

/// F(x) = (b-1)/2 (1 - {x}) - b^{1-{x}} h_b(b^{{x}-1}), the periodic factor
/// in Delange's decomposition of S_b. b^{{x}-1} is evaluated exactly when it
/// is rational and otherwise enclosed to width 10^-depth by integer root
/// extraction, with the enclosure propagated through h_b. Requires depth >= 1.
TruncatedValue delange_F(const Rational& x, Base b, unsigned depth);

/// S_b(n) - [(b-1)/2 n log_b n + n F(log_b n)] for n >= 1, with a certified
/// bound. The decomposition is an identity, so with enough depth the value is
/// exactly zero; the bound accounts for the log enclosure width 10^-depth and
/// any h_b truncation. Requires depth >= 1.
TruncatedValue delange_residual(const Natural& n, Base b, unsigned depth);

}  // namespace digitsum
