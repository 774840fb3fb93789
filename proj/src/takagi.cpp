#include "digitsum/takagi.hpp"

#include <algorithm>

#include "digitsum/digits.hpp"

namespace digitsum {

namespace {

Rational frac_part(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(),
             x.get_den().get_mpz_t());
  return x - Rational(fl);
}

// Geometric tail of the h_b series after `depth` terms.
Rational h_tail_bound(Base b, unsigned depth) {
  const long base = b.value();
  return g_max(b) *
         make_rational(base, (base - 1) * integer_pow(Integer(base), depth));
}

struct QInterval {
  Rational lo;
  Rational hi;
};

QInterval interval_mul(const QInterval& a, const QInterval& b) {
  const Rational p1 = a.lo * b.lo;
  const Rational p2 = a.lo * b.hi;
  const Rational p3 = a.hi * b.lo;
  const Rational p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

// Smallest t with den | b^t, if every prime factor of den divides b.
bool badic_level(const Integer& den, long base, unsigned* level_out,
                 Integer* power_out) {
  Integer d = den;
  for (;;) {
    Integer g;
    mpz_gcd_ui(g.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(base));
    if (g == 1) break;
    while (mpz_divisible_p(d.get_mpz_t(), g.get_mpz_t())) d /= g;
  }
  if (d != 1) return false;
  unsigned t = 0;
  Integer bp = 1;
  while (!mpz_divisible_p(bp.get_mpz_t(), den.get_mpz_t())) {
    bp *= base;
    ++t;
  }
  *level_out = t;
  *power_out = bp;
  return true;
}

}  // namespace

BAdicRational::BAdicRational(const Natural& k, unsigned level, Base b)
    : k_(k), level_(level), base_(b) {
  detail::require_nonnegative(k, "BAdicRational");
  const Integer bn = integer_pow(Integer(b.value()), level_);
  if (k_ > bn) k_ %= bn;  // periodic extension
  while (level_ > 0 &&
         mpz_divisible_ui_p(k_.get_mpz_t(),
                            static_cast<unsigned long>(b.value()))) {
    if (k_ == 0) {
      level_ = 0;
      break;
    }
    k_ /= b.value();
    --level_;
  }
}

Rational BAdicRational::value() const {
  return make_rational(k_, integer_pow(Integer(base_.value()), level_));
}

Rational g_exact(const Rational& x, Base b) {
  const long base = b.value();
  const Rational q = frac_part(x);
  const Rational t = q * base;
  Integer i;
  mpz_fdiv_q(i.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  const long li = i.get_si();  // 0 <= i <= b-1
  return make_rational(Integer(li) * (base - li), 2 * Integer(base)) +
         make_rational(base - 1 - 2 * li, 2) *
             (q - make_rational(li, base));
}

Rational g_max(Base b) {
  const long base = b.value();
  return g_exact(make_rational(base / 2, base), b);
}

Rational h_partial(const Rational& x, Base b, unsigned depth) {
  const long base = b.value();
  Rational y = frac_part(x);
  Rational acc = 0;
  Integer scale = 1;
  for (unsigned j = 0; j < depth; ++j) {
    acc += g_exact(y, b) / Rational(scale);
    y = frac_part(y * base);
    scale *= base;
  }
  return acc;
}

Rational h_at_badic(const BAdicRational& x) {
  const long base = x.base().value();
  const Integer bn = integer_pow(Integer(base), x.level());
  const Integer num = Integer(base - 1) * x.numerator() * x.level() -
                      2 * cumulative_digit_sum(x.numerator(), x.base());
  return make_rational(num, 2 * bn);
}

Rational phi(const Rational& x, Base b) {
  const Rational q = frac_part(x);
  const Rational complement = Rational(1) - q;
  const Rational dist = std::min(q, complement);
  return std::min(dist, make_rational(1, b.value()));
}

Rational omega_at_badic(const BAdicRational& x) {
  const long base = x.base().value();
  Rational y = x.value();
  Rational acc = 0;
  Integer scale = 1;
  for (unsigned m = 0; m < x.level(); ++m) {
    acc += phi(y, x.base()) / Rational(scale);
    y = frac_part(y * base);
    scale *= base;
  }
  return acc;
}

Rational omega_partial(const Rational& x, Base b, unsigned depth) {
  const long base = b.value();
  Rational y = frac_part(x);
  Rational acc = 0;
  Integer scale = 1;
  for (unsigned m = 0; m < depth; ++m) {
    acc += phi(y, b) / Rational(scale);
    y = frac_part(y * base);
    scale *= base;
  }
  return acc;
}

TruncatedValue h_truncated(const Rational& x, Base b, unsigned depth) {
  if (depth < 1) throw std::invalid_argument("h_truncated requires depth >= 1");
  return {h_partial(x, b, depth), depth, h_tail_bound(b, depth)};
}

TruncatedValue delange_F(const Rational& x, Base b, unsigned depth) {
  if (depth < 1) throw std::invalid_argument("delange_F requires depth >= 1");
  const long base = b.value();
  const Rational theta = frac_part(x);
  const Integer& a = theta.get_num();
  const Integer& c = theta.get_den();
  const Integer e = c - a;  // {x} - 1 = -(e/c), so b^{{x}-1} = b^{-e/c}
  if (!e.fits_ulong_p() || !c.fits_ulong_p() ||
      c.get_ui() > 1000000UL / depth) {
    throw std::invalid_argument(
        "delange_F: fractional part too fine for exact evaluation");
  }
  const Integer z = integer_pow(Integer(base), e.get_ui());
  const Rational linear =
      make_rational(Integer(base - 1) * e, 2 * c);  // (b-1)/2 (1 - {x})

  Integer root;
  const bool exact_root =
      mpz_root(root.get_mpz_t(), z.get_mpz_t(), c.get_ui()) != 0;

  Rational h_value;
  Rational h_error = 0;
  QInterval prefactor;  // b^{1-{x}} = 1 / b^{{x}-1}
  if (exact_root) {
    // b^{{x}-1} = 1/root exactly.
    unsigned level = 0;
    Integer bp;
    if (badic_level(root, base, &level, &bp)) {
      h_value = h_at_badic(BAdicRational(bp / root, level, b));
    } else {
      h_value = h_partial(make_rational(1, root), b, depth);
      h_error = h_tail_bound(b, depth);
    }
    prefactor = {Rational(root), Rational(root)};
  } else {
    // Scaled integer root: X = floor((10^{c*depth}/z)^{1/c}) brackets
    // 10^depth * b^{{x}-1} between X and X+1.
    const Integer scale = integer_pow(Integer(10), depth);
    const Integer scaled =
        integer_pow(Integer(10), depth * c.get_ui()) / z;
    Integer x_lo;
    mpz_root(x_lo.get_mpz_t(), scaled.get_mpz_t(), c.get_ui());
    // b^{{x}-1} >= 1/b, which keeps the lower endpoint positive even when
    // the scaled root floors to zero at tiny depth.
    const Rational u_lo =
        std::max(make_rational(x_lo, scale), make_rational(1, base));
    const Rational u_hi = make_rational(x_lo + 1, scale);
    const Rational width = u_hi - u_lo;
    h_value = h_partial(u_lo, b, depth);
    // Tail plus the Lipschitz oscillation of the first `depth` terms, whose
    // slopes are bounded by (b-1)/2 each after rescaling.
    h_error = h_tail_bound(b, depth) +
              make_rational(depth * Integer(base - 1), 2) * width;
    prefactor = {Rational(1) / u_hi, Rational(1) / u_lo};
  }

  const QInterval h_iv{h_value - h_error, h_value + h_error};
  const QInterval product = interval_mul(prefactor, h_iv);
  const Rational f_lo = linear - product.hi;
  const Rational f_hi = linear - product.lo;
  return {(f_lo + f_hi) / 2, depth, (f_hi - f_lo) / 2};
}

TruncatedValue delange_residual(const Natural& n, Base b, unsigned depth) {
  if (depth < 1) {
    throw std::invalid_argument("delange_residual requires depth >= 1");
  }
  if (n < 1) throw std::invalid_argument("delange_residual requires n >= 1");
  const long base = b.value();
  const unsigned p =
      static_cast<unsigned>(digits(n, b).digits.size()) - 1;  // floor(log_b n)
  const Integer bp1 = integer_pow(Integer(base), p + 1);

  // With theta = {log_b n}, b^{theta - 1} = n / b^{p+1} exactly, so the only
  // inexact ingredient is the h_b evaluation; the theta terms cancel.
  const BAdicRational u(n, p + 1, b);
  Rational h_value;
  Rational h_error = 0;
  if (depth >= u.level()) {
    h_value = h_at_badic(u);
  } else {
    h_value = h_partial(make_rational(n, bp1), b, depth);
    h_error = h_tail_bound(b, depth);
  }

  const Rational value = Rational(cumulative_digit_sum(n, b)) -
                         make_rational(Integer(base - 1) * n * (p + 1), 2) +
                         Rational(bp1) * h_value;

  // log_b n is exact at powers of b; elsewhere budget an enclosure of width
  // 10^-depth for it, matching delange_F's policy.
  Rational log_width = 0;
  if (integer_pow(Integer(base), p) != n) {
    log_width = make_rational(1, integer_pow(Integer(10), depth));
  }
  const Rational bound =
      make_rational(Integer(base - 1) * n, 2) * log_width +
      Rational(bp1) * h_error;
  return {value, depth, bound};
}

}  // namespace digitsum
