#include "digitsum/digits.hpp"

namespace digitsum {

Natural DigitVector::value() const {
  Natural acc = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    acc *= base.value();
    acc += *it;
  }
  return acc;
}

DigitVector digits(const Natural& n, Base b) {
  detail::require_nonnegative(n, "digits");
  DigitVector out{{}, b};
  Natural rest = n;
  while (rest != 0) {
    out.digits.push_back(
        static_cast<int>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                                       static_cast<unsigned long>(b.value()))));
  }
  return out;
}

Natural digit_sum(const Natural& n, Base b) {
  detail::require_nonnegative(n, "digit_sum");
  unsigned long sum = 0;
  Natural rest = n;
  while (rest != 0) {
    sum += mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                         static_cast<unsigned long>(b.value()));
  }
  return Natural(sum);
}

Natural cumulative_digit_sum_naive(const Natural& big_n, Base b) {
  detail::require_nonnegative(big_n, "cumulative_digit_sum_naive");
  Natural total = 0;
  for (Natural n = 0; n < big_n; ++n) {
    total += digit_sum(n, b);
  }
  return total;
}

Natural cumulative_digit_sum(const Natural& big_n, Base b) {
  detail::require_nonnegative(big_n, "cumulative_digit_sum");
  const auto dv = digits(big_n, b);
  const long base = b.value();
  const Integer half_pair = Integer(base) * (base - 1) / 2;

  // Fold most-significant-first: q is the digit prefix read so far,
  // cumulative = S_b(q), prefix_digit_sum = s_b(q).
  Natural cumulative = 0;
  Natural prefix = 0;
  Natural prefix_digit_sum = 0;
  for (auto it = dv.digits.rbegin(); it != dv.digits.rend(); ++it) {
    const long d = *it;
    cumulative *= base;
    cumulative += half_pair * prefix;
    cumulative += d * prefix_digit_sum + d * (d - 1) / 2;
    prefix *= base;
    prefix += d;
    prefix_digit_sum += d;
  }
  return cumulative;
}

Natural block_sum(const Natural& s, const Natural& t, Base b) {
  detail::require_nonnegative(s, "block_sum");
  if (s > t) throw std::invalid_argument("block_sum requires s <= t");
  if (s == t) return 0;
  return cumulative_digit_sum(t, b) - cumulative_digit_sum(s, b);
}

Rational average_digit_sum(const Natural& s, const Natural& t, Base b) {
  if (s >= t) throw std::invalid_argument("average_digit_sum requires s < t");
  return make_rational(block_sum(s, t, b), t - s);
}

bool digit_dominates(const Natural& n, const Natural& m, Base b) {
  detail::require_nonnegative(n, "digit_dominates");
  detail::require_nonnegative(m, "digit_dominates");
  Natural rn = n;
  Natural rm = m;
  const unsigned long base = static_cast<unsigned long>(b.value());
  while (rn != 0) {
    const unsigned long dn = mpz_fdiv_q_ui(rn.get_mpz_t(), rn.get_mpz_t(), base);
    const unsigned long dm = mpz_fdiv_q_ui(rm.get_mpz_t(), rm.get_mpz_t(), base);
    if (dn > dm) return false;
  }
  return true;
}

bool add_power_bound_check(const Natural& n,
                           const std::vector<unsigned long>& powers, Base b) {
  detail::require_nonnegative(n, "add_power_bound_check");
  Natural shifted = n;
  for (unsigned long p : powers) {
    shifted += integer_pow(Integer(b.value()), p);
  }
  return digit_sum(shifted, b) <= digit_sum(n, b) + Natural(powers.size());
}

}  // namespace digitsum
