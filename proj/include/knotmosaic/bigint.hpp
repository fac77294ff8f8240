#ifndef KNOTMOSAIC_BIGINT_HPP
#define KNOTMOSAIC_BIGINT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

#include "knotmosaic/errors.hpp"

namespace knotmosaic {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a nonnegative decimal integer: " + std::string(text));
    }
  }
  return BigInt(std::string(text), 10);
}

/// Exact quotient; throws InconsistentCount on a nonzero remainder.
inline BigInt exact_div(const BigInt& num, const BigInt& den, std::string_view context) {
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw InconsistentCount(std::string(context) + ": " + to_decimal(num) + " is not divisible by " +
                            to_decimal(den));
  }
  return q;
}

/// `value^(1/degree)` rounded half-up to `decimals` places, computed
/// exactly from the integer (no floating point).
inline std::string root_decimal(const BigInt& value, unsigned long degree, unsigned decimals) {
  if (degree == 0) throw std::invalid_argument("root degree must be positive");
  if (value < 0) throw std::invalid_argument("root of a negative value");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, decimals);

  // r = floor(value^(1/degree) * 10^decimals)
  BigInt scale_pow;
  mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_mpz_t(), degree);
  BigInt scaled = value * scale_pow;
  BigInt r;
  mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), degree);

  // round up iff value * (2*10^d)^degree >= (2r+1)^degree
  BigInt two_scale = 2 * scale;
  BigInt lhs, rhs, base = 2 * r + 1;
  mpz_pow_ui(lhs.get_mpz_t(), two_scale.get_mpz_t(), degree);
  lhs *= value;
  mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), degree);
  if (lhs >= rhs) r += 1;

  std::string digits = to_decimal(r);
  if (decimals == 0) return digits;
  if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
  digits.insert(digits.size() - decimals, 1, '.');
  return digits;
}

}  // namespace knotmosaic

#endif  // KNOTMOSAIC_BIGINT_HPP
