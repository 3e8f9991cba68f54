#ifndef FFDET_RATIONAL_HPP
#define FFDET_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffdet {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number: always reduced to lowest terms with a positive
/// denominator (both enforced by the representation).
using Rational = boost::multiprecision::cpp_rational;

/// num/den with normalized sign; den may be negative or zero here
/// (zero throws), unlike the two-argument cpp_rational constructor.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  return Rational(num) / Rational(den);
}

/// Canonical serialization "num/den", reduced, denominator positive
/// (so integers render as e.g. "-2/1").
inline std::string rat_str(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Least nonnegative residue of a mod m, m > 0.
inline std::int64_t mod_int(const BigInt& a, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("mod_int: modulus must be positive");
  BigInt r = a % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

/// x mod p for an x whose reduced denominator is coprime to p:
/// numerator * denominator^{-1} mod p.  Throws std::domain_error when p
/// divides the denominator.
std::int64_t rational_mod(const Rational& x, std::int64_t p);

}  // namespace ffdet

#endif  // FFDET_RATIONAL_HPP
