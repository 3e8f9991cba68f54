#ifndef FFDET_CHARACTERS_HPP
#define FFDET_CHARACTERS_HPP

#include <cstdint>
#include <vector>

#include "ffdet/field.hpp"

namespace ffdet {

/// Value of a quadratic character or of a permutation sign: -1, 0 or +1.
class Sign {
 public:
  Sign() = default;  // +1
  static Sign plus() { return Sign(1); }
  static Sign minus() { return Sign(-1); }
  static Sign zero() { return Sign(0); }

  /// Validates v in {-1, 0, +1}.
  static Sign of(int v);

  /// (-1)^k, for any integer k (negative allowed).
  static Sign of_parity(std::int64_t k) { return (k % 2) ? minus() : plus(); }

  int value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Sign operator*(Sign o) const { return Sign(static_cast<std::int8_t>(v_ * o.v_)); }
  Sign operator-() const { return Sign(static_cast<std::int8_t>(-v_)); }
  bool operator==(const Sign&) const = default;

 private:
  explicit Sign(std::int8_t v) : v_(v) {}
  std::int8_t v_ = 1;
};

/// Legendre symbol (a/p) via Euler's criterion, for an odd prime p
/// (validated by trial division).  Returns 0 when p divides a.
Sign legendre(std::int64_t a, std::int64_t p);

/// Jacobi symbol (a/m) for odd positive m, by iterated quadratic
/// reciprocity.  (a/1) = +1; returns 0 when gcd(a, m) > 1.
Sign jacobi(std::int64_t a, std::int64_t m);

/// Quadratic character mod 3: +1, -1, 0 for k ≡ 1, 2, 0 (mod 3).
Sign chi3(std::int64_t k);

/// chi3(k) + chi3(1-k): equals 1 when k ≡ 0, 1 (mod 3) and -2 when
/// k ≡ 2 (mod 3).
int chi3_bracket(std::int64_t k);

/// Sign of the multiplication-by-a permutation x -> a*x on Z/m, for
/// gcd(a, m) = 1: (a/m) for odd m, +1 for m ≡ 2 (mod 4), and
/// (-1)^{(a-1)/2} for m ≡ 0 (mod 4).
Sign lerch_sign(std::int64_t a, std::int64_t m);

/// Sign of an explicit permutation: images[i] is the image of i.
/// Validates that the map is a bijection on {0, ..., n-1}; the sign is
/// (-1)^{n - #cycles} from the cycle decomposition.
Sign perm_sign_bruteforce(const std::vector<std::size_t>& images);

/// Sign of x -> x^{-1} on the nonzero elements of the field, by the
/// closed form (-1)^{(q+1)/2}.
Sign sigma_inverse_sign(const FieldCtx& ctx);

/// The same sign computed the slow way: enumerate the nonzero elements,
/// build the inversion permutation, take its cycle sign.
Sign sigma_inverse_sign_bruteforce(const FieldCtx& ctx);

}  // namespace ffdet

#endif  // FFDET_CHARACTERS_HPP
