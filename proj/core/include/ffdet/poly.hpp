#ifndef FFDET_POLY_HPP
#define FFDET_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffdet/field.hpp"
#include "ffdet/report.hpp"

namespace ffdet {

/// Dense univariate polynomial over a FieldCtx.  Coefficients are stored
/// constant term first and kept trimmed (no trailing zeros), so the zero
/// polynomial has an empty coefficient vector and degree -1.
class DensePoly {
 public:
  /// The zero polynomial.
  explicit DensePoly(FieldCtx ctx);

  static DensePoly from_coeffs(FieldCtx ctx, std::vector<FieldElem> coeffs);
  static DensePoly from_ints(FieldCtx ctx, const std::vector<std::int64_t>& coeffs);

  /// coeff * T^degree.
  static DensePoly monomial(FieldCtx ctx, std::int64_t degree, const FieldElem& coeff);

  const FieldCtx& context() const { return ctx_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }

  /// Coefficient of T^k (zero beyond the degree).
  FieldElem coeff(std::size_t k) const;

  /// Leading coefficient; throws std::domain_error on the zero polynomial.
  FieldElem leading() const;

  /// Canonical serialization: coefficients joined with commas, constant
  /// term first ("0" for the zero polynomial).  Coefficients outside the
  /// prime subfield are parenthesized so the list stays unambiguous.
  std::string str() const;

  DensePoly operator+(const DensePoly& o) const;
  DensePoly operator-(const DensePoly& o) const;
  DensePoly operator*(const DensePoly& o) const;

  /// Remainder of division by o; throws std::domain_error when o is zero.
  DensePoly operator%(const DensePoly& o) const;

  bool operator==(const DensePoly& o) const;
  bool operator!=(const DensePoly& o) const { return !(*this == o); }

  /// Horner evaluation.
  FieldElem eval(const FieldElem& x) const;

  /// Formal derivative.
  DensePoly derivative() const;

 private:
  void trim();
  static const FieldCtx& common_ctx(const DensePoly& a, const DensePoly& b);

  FieldCtx ctx_;
  std::vector<FieldElem> c_;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b);

/// base^e mod modulus by square-and-multiply, reducing after every step;
/// e >= 0 and powmod(base, 0, m) = 1 mod m.
DensePoly powmod(const DensePoly& base, std::int64_t e, const DensePoly& modulus);

/// Monic greatest common divisor (zero when both inputs are zero).
DensePoly poly_gcd(DensePoly a, DensePoly b);

/// True iff a and b take the same value at every point of the field.
/// Equivalent to (a - b) being divisible by T^q - T.
bool pointwise_equiv(const DensePoly& a, const DensePoly& b);

/// T^q - T, the polynomial vanishing on all of F_q.
DensePoly vanishing_poly(const FieldCtx& ctx);

/// Monic polynomial with the given roots: the product of (T - root).
DensePoly monic_from_roots(const FieldCtx& ctx, const std::vector<FieldElem>& roots);

/// The degree-(q-1) polynomial g with g(x) = (x^2 + x + 1)^{q-2} for every
/// x in F_q, built coefficientwise from the chi3 brackets:
///   g = 1 + (1/3) * sum_{k=2}^{q-2} (chi3(k) + chi3(1-k)) T^{k-1}
///         + (1/3) T^{q-2} - (2/3) T^{q-1}.
/// Requires q ≡ 2 (mod 3).
DensePoly build_g(const FieldCtx& ctx);

/// The degree-(q-2) variant h = g - 2/3 + (2/3) T^{q-1}, which agrees with
/// g at every nonzero point.  Requires q ≡ 2 (mod 3).
DensePoly build_h(const FieldCtx& ctx);

/// Checks that (T^2 + T + 1)^{q-2} and build_g(ctx) agree, by two
/// independent routes (reduction mod T^q - T, and evaluation at every
/// point), together with the intermediate congruence
/// (T^2+T+1)^2 * g ≡ T^2+T+1 (mod T^q - T) and the fact that T^2+T+1 has
/// no root in F_q.  A field with q not ≡ 2 (mod 3) yields a failed report
/// marked "precondition-failure", not an exception.
VerificationReport verify_lemma21(const FieldCtx& ctx);

}  // namespace ffdet

#endif  // FFDET_POLY_HPP
