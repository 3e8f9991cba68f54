#ifndef FFDET_LINALG_HPP
#define FFDET_LINALG_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ffdet/field.hpp"
#include "ffdet/rational.hpp"

namespace ffdet {

/// Dense square matrix over a FieldCtx, row-major.
class SquareMatrix {
 public:
  SquareMatrix(FieldCtx ctx, std::size_t n);
  static SquareMatrix identity(FieldCtx ctx, std::size_t n);

  std::size_t size() const { return n_; }
  const FieldCtx& context() const { return ctx_; }

  FieldElem& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const FieldElem& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  SquareMatrix operator*(const SquareMatrix& o) const;

 private:
  FieldCtx ctx_;
  std::size_t n_;
  std::vector<FieldElem> e_;
};

/// Dense square matrix of rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t n) : n_(n), e_(n * n) {}

  std::size_t size() const { return n_; }
  Rational& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Rational> e_;
};

/// Square matrix of exact integers (row-major nested vectors).
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Determinant over the field by Gaussian elimination with the first
/// nonzero pivot in each column and a running swap sign.  det of the
/// 0x0 matrix is 1.
FieldElem det_field(SquareMatrix m);

/// Determinant of an integer matrix by fraction-free Bareiss elimination
/// (every intermediate division is exact).
BigInt det_integer(IntMatrix m);

/// Exact rational determinant: clear each row's denominators to reach an
/// integer matrix, run Bareiss, divide by the accumulated row scales.
Rational det_rational(const RationalMatrix& m);

/// Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier
/// recurrence, exact over the rationals.  Coefficients constant term
/// first; the leading coefficient is 1.
std::vector<Rational> charpoly_rational(const RationalMatrix& m);

namespace detail {
inline Rational one_like(const Rational&) { return Rational(1); }
inline BigInt one_like(const BigInt&) { return BigInt(1); }
inline std::int64_t one_like(std::int64_t) { return 1; }
inline FieldElem one_like(const FieldElem& x) { return x.context().one(); }
}  // namespace detail

/// Product of (x_j - x_i) over all pairs i < j; the empty product for
/// fewer than two points.  xs must be nonempty (a ring identity is
/// derived from the first entry).
template <class T>
T vandermonde_product(const std::vector<T>& xs) {
  if (xs.empty()) throw std::invalid_argument("vandermonde_product: empty input");
  T acc = detail::one_like(xs.front());
  for (std::size_t j = 1; j < xs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = acc * (xs[j] - xs[i]);
    }
  }
  return acc;
}

/// Closed form for det[P(x_i * y_j)] where P(T) = sum p_k T^k has its n
/// coefficients given constant term first (so deg P < n):
///
///   det = (prod_k p_k) * (prod_{i<j} (x_j - x_i)) * (prod_{i<j} (y_j - y_i)).
///
/// All three vectors must have the same nonzero length n.
template <class T>
T cauchy_like_det(const std::vector<T>& p_coeffs, const std::vector<T>& xs,
                  const std::vector<T>& ys) {
  if (p_coeffs.size() != xs.size() || xs.size() != ys.size()) {
    throw std::invalid_argument("cauchy_like_det: length mismatch");
  }
  if (xs.empty()) throw std::invalid_argument("cauchy_like_det: empty input");
  T acc = p_coeffs.front();
  for (std::size_t k = 1; k < p_coeffs.size(); ++k) acc = acc * p_coeffs[k];
  return acc * vandermonde_product(xs) * vandermonde_product(ys);
}

}  // namespace ffdet

#endif  // FFDET_LINALG_HPP
