#ifndef FFDET_TESTS_ORACLES_HPP
#define FFDET_TESTS_ORACLES_HPP

// Slow, independent reference implementations the fast library code is
// tested against.  Everything here favors being obviously correct over
// being efficient.

#include <cstdint>
#include <set>
#include <vector>

#include "ffdet/field.hpp"
#include "ffdet/linalg.hpp"
#include "ffdet/rational.hpp"

namespace ffdet::oracles {

/// Determinant by recursive cofactor expansion along the first row.
/// `zero` seeds the accumulator (so the oracle needs no default value).
/// The matrix must be nonempty; the wrappers below handle the 0x0 case.
template <class T>
T det_cofactor(const std::vector<std::vector<T>>& m, const T& zero) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("det_cofactor: empty matrix");
  if (n == 1) return m[0][0];
  T acc = zero;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<T>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const T term = m[0][j] * det_cofactor(minor, zero);
    if (j % 2 == 0) {
      acc = acc + term;
    } else {
      acc = acc - term;
    }
  }
  return acc;
}

inline FieldElem det_cofactor_field(const SquareMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<FieldElem>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(m.at(i, j));
  }
  if (n == 0) return m.context().one();
  return det_cofactor(rows, m.context().zero());
}

inline Rational det_cofactor_rational(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  std::vector<std::vector<Rational>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(m.at(i, j));
  }
  return det_cofactor(rows, Rational(0));
}

/// Dense rational polynomials in one variable, constant term first —
/// support for the characteristic-polynomial oracle.
using RatPoly = std::vector<Rational>;

inline RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

inline RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline RatPoly poly_trim(RatPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

/// det(tI - M) by cofactor expansion over polynomial entries; the result
/// is trimmed and has n + 1 coefficients, constant first, leading 1.
inline RatPoly charpoly_minor_expansion(const RationalMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<RatPoly>> entries(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RatPoly e{-m.at(i, j)};
      if (i == j) e.push_back(Rational(1));
      entries[i].push_back(poly_trim(std::move(e)));
    }
  }

  // recursive cofactor over RatPoly entries
  struct Rec {
    static RatPoly det(const std::vector<std::vector<RatPoly>>& a) {
      const std::size_t k = a.size();
      if (k == 0) return {Rational(1)};
      if (k == 1) return a[0][0];
      RatPoly acc;
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::vector<RatPoly>> minor;
        minor.reserve(k - 1);
        for (std::size_t i = 1; i < k; ++i) {
          std::vector<RatPoly> row;
          row.reserve(k - 1);
          for (std::size_t c = 0; c < k; ++c) {
            if (c != j) row.push_back(a[i][c]);
          }
          minor.push_back(std::move(row));
        }
        const RatPoly term = poly_mul(a[0][j], det(minor));
        acc = (j % 2 == 0) ? poly_add(acc, term) : poly_sub(acc, term);
      }
      return poly_trim(acc);
    }
  };
  return Rec::det(entries);
}

/// The set of squares of a field, computed exhaustively.
inline std::set<std::int64_t> square_indices(const FieldCtx& ctx) {
  std::set<std::int64_t> out;
  for (std::int64_t i = 0; i < ctx.q(); ++i) {
    const FieldElem x = ctx.from_index(i);
    out.insert(ctx.index_of(x * x));
  }
  return out;
}

/// Permutation sign by counting inversions: (-1)^{#\{i<j : perm[i] > perm[j]\}}.
inline int perm_sign_by_inversions(const std::vector<std::size_t>& perm) {
  std::int64_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

/// Irreducibility over F_p by root search — valid only for degrees 2 and
/// 3, where reducible implies a linear factor.  `poly` is constant first.
inline bool irreducible_by_roots(const std::vector<std::int64_t>& poly,
                                 std::int64_t p) {
  const std::size_t deg = poly.size() - 1;
  if (deg != 2 && deg != 3) throw std::invalid_argument("degree must be 2 or 3");
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = 0;
    for (std::size_t k = poly.size(); k-- > 0;) v = (v * x + poly[k]) % p;
    if (v % p == 0) return false;
  }
  return true;
}

/// First monic irreducible of degree 2 or 3 in the canonical enumeration:
/// constant coefficient most significant, last coefficient fastest.
inline std::vector<std::int64_t> first_irreducible_by_scan(std::int64_t p, int r) {
  std::int64_t total = 1;
  for (int i = 0; i < r; ++i) total *= p;
  for (std::int64_t n = 0; n < total; ++n) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(r) + 1, 0);
    coeffs.back() = 1;
    std::int64_t rest = n;
    for (int k = r - 1; k >= 0; --k) {
      coeffs[static_cast<std::size_t>(k)] = rest % p;
      rest /= p;
    }
    if (irreducible_by_roots(coeffs, p)) return coeffs;
  }
  throw std::logic_error("no irreducible found");
}

}  // namespace ffdet::oracles

#endif  // FFDET_TESTS_ORACLES_HPP
