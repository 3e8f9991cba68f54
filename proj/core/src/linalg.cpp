#include "ffdet/linalg.hpp"

#include <numeric>

namespace ffdet {

std::int64_t rational_mod(const Rational& x, std::int64_t p) {
  if (p <= 1) throw std::invalid_argument("rational_mod: modulus must exceed 1");
  const BigInt den = denominator(x);
  if (den % p == 0) {
    throw std::domain_error("rational_mod: denominator divisible by the modulus");
  }
  const std::int64_t num_mod = mod_int(numerator(x), p);
  const std::int64_t den_mod = mod_int(den, p);
  // den_mod^{-1} via Fermat would need p prime; use extended Euclid instead
  std::int64_t t = 0, new_t = 1, r = p, new_r = den_mod;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw std::domain_error("rational_mod: denominator not invertible");
  t %= p;
  if (t < 0) t += p;
  return static_cast<std::int64_t>(
      static_cast<unsigned __int128>(num_mod) * static_cast<unsigned __int128>(t) % p);
}

SquareMatrix::SquareMatrix(FieldCtx ctx, std::size_t n)
    : ctx_(std::move(ctx)), n_(n), e_(n * n, ctx_.zero()) {}

SquareMatrix SquareMatrix::identity(FieldCtx ctx, std::size_t n) {
  SquareMatrix m(std::move(ctx), n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.ctx_.one();
  return m;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
  if (ctx_ != o.ctx_ || n_ != o.n_) {
    throw std::invalid_argument("SquareMatrix: incompatible operands");
  }
  SquareMatrix out(ctx_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const FieldElem& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        out.at(i, j) = out.at(i, j) + aik * o.at(k, j);
      }
    }
  }
  return out;
}

FieldElem det_field(SquareMatrix m) {
  const FieldCtx ctx = m.context();
  const std::size_t n = m.size();
  FieldElem det = ctx.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return ctx.zero();
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m.at(col, j), m.at(pivot, j));
      det = -det;
    }
    const FieldElem inv_pivot = m.at(col, col).inv();
    det = det * m.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      const FieldElem f = m.at(i, col) * inv_pivot;
      for (std::size_t j = col + 1; j < n; ++j) {
        m.at(i, j) = m.at(i, j) - f * m.at(col, j);
      }
      m.at(i, col) = ctx.zero();
    }
  }
  return det;
}

BigInt det_integer(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("det_integer: matrix not square");
  }
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: this division is exact
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  BigInt det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

Rational det_rational(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  IntMatrix scaled(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      row_lcm = lcm(row_lcm, denominator(m.at(i, j)));
    }
    for (std::size_t j = 0; j < n; ++j) {
      scaled[i][j] = numerator(m.at(i, j)) * (row_lcm / denominator(m.at(i, j)));
    }
    scale *= row_lcm;
  }
  return make_rational(det_integer(std::move(scaled)), scale);
}

namespace {

using RatMat = std::vector<std::vector<Rational>>;

RatMat to_nested(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RatMat out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m.at(i, j);
  }
  return out;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size();
  RatMat out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

Rational mat_trace(const RatMat& a) {
  Rational t(0);
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

}  // namespace

std::vector<Rational> charpoly_rational(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return {Rational(1)};
  const RatMat a = to_nested(m);
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k,
  // M_{k+1} = A (M_k + c_{n-k} I)
  RatMat mk = a;
  c[n - 1] = -mat_trace(mk);
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    mk = mat_mul(a, mk);
    c[n - k] = -mat_trace(mk) / static_cast<int>(k);
  }
  return c;
}

}  // namespace ffdet
