#include "ffdet/characters.hpp"

#include <numeric>
#include <stdexcept>

namespace ffdet {

Sign Sign::of(int v) {
  if (v < -1 || v > 1) throw std::invalid_argument("Sign::of: value must be -1, 0 or +1");
  return Sign(static_cast<std::int8_t>(v));
}

Sign legendre(std::int64_t a, std::int64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre: p must be an odd prime");
  }
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return Sign::zero();
  return powmod_int(a, (p - 1) / 2, p) == 1 ? Sign::plus() : Sign::minus();
}

Sign jacobi(std::int64_t a, std::int64_t m) {
  if (m <= 0 || m % 2 == 0) {
    throw std::invalid_argument("jacobi: m must be odd and positive");
  }
  a %= m;
  if (a < 0) a += m;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = m % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) t = -t;
    a %= m;
  }
  return m == 1 ? Sign::of(t) : Sign::zero();
}

Sign chi3(std::int64_t k) {
  switch (((k % 3) + 3) % 3) {
    case 1: return Sign::plus();
    case 2: return Sign::minus();
    default: return Sign::zero();
  }
}

int chi3_bracket(std::int64_t k) {
  return ((k % 3) + 3) % 3 == 2 ? -2 : 1;
}

Sign lerch_sign(std::int64_t a, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("lerch_sign: m must be positive");
  std::int64_t am = ((a % m) + m) % m;
  if (std::gcd(am, m) != 1) {
    throw std::invalid_argument("lerch_sign: a must be coprime to m");
  }
  if (m % 2 == 1) return jacobi(a, m);
  if (m % 4 == 2) return Sign::plus();
  // m ≡ 0 (mod 4), a odd: (-1)^{(a-1)/2} depends on a mod 4 only
  return ((a % 4) + 4) % 4 == 1 ? Sign::plus() : Sign::minus();
}

Sign perm_sign_bruteforce(const std::vector<std::size_t>& images) {
  const std::size_t n = images.size();
  std::vector<bool> hit(n, false);
  for (std::size_t v : images) {
    if (v >= n || hit[v]) {
      throw std::invalid_argument("perm_sign_bruteforce: not a bijection");
    }
    hit[v] = true;
  }
  std::vector<bool> visited(n, false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!visited[j]) {
      visited[j] = true;
      j = images[j];
    }
  }
  return Sign::of_parity(static_cast<std::int64_t>(n - cycles));
}

Sign sigma_inverse_sign(const FieldCtx& ctx) {
  return Sign::of_parity((ctx.q() + 1) / 2);
}

Sign sigma_inverse_sign_bruteforce(const FieldCtx& ctx) {
  const std::int64_t n = ctx.q() - 1;
  std::vector<std::size_t> images(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    FieldElem x = ctx.from_index(i);
    images[static_cast<std::size_t>(i - 1)] =
        static_cast<std::size_t>(ctx.index_of(x.inv()) - 1);
  }
  return perm_sign_bruteforce(images);
}

}  // namespace ffdet
