#include "ffdet/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ffdet {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::int64_t powmod_int(std::int64_t b, std::int64_t e, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("powmod_int: modulus must be positive");
  if (e < 0) throw std::invalid_argument("powmod_int: negative exponent");
  b %= m;
  if (b < 0) b += m;
  unsigned __int128 acc = 1 % m;
  unsigned __int128 base = static_cast<unsigned __int128>(b);
  while (e > 0) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(acc);
}

namespace {

// ---- arithmetic on polynomials over F_p as int64 coefficient vectors ----
// Used only for modulus construction and validation; element arithmetic
// below works on fixed-length vectors instead.

using IPoly = std::vector<std::int64_t>;

std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod_p(std::int64_t a, std::int64_t p) {
  // extended Euclid; a nonzero mod p, p prime
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw std::domain_error("inv_mod_p: not invertible");
  return mod_p(t, p);
}

void itrim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int ideg(const IPoly& a) { return static_cast<int>(a.size()) - 1; }

IPoly ireduce(IPoly a, std::int64_t p) {
  for (auto& c : a) c = mod_p(c, p);
  itrim(a);
  return a;
}

// remainder of a by monic f
IPoly imod(IPoly a, const IPoly& f, std::int64_t p) {
  const int df = ideg(f);
  for (int k = ideg(a); k >= df; --k) {
    std::int64_t c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int j = 0; j <= df; ++j) {
      auto& t = a[static_cast<std::size_t>(k - df + j)];
      t = mod_p(t - c * f[static_cast<std::size_t>(j)], p);
    }
  }
  itrim(a);
  return a;
}

IPoly imulmod(const IPoly& a, const IPoly& b, const IPoly& f, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  IPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = mod_p(prod[i + j] + a[i] * b[j], p);
    }
  }
  return imod(std::move(prod), f, p);
}

IPoly ipow_mod(IPoly base, std::int64_t e, const IPoly& f, std::int64_t p) {
  IPoly acc = imod({1}, f, p);
  base = imod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) acc = imulmod(acc, base, f, p);
    base = imulmod(base, base, f, p);
    e >>= 1;
  }
  return acc;
}

IPoly igcd(IPoly a, IPoly b, std::int64_t p) {
  while (!b.empty()) {
    // reduce a by b after making b monic
    std::int64_t lead_inv = inv_mod_p(b.back(), p);
    IPoly bm = b;
    for (auto& c : bm) c = mod_p(c * lead_inv, p);
    a = imod(std::move(a), bm, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    std::int64_t lead_inv = inv_mod_p(a.back(), p);
    for (auto& c : a) c = mod_p(c * lead_inv, p);
  }
  return a;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t checked_pow(std::int64_t p, int r) {
  std::int64_t q = 1;
  for (int i = 0; i < r; ++i) {
    if (q > (std::int64_t{1} << 40)) throw std::invalid_argument("field size out of desk-scale range");
    q *= p;
  }
  return q;
}

}  // namespace

bool is_irreducible(const std::vector<std::int64_t>& poly, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("is_irreducible: p must be prime");
  IPoly f = ireduce(poly, p);
  const int d = ideg(f);
  if (d < 1) throw std::invalid_argument("is_irreducible: degree must be at least 1");
  if (f.back() != 1) throw std::invalid_argument("is_irreducible: polynomial must be monic");
  if (d == 1) return true;

  // frob[i] = T^{p^i} mod f, built by iterated p-th powering
  const IPoly x = {0, 1};
  std::vector<IPoly> frob(static_cast<std::size_t>(d) + 1);
  frob[0] = x;
  for (int i = 1; i <= d; ++i) {
    frob[static_cast<std::size_t>(i)] =
        ipow_mod(frob[static_cast<std::size_t>(i - 1)], p, f, p);
  }
  if (frob[static_cast<std::size_t>(d)] != imod(x, f, p)) return false;

  for (std::int64_t ell : prime_factors(d)) {
    IPoly diff = frob[static_cast<std::size_t>(d / ell)];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod_p(diff[1] - 1, p);
    itrim(diff);
    if (ideg(igcd(f, std::move(diff), p)) != 0) return false;
  }
  return true;
}

std::vector<std::int64_t> canonical_irreducible(std::int64_t p, int r) {
  if (!is_prime(p)) throw std::invalid_argument("canonical_irreducible: p must be prime");
  if (r < 1) throw std::invalid_argument("canonical_irreducible: r must be >= 1");
  if (r == 1) return {0, 1};
  checked_pow(p, r);  // range guard
  std::vector<std::int64_t> c(static_cast<std::size_t>(r), 0);
  for (;;) {
    std::vector<std::int64_t> candidate = c;
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) return candidate;
    // next coefficient vector in lexicographic order: the last (highest
    // degree) coefficient moves fastest, the constant term slowest
    int k = r - 1;
    while (k >= 0 && c[static_cast<std::size_t>(k)] == p - 1) {
      c[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) throw std::logic_error("canonical_irreducible: search exhausted");
    ++c[static_cast<std::size_t>(k)];
  }
}

// ---------------------------------------------------------------- FieldCtx

FieldCtx FieldCtx::make(std::int64_t p, int r, std::vector<std::int64_t> modulus) {
  auto d = std::make_shared<Data>();
  d->p = p;
  d->r = r;
  d->q = checked_pow(p, r);
  d->modulus = std::move(modulus);
  return FieldCtx(std::move(d));
}

FieldCtx FieldCtx::prime_field(std::int64_t p) {
  if (p % 2 == 0) throw std::invalid_argument("prime_field: p must be odd");
  if (!is_prime(p)) throw std::invalid_argument("prime_field: p must be prime");
  return make(p, 1, {0, 1});
}

FieldCtx FieldCtx::extension_field(std::int64_t p, int r) {
  if (p % 2 == 0) throw std::invalid_argument("extension_field: p must be odd");
  if (!is_prime(p)) throw std::invalid_argument("extension_field: p must be prime");
  if (r < 1) throw std::invalid_argument("extension_field: r must be >= 1");
  return make(p, r, canonical_irreducible(p, r));
}

FieldCtx FieldCtx::extension_field(std::int64_t p, int r,
                                   const std::vector<std::int64_t>& modulus) {
  if (p % 2 == 0) throw std::invalid_argument("extension_field: p must be odd");
  if (!is_prime(p)) throw std::invalid_argument("extension_field: p must be prime");
  if (r < 1) throw std::invalid_argument("extension_field: r must be >= 1");
  IPoly f = ireduce(modulus, p);
  if (ideg(f) != r || f.back() != 1) {
    throw std::invalid_argument("extension_field: modulus must be monic of degree r");
  }
  if (r > 1 && !is_irreducible(f, p)) {
    throw std::invalid_argument("extension_field: modulus is reducible");
  }
  return make(p, r, std::move(f));
}

FieldElem FieldCtx::zero() const {
  return FieldElem(d_, std::vector<std::int64_t>(static_cast<std::size_t>(d_->r), 0));
}

FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::from_int(std::int64_t k) const {
  std::vector<std::int64_t> c(static_cast<std::size_t>(d_->r), 0);
  c[0] = mod_p(k, d_->p);
  return FieldElem(d_, std::move(c));
}

FieldElem FieldCtx::element(std::vector<std::int64_t> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(d_->r)) {
    throw std::invalid_argument("element: coefficient vector must have length r");
  }
  for (auto& c : coeffs) c = mod_p(c, d_->p);
  return FieldElem(d_, std::move(coeffs));
}

FieldElem FieldCtx::from_index(std::int64_t index) const {
  if (index < 0 || index >= d_->q) throw std::invalid_argument("from_index: index out of range");
  std::vector<std::int64_t> c(static_cast<std::size_t>(d_->r), 0);
  // base-p digits, constant coefficient most significant
  for (int k = d_->r - 1; k >= 0; --k) {
    c[static_cast<std::size_t>(k)] = index % d_->p;
    index /= d_->p;
  }
  return FieldElem(d_, std::move(c));
}

std::int64_t FieldCtx::index_of(const FieldElem& x) const {
  if (FieldCtx(x.d_) != *this) throw std::invalid_argument("index_of: element from a different field");
  std::int64_t idx = 0;
  for (std::int64_t c : x.c_) idx = idx * d_->p + c;
  return idx;
}

std::vector<FieldElem> FieldCtx::nonzero_elements() const {
  std::vector<FieldElem> out;
  out.reserve(static_cast<std::size_t>(d_->q - 1));
  for (std::int64_t i = 1; i < d_->q; ++i) out.push_back(from_index(i));
  return out;
}

bool FieldCtx::operator==(const FieldCtx& other) const {
  if (d_ == other.d_) return true;
  return d_->p == other.d_->p && d_->r == other.d_->r && d_->modulus == other.d_->modulus;
}

// --------------------------------------------------------------- FieldElem

void FieldElem::require_valid() const {
  if (!d_) throw std::logic_error("FieldElem: uninitialized element");
}

const FieldCtx::Data& FieldElem::common_data(const FieldElem& a, const FieldElem& b) {
  a.require_valid();
  b.require_valid();
  if (a.d_ != b.d_ && FieldCtx(a.d_) != FieldCtx(b.d_)) {
    throw std::invalid_argument("FieldElem: operands belong to different fields");
  }
  return *a.d_;
}

FieldCtx FieldElem::context() const {
  require_valid();
  return FieldCtx(d_);
}

bool FieldElem::is_zero() const {
  require_valid();
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

bool FieldElem::in_prime_subfield() const {
  require_valid();
  return std::all_of(c_.begin() + 1, c_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t FieldElem::residue() const {
  if (!in_prime_subfield()) {
    throw std::domain_error("residue: element lies outside the prime subfield");
  }
  return c_[0];
}

std::string FieldElem::str() const {
  require_valid();
  if (in_prime_subfield()) return std::to_string(c_[0]);
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c_[i]);
  }
  return out;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  const auto& d = common_data(*this, o);
  std::vector<std::int64_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t v = c_[i] + o.c_[i];
    c[i] = v >= d.p ? v - d.p : v;
  }
  return FieldElem(d_, std::move(c));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  const auto& d = common_data(*this, o);
  std::vector<std::int64_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t v = c_[i] - o.c_[i];
    c[i] = v < 0 ? v + d.p : v;
  }
  return FieldElem(d_, std::move(c));
}

FieldElem FieldElem::operator-() const {
  require_valid();
  std::vector<std::int64_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c[i] = c_[i] == 0 ? 0 : d_->p - c_[i];
  }
  return FieldElem(d_, std::move(c));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  const auto& d = common_data(*this, o);
  const std::int64_t p = d.p;
  const std::size_t r = c_.size();
  if (r == 1) {
    return FieldElem(d_, {c_[0] * o.c_[0] % p});
  }
  std::vector<std::int64_t> prod(2 * r - 1, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
    }
  }
  // reduce by the monic modulus
  for (std::size_t k = 2 * r - 2; k >= r; --k) {
    std::int64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      prod[k - r + j] = mod_p(prod[k - r + j] - c * d.modulus[j], p);
    }
    prod[k] = 0;
  }
  prod.resize(r);
  return FieldElem(d_, std::move(prod));
}

FieldElem FieldElem::inv() const {
  require_valid();
  if (is_zero()) throw std::domain_error("inv: zero has no inverse");
  const std::int64_t p = d_->p;
  if (d_->r == 1) {
    return FieldElem(d_, {inv_mod_p(c_[0], p)});
  }
  // extended Euclid in F_p[T] for gcd(x, modulus) = 1
  IPoly a(c_);
  itrim(a);
  IPoly m = d_->modulus;
  IPoly u = {1}, v = {};  // invariants: u*x ≡ a (mod modulus), v*x ≡ m (mod modulus)
  while (!m.empty()) {
    // divide a by m (general long division)
    std::int64_t lead_inv = inv_mod_p(m.back(), p);
    IPoly quot(a.size() > m.size() ? a.size() - m.size() + 1 : 1, 0);
    IPoly rem = a;
    while (ideg(rem) >= ideg(m)) {
      int shift = ideg(rem) - ideg(m);
      std::int64_t f = mod_p(rem.back() * lead_inv, p);
      quot[static_cast<std::size_t>(shift)] = f;
      for (std::size_t j = 0; j < m.size(); ++j) {
        auto& t = rem[static_cast<std::size_t>(shift) + j];
        t = mod_p(t - f * m[j], p);
      }
      itrim(rem);
    }
    itrim(quot);
    // (a, m) <- (m, a - quot*m);  (u, v) <- (v, u - quot*v)
    IPoly qv(quot.size() + v.size(), 0);
    if (!quot.empty() && !v.empty()) {
      qv.assign(quot.size() + v.size() - 1, 0);
      for (std::size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
          qv[i + j] = mod_p(qv[i + j] + quot[i] * v[j], p);
        }
      }
    } else {
      qv.clear();
    }
    IPoly new_u = u;
    if (new_u.size() < qv.size()) new_u.resize(qv.size(), 0);
    for (std::size_t i = 0; i < qv.size(); ++i) new_u[i] = mod_p(new_u[i] - qv[i], p);
    itrim(new_u);
    a = std::exchange(m, rem);
    u = std::exchange(v, new_u);
  }
  // a = gcd (a nonzero constant since the modulus is irreducible)
  if (ideg(a) != 0) throw std::logic_error("inv: gcd with the modulus is not constant");
  std::int64_t scale = inv_mod_p(a[0], p);
  std::vector<std::int64_t> out(static_cast<std::size_t>(d_->r), 0);
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = mod_p(u[i] * scale, p);
  return FieldElem(d_, std::move(out));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::pow(std::int64_t e) const {
  require_valid();
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  FieldElem acc = FieldCtx(d_).one();
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool FieldElem::operator==(const FieldElem& o) const {
  common_data(*this, o);
  return c_ == o.c_;
}

bool is_square(const FieldElem& x) {
  if (x.is_zero()) return true;
  const std::int64_t q = x.context().q();
  return x.pow((q - 1) / 2) == x.context().one();
}

}  // namespace ffdet
