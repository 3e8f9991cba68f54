#include "ffdet/poly.hpp"

#include <chrono>
#include <stdexcept>

#include "ffdet/characters.hpp"

namespace ffdet {

DensePoly::DensePoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}

void DensePoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const FieldCtx& DensePoly::common_ctx(const DensePoly& a, const DensePoly& b) {
  if (a.ctx_ != b.ctx_) {
    throw std::invalid_argument("DensePoly: operands belong to different fields");
  }
  return a.ctx_;
}

DensePoly DensePoly::from_coeffs(FieldCtx ctx, std::vector<FieldElem> coeffs) {
  DensePoly out(std::move(ctx));
  for (const FieldElem& c : coeffs) {
    if (c.context() != out.ctx_) {
      throw std::invalid_argument("from_coeffs: coefficient from a different field");
    }
  }
  out.c_ = std::move(coeffs);
  out.trim();
  return out;
}

DensePoly DensePoly::from_ints(FieldCtx ctx, const std::vector<std::int64_t>& coeffs) {
  std::vector<FieldElem> c;
  c.reserve(coeffs.size());
  for (std::int64_t v : coeffs) c.push_back(ctx.from_int(v));
  return from_coeffs(std::move(ctx), std::move(c));
}

DensePoly DensePoly::monomial(FieldCtx ctx, std::int64_t degree, const FieldElem& coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<FieldElem> c(static_cast<std::size_t>(degree) + 1, ctx.zero());
  c.back() = coeff;
  return from_coeffs(std::move(ctx), std::move(c));
}

FieldElem DensePoly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : ctx_.zero();
}

FieldElem DensePoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading: zero polynomial");
  return c_.back();
}

std::string DensePoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    if (c_[i].in_prime_subfield()) {
      out += c_[i].str();
    } else {
      out += '(';
      out += c_[i].str();
      out += ')';
    }
  }
  return out;
}

DensePoly DensePoly::operator+(const DensePoly& o) const {
  const FieldCtx& ctx = common_ctx(*this, o);
  const std::size_t n = std::max(c_.size(), o.c_.size());
  std::vector<FieldElem> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= c_.size()) {
      c.push_back(o.c_[i]);
    } else if (i >= o.c_.size()) {
      c.push_back(c_[i]);
    } else {
      c.push_back(c_[i] + o.c_[i]);
    }
  }
  return from_coeffs(ctx, std::move(c));
}

DensePoly DensePoly::operator-(const DensePoly& o) const {
  const FieldCtx& ctx = common_ctx(*this, o);
  const std::size_t n = std::max(c_.size(), o.c_.size());
  std::vector<FieldElem> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= c_.size()) {
      c.push_back(-o.c_[i]);
    } else if (i >= o.c_.size()) {
      c.push_back(c_[i]);
    } else {
      c.push_back(c_[i] - o.c_[i]);
    }
  }
  return from_coeffs(ctx, std::move(c));
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
  const FieldCtx& ctx = common_ctx(*this, o);
  if (c_.empty() || o.c_.empty()) return DensePoly(ctx);
  std::vector<FieldElem> c(c_.size() + o.c_.size() - 1, ctx.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      c[i + j] = c[i + j] + c_[i] * o.c_[j];
    }
  }
  return from_coeffs(ctx, std::move(c));
}

std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
  if (a.context() != b.context()) {
    throw std::invalid_argument("divmod: operands belong to different fields");
  }
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  const FieldCtx& ctx = a.context();
  if (a.degree() < b.degree()) return {DensePoly(ctx), a};

  const FieldElem lead_inv = b.leading().inv();
  std::vector<FieldElem> rem(a.coeffs());
  std::vector<FieldElem> quot(
      static_cast<std::size_t>(a.degree() - b.degree()) + 1, ctx.zero());
  const auto& bc = b.coeffs();
  const long db = b.degree();
  for (long k = a.degree(); k >= db; --k) {
    auto uk = static_cast<std::size_t>(k);
    if (rem[uk].is_zero()) continue;
    const auto shift = static_cast<std::size_t>(k - db);
    FieldElem f = rem[uk] * lead_inv;
    quot[shift] = f;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      rem[shift + j] = rem[shift + j] - f * bc[j];
    }
  }
  return {DensePoly::from_coeffs(ctx, std::move(quot)),
          DensePoly::from_coeffs(ctx, std::move(rem))};
}

DensePoly DensePoly::operator%(const DensePoly& o) const {
  return divmod(*this, o).second;
}

bool DensePoly::operator==(const DensePoly& o) const {
  common_ctx(*this, o);
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return false;
  }
  return true;
}

FieldElem DensePoly::eval(const FieldElem& x) const {
  if (x.context() != ctx_) {
    throw std::invalid_argument("eval: point from a different field");
  }
  FieldElem acc = ctx_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i];
  }
  return acc;
}

DensePoly DensePoly::derivative() const {
  if (c_.size() <= 1) return DensePoly(ctx_);
  std::vector<FieldElem> c;
  c.reserve(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) {
    c.push_back(ctx_.from_int(static_cast<std::int64_t>(k)) * c_[k]);
  }
  return from_coeffs(ctx_, std::move(c));
}

DensePoly powmod(const DensePoly& base, std::int64_t e, const DensePoly& modulus) {
  if (e < 0) throw std::invalid_argument("powmod: negative exponent");
  const FieldCtx& ctx = base.context();
  if (ctx != modulus.context()) {
    throw std::invalid_argument("powmod: operands belong to different fields");
  }
  if (modulus.is_zero()) throw std::domain_error("powmod: zero modulus");
  DensePoly acc = DensePoly::from_ints(ctx, {1}) % modulus;
  DensePoly b = base % modulus;
  while (e > 0) {
    if (e & 1) acc = (acc * b) % modulus;
    b = (b * b) % modulus;
    e >>= 1;
  }
  return acc;
}

DensePoly poly_gcd(DensePoly a, DensePoly b) {
  const FieldCtx ctx = a.context();
  if (ctx != b.context()) {
    throw std::invalid_argument("poly_gcd: operands belong to different fields");
  }
  while (!b.is_zero()) {
    DensePoly r = a % b;
    a = std::exchange(b, r);
  }
  if (a.is_zero()) return a;
  // normalize to a monic gcd
  FieldElem scale = a.leading().inv();
  std::vector<FieldElem> c = a.coeffs();
  for (auto& v : c) v = v * scale;
  return DensePoly::from_coeffs(ctx, std::move(c));
}

bool pointwise_equiv(const DensePoly& a, const DensePoly& b) {
  const FieldCtx& ctx = a.context();
  if (ctx != b.context()) {
    throw std::invalid_argument("pointwise_equiv: operands belong to different fields");
  }
  for (std::int64_t i = 0; i < ctx.q(); ++i) {
    FieldElem x = ctx.from_index(i);
    if (a.eval(x) != b.eval(x)) return false;
  }
  return true;
}

DensePoly vanishing_poly(const FieldCtx& ctx) {
  std::vector<FieldElem> c(static_cast<std::size_t>(ctx.q()) + 1, ctx.zero());
  c[1] = -ctx.one();
  c.back() = ctx.one();
  return DensePoly::from_coeffs(ctx, std::move(c));
}

DensePoly monic_from_roots(const FieldCtx& ctx, const std::vector<FieldElem>& roots) {
  DensePoly acc = DensePoly::from_ints(ctx, {1});
  for (const FieldElem& root : roots) {
    acc = acc * DensePoly::from_coeffs(ctx, {-root, ctx.one()});
  }
  return acc;
}

namespace {

void require_valid_q(const FieldCtx& ctx, const char* who) {
  if (ctx.q() % 3 != 2) {
    throw std::invalid_argument(std::string(who) + ": field size must be ≡ 2 (mod 3)");
  }
}

}  // namespace

DensePoly build_g(const FieldCtx& ctx) {
  require_valid_q(ctx, "build_g");
  const std::int64_t q = ctx.q();
  const FieldElem third = ctx.from_int(3).inv();
  std::vector<FieldElem> c(static_cast<std::size_t>(q), ctx.zero());
  c[0] = ctx.one();
  for (std::int64_t k = 2; k <= q - 2; ++k) {
    c[static_cast<std::size_t>(k - 1)] = third * ctx.from_int(chi3_bracket(k));
  }
  c[static_cast<std::size_t>(q - 2)] = c[static_cast<std::size_t>(q - 2)] + third;
  c[static_cast<std::size_t>(q - 1)] = -(third + third);
  return DensePoly::from_coeffs(ctx, std::move(c));
}

DensePoly build_h(const FieldCtx& ctx) {
  require_valid_q(ctx, "build_h");
  const std::int64_t q = ctx.q();
  const FieldElem third = ctx.from_int(3).inv();
  std::vector<FieldElem> c(static_cast<std::size_t>(q - 1), ctx.zero());
  c[0] = third;
  for (std::int64_t k = 2; k <= q - 2; ++k) {
    c[static_cast<std::size_t>(k - 1)] = third * ctx.from_int(chi3_bracket(k));
  }
  c[static_cast<std::size_t>(q - 2)] = c[static_cast<std::size_t>(q - 2)] + third;
  return DensePoly::from_coeffs(ctx, std::move(c));
}

VerificationReport verify_lemma21(const FieldCtx& ctx) {
  std::map<std::string, std::int64_t> params{
      {"p", ctx.p()}, {"q", ctx.q()}, {"r", ctx.r()}};
  if (ctx.q() % 3 != 2) {
    return precondition_failure(ClaimId::lemma_2_1, std::move(params),
                                "field size must be ≡ 2 (mod 3)");
  }
  const auto start = std::chrono::steady_clock::now();

  const std::int64_t q = ctx.q();
  const DensePoly base = DensePoly::from_ints(ctx, {1, 1, 1});
  const DensePoly vanish = vanishing_poly(ctx);
  const DensePoly g = build_g(ctx);

  // route 1: reduction mod T^q - T
  const bool pow_ok = powmod(base, q - 2, vanish) == (g % vanish);

  // route 2: evaluation at every point, plus the no-root check
  bool pointwise_ok = true;
  bool noroot_ok = true;
  for (std::int64_t i = 0; i < q; ++i) {
    FieldElem x = ctx.from_index(i);
    FieldElem v = base.eval(x);
    if (v.is_zero()) noroot_ok = false;
    if (v.pow(q - 2) != g.eval(x)) pointwise_ok = false;
  }

  // the intermediate congruence (T^2+T+1)^2 * g ≡ T^2+T+1 (mod T^q - T)
  const bool intermediate_ok = (base * base * g) % vanish == base % vanish;

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  auto word = [](bool ok) { return ok ? "ok" : "fail"; };
  std::string computed = std::string("pow=") + word(pow_ok) +
                         ";pointwise=" + word(pointwise_ok) +
                         ";intermediate=" + word(intermediate_ok) +
                         ";noroot=" + word(noroot_ok);
  return make_report(ClaimId::lemma_2_1, std::move(params), std::move(computed),
                     "pow=ok;pointwise=ok;intermediate=ok;noroot=ok", elapsed);
}

}  // namespace ffdet
