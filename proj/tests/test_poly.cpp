#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ffdet/field.hpp"
#include "ffdet/poly.hpp"
#include "ffdet/report.hpp"
#include "ffdet/rng.hpp"

using namespace ffdet;

namespace {

DensePoly random_poly(const FieldCtx& ctx, SplitMix64& rng, std::int64_t max_deg) {
  const std::int64_t deg = rng.below(max_deg + 1);
  std::vector<FieldElem> c;
  for (std::int64_t i = 0; i <= deg; ++i) {
    c.push_back(ctx.from_index(rng.below(ctx.q())));
  }
  return DensePoly::from_coeffs(ctx, std::move(c));
}

std::vector<std::int64_t> residues(const DensePoly& a) {
  std::vector<std::int64_t> out;
  for (const FieldElem& c : a.coeffs()) out.push_back(c.residue());
  return out;
}

}  // namespace

TEST_CASE("construction trims and normalizes") {
  const FieldCtx f5 = FieldCtx::prime_field(5);
  const DensePoly z = DensePoly::from_ints(f5, {0, 0, 0});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  const DensePoly a = DensePoly::from_ints(f5, {1, 2, 0, 0});
  CHECK(a.degree() == 1);
  CHECK(residues(a) == std::vector<std::int64_t>{1, 2});
  CHECK(DensePoly::from_ints(f5, {0, 0, 5}).is_zero());
  const DensePoly m = DensePoly::monomial(f5, 3, f5.from_int(2));
  CHECK(m.degree() == 3);
  CHECK(m.str() == "0,0,0,2");
}

TEST_CASE("ring operations against hand values") {
  const FieldCtx f5 = FieldCtx::prime_field(5);
  const DensePoly a = DensePoly::from_ints(f5, {1, 1});      // 1 + T
  const DensePoly b = DensePoly::from_ints(f5, {4, 0, 1});   // 4 + T^2
  CHECK(residues(a * b) == std::vector<std::int64_t>{4, 4, 1, 1});
  CHECK(residues(a + b) == std::vector<std::int64_t>{0, 1, 1});
  CHECK(residues(b - a) == std::vector<std::int64_t>{3, 4, 1});
  CHECK((a - a).is_zero());
  // (1+T)(4+T^2) evaluated at 2: 3 * 8 = 24 = 4 mod 5
  CHECK((a * b).eval(f5.from_int(2)).residue() == 4);
}

TEST_CASE("division with remainder") {
  const FieldCtx f7 = FieldCtx::prime_field(7);
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const DensePoly a = random_poly(f7, rng, 8);
    DensePoly b = random_poly(f7, rng, 4);
    if (b.is_zero()) b = DensePoly::from_ints(f7, {1, 1});
    const auto [quot, rem] = divmod(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
  }
  CHECK_THROWS(divmod(DensePoly::from_ints(f7, {1}), DensePoly::from_ints(f7, {0})));
}

TEST_CASE("powmod matches naive power then reduce") {
  const FieldCtx f5 = FieldCtx::prime_field(5);
  const DensePoly base = DensePoly::from_ints(f5, {1, 1, 1});
  const DensePoly vanish = vanishing_poly(f5);

  // frozen: (T^2+T+1)^3 mod (T^5 - T) over F_5
  CHECK(residues(powmod(base, 3, vanish)) ==
        std::vector<std::int64_t>{1, 1, 2, 2, 1});

  DensePoly naive = DensePoly::from_ints(f5, {1});
  for (int e = 0; e <= 6; ++e) {
    CHECK(powmod(base, e, vanish) == naive % vanish);
    naive = naive * base;
  }
  CHECK(powmod(base, 0, vanish).degree() == 0);
}

TEST_CASE("gcd is monic and divides both inputs") {
  const FieldCtx f5 = FieldCtx::prime_field(5);
  const DensePoly a = DensePoly::from_ints(f5, {1, 1});   // 1 + T
  const DensePoly b = DensePoly::from_ints(f5, {2, 1});   // 2 + T
  const DensePoly g = poly_gcd(a * a, a * b);
  CHECK(residues(g) == std::vector<std::int64_t>{1, 1});
  SplitMix64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const DensePoly x = random_poly(f5, rng, 5);
    const DensePoly y = random_poly(f5, rng, 5);
    if (x.is_zero() || y.is_zero()) continue;
    const DensePoly d = poly_gcd(x, y);
    CHECK(divmod(x, d).second.is_zero());
    CHECK(divmod(y, d).second.is_zero());
    CHECK(d.leading() == f5.one());
  }
}

TEST_CASE("evaluation and the vanishing polynomial") {
  const FieldCtx f25 = FieldCtx::extension_field(5, 2);
  const DensePoly vanish = vanishing_poly(f25);
  CHECK(vanish.degree() == 25);
  for (std::int64_t i = 0; i < 25; ++i) {
    CHECK(vanish.eval(f25.from_index(i)).is_zero());
  }
  // S(T) = T^{q-1} - 1 vanishes exactly on the nonzero elements,
  // and S'(a) = -1/a there
  DensePoly s = DensePoly::monomial(f25, 24, f25.one()) -
                DensePoly::from_ints(f25, {1});
  const DensePoly sp = s.derivative();
  for (const FieldElem& a : f25.nonzero_elements()) {
    CHECK(s.eval(a).is_zero());
    CHECK(sp.eval(a) == -(a.inv()));
  }
  CHECK(!s.eval(f25.zero()).is_zero());
}

TEST_CASE("formal derivative") {
  const FieldCtx f5 = FieldCtx::prime_field(5);
  // d/dT (T^4 - 1) = 4T^3 = -T^3
  const DensePoly s = DensePoly::monomial(f5, 4, f5.one()) -
                      DensePoly::from_ints(f5, {1});
  CHECK(residues(s.derivative()) == std::vector<std::int64_t>{0, 0, 0, 4});
  CHECK(DensePoly::from_ints(f5, {3}).derivative().is_zero());
  CHECK(residues(DensePoly::from_ints(f5, {0, 0, 1}).derivative()) ==
        std::vector<std::int64_t>{0, 2});
  // T^5 has derivative 5T^4 = 0 in characteristic 5
  CHECK(DensePoly::monomial(f5, 5, f5.one()).derivative().is_zero());
}

TEST_CASE("pointwise equivalence is congruence mod T^q - T") {
  const FieldCtx f5 = FieldCtx::prime_field(5);
  SplitMix64 rng(17);
  const DensePoly vanish = vanishing_poly(f5);
  for (int trial = 0; trial < 100; ++trial) {
    const DensePoly a = random_poly(f5, rng, 9);
    const DensePoly b = random_poly(f5, rng, 9);
    CHECK(pointwise_equiv(a, b) == (a % vanish == b % vanish));
    // adding a multiple of T^q - T never changes values
    CHECK(pointwise_equiv(a, a + vanish * b));
  }
  // T^5 and T agree pointwise over F_5 but differ as polynomials
  const DensePoly t5 = DensePoly::monomial(f5, 5, f5.one());
  const DensePoly t = DensePoly::monomial(f5, 1, f5.one());
  CHECK(pointwise_equiv(t5, t));
  CHECK(t5 != t);
}

TEST_CASE("monic polynomial from roots") {
  const FieldCtx f7 = FieldCtx::prime_field(7);
  const std::vector<FieldElem> roots{f7.from_int(1), f7.from_int(2), f7.from_int(4)};
  const DensePoly f = monic_from_roots(f7, roots);
  CHECK(f.degree() == 3);
  CHECK(f.leading() == f7.one());
  for (const FieldElem& root : roots) CHECK(f.eval(root).is_zero());
  CHECK(!f.eval(f7.from_int(3)).is_zero());
}

TEST_CASE("frozen coefficient vectors at q = 5") {
  const FieldCtx f5 = FieldCtx::prime_field(5);
  CHECK(residues(build_g(f5)) == std::vector<std::int64_t>{1, 1, 2, 2, 1});
  CHECK(residues(build_h(f5)) == std::vector<std::int64_t>{2, 1, 2, 2});
  CHECK(build_g(f5).str() == "1,1,2,2,1");
}

TEST_CASE("the two polynomials differ by the stated tail") {
  // g = h + (2/3)(1 - T^{q-1})
  for (std::int64_t q : {5, 11, 17}) {
    const FieldCtx ctx = FieldCtx::prime_field(q);
    const DensePoly g = build_g(ctx);
    const DensePoly h = build_h(ctx);
    CHECK(g.degree() == q - 1);
    CHECK(h.degree() == q - 2);
    const FieldElem two_thirds = ctx.from_int(2) / ctx.from_int(3);
    const DensePoly tail =
        DensePoly::from_coeffs(ctx, {two_thirds}) -
        DensePoly::monomial(ctx, q - 1, two_thirds);
    CHECK(h + tail == g);
  }
  const FieldCtx f125 = FieldCtx::extension_field(5, 3);
  CHECK(build_g(f125).degree() == 124);
  CHECK(build_h(f125).degree() == 123);
}

TEST_CASE("quadratic is coprime to the vanishing polynomial on valid q") {
  for (std::int64_t q : {5, 11, 17, 23}) {
    const FieldCtx ctx = FieldCtx::prime_field(q);
    const DensePoly base = DensePoly::from_ints(ctx, {1, 1, 1});
    const DensePoly g = poly_gcd(base, vanishing_poly(ctx));
    CHECK(g.degree() == 0);
    // equivalently: no root in F_q
    for (std::int64_t i = 0; i < q; ++i) {
      CHECK(!base.eval(ctx.from_index(i)).is_zero());
    }
  }
}

TEST_CASE("congruence verification passes on valid q and rejects others") {
  for (std::int64_t q : {5, 11, 17, 23}) {
    const VerificationReport report = verify_lemma21(FieldCtx::prime_field(q));
    CHECK(report.matched);
    CHECK(report.computed == "pow=ok;pointwise=ok;intermediate=ok;noroot=ok");
    CHECK(report.params.at("q") == q);
  }
  const VerificationReport ext = verify_lemma21(FieldCtx::extension_field(5, 3));
  CHECK(ext.matched);
  CHECK(ext.params.at("r") == 3);
  CHECK(ext.params.at("q") == 125);

  const VerificationReport bad = verify_lemma21(FieldCtx::prime_field(7));
  CHECK(!bad.matched);
  CHECK(is_precondition_failure(bad));
}
