#include <doctest.h>

#include <random>

#include "cygoppa/poly.hpp"

using namespace cygoppa;

namespace {

Polynomial random_poly(const FieldSpec& f, int max_deg, std::mt19937_64& rng) {
  std::vector<std::uint32_t> c(1 + rng() % (max_deg + 1));
  for (auto& x : c) x = static_cast<std::uint32_t>(rng() % f.size());
  return Polynomial(f, std::move(c));
}

}  // namespace

TEST_CASE("polynomial ring operations") {
  const FieldSpec& f2 = FieldSpec::gf2();
  const Polynomial x1 = Polynomial::from_gf2_mask(0x3);  // x+1
  CHECK(x1.square() == Polynomial::from_gf2_mask(0x5));  // x^2+1

  auto [q, r] = Polynomial::from_gf2_mask(0x9).divmod(x1);  // x^3+1 / (x+1)
  CHECK(q == Polynomial::from_gf2_mask(0x7));
  CHECK(r.is_zero());

  const FieldSpec& f4 = FieldSpec::get(2);
  const Polynomial p =
      Polynomial::linear(f4.generator()) * Polynomial::linear(f4.generator().square());
  CHECK(p == Polynomial(f4, {1, 1, 1}));  // (x+g)(x+g^2) = x^2+x+1

  CHECK_THROWS_AS(p.divmod(Polynomial::zero(f4)), Error);
  CHECK_THROWS_AS((void)(x1 * p), Error);  // mixed fields

  SUBCASE("divmod round-trip") {
    std::mt19937_64 rng(5);
    for (const FieldSpec* f : {&f2, &FieldSpec::get(4)}) {
      for (int i = 0; i < 200; ++i) {
        const Polynomial a = random_poly(*f, 12, rng);
        Polynomial b = random_poly(*f, 6, rng);
        if (b.is_zero()) b = Polynomial::one(*f);
        auto [quo, rem] = a.divmod(b);
        CHECK(quo * b + rem == a);
        CHECK(rem.degree() < b.degree());
      }
    }
  }
}

TEST_CASE("gcd and lcm") {
  const Polynomial x1 = Polynomial::from_gf2_mask(0x3);
  CHECK(poly_gcd(x1, x1) == x1);

  const Polynomial c1 = Polynomial::from_gf2_mask(0xB);  // x^3+x+1
  const Polynomial c2 = Polynomial::from_gf2_mask(0xD);  // x^3+x^2+1
  CHECK(poly_lcm(c1, c2) == c1 * c2);  // coprime irreducibles

  // both arguments divide x^21 - 1
  const Polynomial x21 = Polynomial::x_pow_n_minus_1(FieldSpec::gf2(), 21);
  const Polynomial d = x1 * Polynomial::from_gf2_mask(0x57);  // (x+1)(x^6+x^4+x^2+x+1)
  CHECK(d.divides(x21));
  CHECK(poly_gcd(x21, d) == d);

  CHECK_THROWS_AS(poly_gcd(Polynomial::zero(FieldSpec::gf2()),
                           Polynomial::zero(FieldSpec::gf2())),
                  Error);
  CHECK(poly_gcd(c1, Polynomial::zero(FieldSpec::gf2())) == c1);
}

TEST_CASE("evaluation") {
  const FieldSpec& f4 = FieldSpec::get(2);
  const Polynomial p(f4, {1, 1, 1});  // x^2+x+1
  CHECK(p.eval(f4.zero()) == f4.one());
  CHECK(p.eval(f4.generator()).is_zero());
  const Polynomial sq = Polynomial::linear(f4.one()).square();
  CHECK(sq.eval(f4.one()).is_zero());
}

TEST_CASE("minimal polynomials over GF(2)") {
  const FieldSpec& f64 = FieldSpec::get(6);
  CHECK(minimal_polynomial_gf2(f64.one()) == Polynomial::from_gf2_mask(0x3));

  // order 9 -> x^6+x^3+1, order 3 -> x^2+x+1 (independent of representation)
  CHECK(minimal_polynomial_gf2(f64.generator_pow(7)) == Polynomial::from_gf2_mask(0x49));
  CHECK(minimal_polynomial_gf2(f64.generator_pow(21)) == Polynomial::from_gf2_mask(0x7));

  SUBCASE("Frobenius-orbit invariance") {
    for (std::uint32_t x = 1; x < f64.size(); ++x) {
      const FieldElement e = f64.element(x);
      CHECK(minimal_polynomial_gf2(e) == minimal_polynomial_gf2(e.square()));
    }
  }
  CHECK_THROWS_AS(minimal_polynomial_gf2(f64.zero()), Error);
}

TEST_CASE("orbit polynomials") {
  const FieldSpec& f2 = FieldSpec::gf2();
  const MoebiusMap m = MoebiusMap::normalized(f2.zero(), f2.one(), f2.one(), f2.one(), 0);

  SUBCASE("the full 3-cycle through infinity is rejected") {
    const Orbit o = orbit_of(m, ProjPoint::infinity());
    CHECK(o.size() == 3);
    CHECK_THROWS_AS(orbit_polynomial(o), Error);
  }
  SUBCASE("a fixed point gives x + beta") {
    const FieldSpec& f8 = FieldSpec::get(3);
    const MoebiusMap id =
        MoebiusMap::normalized(f8.one(), f8.zero(), f8.zero(), f8.one(), 0);
    const FieldElement beta = f8.generator_pow(3);
    const Orbit o = orbit_of(id, ProjPoint::finite(beta));
    CHECK(orbit_polynomial(o) == Polynomial::linear(beta));
  }
  SUBCASE("a full affine orbit yields a monic polynomial with those roots") {
    const FieldSpec& f64 = FieldSpec::get(6);
    const FieldElement rho = f64.generator_pow(7);
    const MoebiusMap a =
        MoebiusMap::normalized(rho, f64.zero(), f64.one(), rho.inv(), 0);
    // pick a point outside the orbit of infinity and off the fixed points
    const Orbit oinf = orbit_of(a, ProjPoint::infinity());
    std::uint32_t start = 1;
    while (oinf.contains(ProjPoint::finite(f64.element(start)))) ++start;
    const Orbit o = orbit_of(a, ProjPoint::finite(f64.element(start)));
    REQUIRE(o.size() == 9);
    const Polynomial p = orbit_polynomial(o);
    CHECK(p.degree() == 9);
    CHECK(p.is_monic());
    for (const FieldElement& pt : o.affine_points()) CHECK(p.eval(pt).is_zero());
  }
}

TEST_CASE("factorization of x^n - 1 over GF(2)") {
  SUBCASE("n = 3") {
    const auto fs = factor_xn_minus_1_gf2(3);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == Polynomial::from_gf2_mask(0x3));
    CHECK(fs[1].factor == Polynomial::from_gf2_mask(0x7));
  }
  SUBCASE("n = 9") {
    const auto fs = factor_xn_minus_1_gf2(9);
    REQUIRE(fs.size() == 3);
    CHECK(fs[1].factor == Polynomial::from_gf2_mask(0x49));  // x^6+x^3+1
    CHECK(fs[2].factor == Polynomial::from_gf2_mask(0x7));
  }
  SUBCASE("n = 21 lists the six known factors") {
    const auto fs = factor_xn_minus_1_gf2(21);
    REQUIRE(fs.size() == 6);
    std::vector<std::uint64_t> want = {0x3, 0x57, 0xD, 0x75, 0x7, 0xB};
    // x+1, x^6+x^4+x^2+x+1, x^3+x^2+1, x^6+x^5+x^4+x^2+1, x^2+x+1, x^3+x+1
    for (std::size_t i = 0; i < fs.size(); ++i)
      CHECK(fs[i].factor == Polynomial::from_gf2_mask(want[i]));
  }
  SUBCASE("product and coprimality") {
    for (std::uint64_t n : {3ull, 7ull, 9ull, 17ull, 21ull, 51ull, 63ull}) {
      const auto fs = factor_xn_minus_1_gf2(n);
      Polynomial prod = Polynomial::one(FieldSpec::gf2());
      std::uint64_t total = 0;
      for (const auto& cf : fs) {
        prod = prod * cf.factor;
        total += static_cast<std::uint64_t>(cf.factor.degree());
      }
      CHECK(prod == Polynomial::x_pow_n_minus_1(FieldSpec::gf2(), n));
      CHECK(total == n);
      for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
          CHECK(poly_gcd(fs[i].factor, fs[j].factor).is_one());
    }
  }
  CHECK_THROWS_AS(factor_xn_minus_1_gf2(6), Error);
}
