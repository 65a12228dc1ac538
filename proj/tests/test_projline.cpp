#include <doctest.h>

#include <algorithm>
#include <random>

#include "cygoppa/poly.hpp"
#include "cygoppa/projline.hpp"

using namespace cygoppa;

namespace {

// A = [[0,1],[1,1]] over GF(2): the 3-cycle inf -> 0 -> 1 -> inf.
MoebiusMap three_cycle() {
  const FieldSpec& f = FieldSpec::gf2();
  return MoebiusMap::normalized(f.zero(), f.one(), f.one(), f.one(), 0);
}

MoebiusMap random_map(const FieldSpec& f, std::mt19937_64& rng, unsigned frob = 0) {
  for (;;) {
    const std::uint32_t a = rng() % f.size(), b = rng() % f.size();
    const std::uint32_t c = rng() % f.size(), d = rng() % f.size();
    if ((f.mul_raw(a, d) ^ f.mul_raw(b, c)) == 0) continue;
    return MoebiusMap::normalized(f.element(a), f.element(b), f.element(c), f.element(d), frob);
  }
}

}  // namespace

TEST_CASE("normalization") {
  const FieldSpec& f4 = FieldSpec::get(2);
  const MoebiusMap id = MoebiusMap::normalized(f4.one(), f4.zero(), f4.zero(), f4.one(), 0);
  CHECK(id.is_identity());

  // scalar matrices are projectively the identity
  const FieldElement g = f4.generator();
  const MoebiusMap sc = MoebiusMap::normalized(g, f4.zero(), f4.zero(), g, 0);
  CHECK(sc.is_identity());

  CHECK_THROWS_AS(
      MoebiusMap::normalized(f4.one(), f4.one(), f4.one(), f4.one(), 0), Error);

  SUBCASE("determinant is 1 after normalization") {
    std::mt19937_64 rng(3);
    const FieldSpec& f = FieldSpec::get(5);
    for (int i = 0; i < 100; ++i) {
      const MoebiusMap m = random_map(f, rng);
      CHECK(m.a() * m.d() + m.b() * m.c() == f.one());
    }
  }
}

TEST_CASE("projective action") {
  const MoebiusMap a = three_cycle();
  const FieldSpec& f2 = FieldSpec::gf2();
  CHECK(a(ProjPoint::infinity()) == ProjPoint::finite(f2.zero()));
  CHECK(a(ProjPoint::finite(f2.zero())) == ProjPoint::finite(f2.one()));
  CHECK(a(ProjPoint::finite(f2.one())) == ProjPoint::infinity());

  SUBCASE("infinity maps to a/c when c != 0") {
    std::mt19937_64 rng(11);
    const FieldSpec& f = FieldSpec::get(4);
    for (int i = 0; i < 50; ++i) {
      const MoebiusMap m = random_map(f, rng);
      if (m.c().is_zero()) {
        CHECK(m(ProjPoint::infinity()).is_infinity());
      } else {
        CHECK(m(ProjPoint::infinity()) == ProjPoint::finite(m.a() / m.c()));
      }
    }
  }
  SUBCASE("composition acts as iterated application") {
    std::mt19937_64 rng(12);
    for (unsigned m_deg : {2u, 4u}) {
      const FieldSpec& f = FieldSpec::get(m_deg);
      for (int i = 0; i < 20; ++i) {
        const MoebiusMap m1 = random_map(f, rng, rng() % m_deg);
        const MoebiusMap m2 = random_map(f, rng, rng() % m_deg);
        const MoebiusMap both = m1.compose(m2);
        for (std::uint32_t x = 0; x < f.size(); ++x) {
          const ProjPoint p = ProjPoint::finite(f.element(x));
          CHECK(both(p) == m1(m2(p)));
        }
        CHECK(both(ProjPoint::infinity()) == m1(m2(ProjPoint::infinity())));
      }
    }
  }
}

TEST_CASE("order") {
  const FieldSpec& f4 = FieldSpec::get(2);
  CHECK(MoebiusMap::normalized(f4.one(), f4.zero(), f4.zero(), f4.one(), 0).order() == 1);
  CHECK(three_cycle().order() == 3);

  SUBCASE("order is odd and divides q-1 or q+1 when c, trace != 0") {
    std::mt19937_64 rng(13);
    const FieldSpec& f = FieldSpec::get(6);
    int sampled = 0;
    while (sampled < 60) {
      const MoebiusMap m = random_map(f, rng);
      if (m.c().is_zero() || m.trace().is_zero()) continue;
      ++sampled;
      const unsigned n = m.order();
      if (n <= 2) continue;  // order-2 classes have trace 0; 1 is the identity
      CHECK(n % 2 == 1);
      CHECK(((f.size() - 1) % n == 0 || (f.size() + 1) % n == 0));
    }
  }
}

TEST_CASE("spectral data") {
  SUBCASE("the GF(2) 3-cycle is the smallest irreducible case") {
    const SpectralData sd = spectral(three_cycle(), TowerEmbedding::quadratic(1));
    CHECK(sd.order == 3);
    CHECK_FALSE(sd.reducible);
    CHECK(sd.working_field == &sd.tower->ext());
    CHECK(sd.rho_w.multiplicative_order() == 3);
    // fixed points lie in GF(4) \ GF(2)
    CHECK_FALSE(sd.tower->in_base_image(sd.fixed1));
    CHECK_FALSE(sd.tower->in_base_image(sd.fixed2));
    CHECK(sd.fixed1 != sd.fixed2);
  }
  SUBCASE("companion matrix of an order-9 eigenvalue is reducible over GF(64)") {
    const FieldSpec& f = FieldSpec::get(6);
    const FieldElement rho = f.generator_pow(7);
    const MoebiusMap m = MoebiusMap::normalized(rho, f.zero(), f.one(), rho.inv(), 0);
    const SpectralData sd = spectral(m, TowerEmbedding::quadratic(6));
    CHECK(sd.order == 9);
    CHECK(sd.reducible);
    CHECK((f.size() - 1) % sd.order == 0);
    CHECK(sd.map_w.order() == sd.order);
    // one fixed point is 0 for this companion shape
    CHECK((sd.fixed1.is_zero() || sd.fixed2.is_zero()));
  }
  SUBCASE("rejections") {
    const FieldSpec& f = FieldSpec::get(3);
    const TowerEmbedding& tw = TowerEmbedding::quadratic(3);
    // c = 0
    const MoebiusMap upper =
        MoebiusMap::normalized(f.generator(), f.one(), f.zero(), f.generator().inv(), 0);
    try {
      spectral(upper, tw);
      FAIL("expected c_zero");
    } catch (const Error& e) {
      CHECK(e.kind() == "c_zero");
    }
    // trace = 0 (an involution)
    const MoebiusMap invol =
        MoebiusMap::normalized(f.one(), f.generator(), f.generator(), f.one(), 0);
    try {
      spectral(invol, tw);
      FAIL("expected order_two");
    } catch (const Error& e) {
      CHECK(e.kind() == "order_two");
    }
  }
}

TEST_CASE("orbits") {
  const FieldSpec& f64 = FieldSpec::get(6);
  const FieldElement rho = f64.generator_pow(7);
  const MoebiusMap a = MoebiusMap::normalized(rho, f64.zero(), f64.one(), rho.inv(), 0);
  const SpectralData sd = spectral(a, TowerEmbedding::quadratic(6));

  SUBCASE("fixed points have singleton orbits, everything else full length") {
    CHECK(orbit_of(a, ProjPoint::finite(sd.fixed1)).size() == 1);
    CHECK(orbit_of(a, ProjPoint::finite(sd.fixed2)).size() == 1);
    CHECK(orbit_of(a, ProjPoint::infinity()).size() == sd.order);
  }
  SUBCASE("the GF(2) 3-cycle walks inf -> 0 -> 1") {
    const Orbit o = orbit_of(three_cycle(), ProjPoint::infinity());
    REQUIRE(o.size() == 3);
    CHECK(o.points()[0].is_infinity());
    CHECK(o.points()[1] == ProjPoint::finite(FieldSpec::gf2().zero()));
    CHECK(o.points()[2] == ProjPoint::finite(FieldSpec::gf2().one()));
  }
  SUBCASE("orbit of infinity equals the diagonalizer applied to powers of rho") {
    const Orbit oinf = orbit_of(a, ProjPoint::infinity());
    std::vector<ProjPoint> expect;
    for (unsigned i = 1; i < sd.order; ++i)
      expect.push_back(sd.diagonalizer(ProjPoint::finite(sd.rho_w.pow(i))));
    expect.push_back(ProjPoint::infinity());  // P(1) = inf
    CHECK(sd.diagonalizer(ProjPoint::finite(sd.rho_w.pow(0))).is_infinity());
    for (const ProjPoint& p : expect) CHECK(oinf.contains(p));
    CHECK(oinf.size() == expect.size());
  }
}

TEST_CASE("partition of the projective line") {
  SUBCASE("working field GF(4) for the GF(2) 3-cycle") {
    const SpectralData sd = spectral(three_cycle(), TowerEmbedding::quadratic(1));
    const std::vector<Orbit> orbits = partition(sd.map_w);
    std::size_t singletons = 0, full = 0, covered = 0;
    for (const Orbit& o : orbits) {
      covered += o.size();
      if (o.size() == 1)
        ++singletons;
      else if (o.size() == sd.order)
        ++full;
      else
        FAIL("unexpected orbit length");
    }
    CHECK(singletons == 2);
    CHECK(full == 1);
    CHECK(covered == 5);  // |P^1(GF(4))|
  }
  SUBCASE("reducible branch: 2 singletons plus (q-1)/n full orbits") {
    const FieldSpec& f = FieldSpec::get(6);
    const FieldElement rho = f.generator_pow(3);  // order 21
    const MoebiusMap a = MoebiusMap::normalized(rho, f.zero(), f.one(), rho.inv(), 0);
    const std::vector<Orbit> orbits = partition(a);
    std::size_t singles = 0, full = 0;
    for (const Orbit& o : orbits) (o.size() == 1 ? singles : full) += 1;
    CHECK(singles == 2);
    CHECK(full == (f.size() - 1) / 21);
    std::size_t covered = 0;
    for (const Orbit& o : orbits) covered += o.size();
    CHECK(covered == f.size() + 1);
  }
  SUBCASE("orbits are disjoint and start at their smallest point") {
    const FieldSpec& f = FieldSpec::get(4);
    const FieldElement rho = f.generator_pow(3);  // order 5
    const MoebiusMap m = MoebiusMap::normalized(rho, f.zero(), f.one(), rho.inv(), 0);
    std::vector<bool> seen(f.size() + 1, false);
    for (const Orbit& o : partition(m)) {
      std::uint32_t smallest = 0xFFFFFFFF;
      for (const ProjPoint& p : o.points()) {
        const std::uint32_t idx = p.is_infinity() ? f.size() : p.value().mask();
        CHECK_FALSE(seen[idx]);
        seen[idx] = true;
        smallest = std::min(smallest, idx);
      }
      const ProjPoint& first = o.points().front();
      CHECK((first.is_infinity() ? f.size() : first.value().mask()) == smallest);
    }
    CHECK(std::count(seen.begin(), seen.end(), false) == 0);
  }
}
