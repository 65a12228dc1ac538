// Acceptance suite: every criterion prints one [PASS]/[FAIL] line; the exit
// code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cygoppa/harness.hpp"

using namespace cygoppa;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(std::ostringstream&)> body;  // throws on failure
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

// ---- shared helpers ---------------------------------------------------------

std::vector<FieldElement> first_affine_orbit(const SpectralData& sd) {
  const FieldSpec& w = *sd.working_field;
  std::vector<bool> seen(w.size(), false);
  seen[sd.fixed1.mask()] = true;
  seen[sd.fixed2.mask()] = true;
  for (std::uint32_t mask = 0; mask < w.size(); ++mask) {
    if (seen[mask]) continue;
    const Orbit o = orbit_of(sd.map_w, ProjPoint::finite(w.element(mask)));
    for (const ProjPoint& p : o.points())
      if (!p.is_infinity()) seen[p.value().mask()] = true;
    if (!o.contains_infinity()) return o.affine_points();
  }
  throw std::runtime_error("no affine orbit");
}

std::vector<FieldElement> infinity_tail(const SpectralData& sd) {
  const Orbit o = orbit_of(sd.map_w, ProjPoint::infinity());
  std::vector<FieldElement> out;
  for (std::size_t i = 1; i < o.points().size(); ++i) out.push_back(o.points()[i].value());
  return out;
}

SpectralData spectral_of_example(const std::string& id) {
  // Reuse the deterministic instances behind reproduce_example by running one
  // cheap sub-case and re-deriving the map from its echoed literals.
  const std::vector<CaseResult> rs = reproduce_example(id);
  expect(!rs.empty() && rs.front().status == "ok", "example " + id + " did not resolve");
  const CaseResult& r = rs.front();
  const FieldSpec& f = parse_field(r.base_field);
  const MoebiusMap m = MoebiusMap::normalized(
      parse_element(f, r.matrix[0]), parse_element(f, r.matrix[1]),
      parse_element(f, r.matrix[2]), parse_element(f, r.matrix[3]), 0);
  return spectral(m, TowerEmbedding::quadratic(f.degree()));
}

void expect_example(const std::vector<CaseResult>& rs, std::ostringstream& log) {
  for (const CaseResult& r : rs) {
    expect(r.status == "ok", r.label + ": " + r.error_kind + " " + r.message);
    expect(r.cyclic, r.label + ": not cyclic");
    expect(r.match, r.label + ": extracted generator differs from prediction");
    expect(r.expected_ok, r.label + ": published parameters not met");
    for (const auto& [name, ok] : r.checks) expect(ok, r.label + ": check " + name);
  }
  log << rs.size() << " sub-cases";
}

Polynomial generator_of(const CaseResult& r) {
  expect(r.generator.has_value(), r.label + ": no generator");
  return *r.generator;
}

// ---- criteria ---------------------------------------------------------------

void criterion1(std::ostringstream& log) {
  const std::vector<CaseResult> rs = reproduce_example("3.13");
  expect(rs.size() == 8, "expected 8 sub-cases");
  const Polynomial want = Polynomial::from_gf2_mask(0xDB);  // (x+1)(x^6+x^3+1)
  for (const CaseResult& r : rs) {
    expect(r.status == "ok" && r.match && r.expected_ok, r.label + " failed");
    expect(r.n == 9 && r.k == 2 && r.d == 6, r.label + ": wrong parameters");
    expect(generator_of(r) == want, r.label + ": generator is not (x+1)(x^6+x^3+1)");
  }
  log << "8 sub-cases, generator " << want.to_human();
}

void criterion2(std::ostringstream& log) {
  const std::vector<CaseResult> rs = reproduce_example("3.12");
  expect(rs.size() == 8, "expected 8 sub-cases");
  const Polynomial x1 = Polynomial::from_gf2_mask(0x3);
  std::set<std::string> seen;
  std::vector<Polynomial> allowed;
  for (const CyclotomicFactor& cf : factor_xn_minus_1_gf2(21))
    if (cf.factor.degree() == 6) allowed.push_back(x1 * cf.factor);
  expect(allowed.size() == 2, "x^21-1 must have two degree-6 factors");
  for (const CaseResult& r : rs) {
    expect(r.status == "ok" && r.match && r.expected_ok, r.label + " failed");
    expect(r.n == 21 && r.k == 14 && r.d == 4, r.label + ": wrong parameters");
    const Polynomial g = generator_of(r);
    expect(g == allowed[0] || g == allowed[1],
           r.label + ": generator is not (x+1) times a degree-6 factor");
    seen.insert(g.to_human());
  }
  log << "8 sub-cases, generators {";
  for (const std::string& s : seen) log << " " << s;
  log << " }";
}

void criterion3(std::ostringstream& log) {
  const std::vector<CaseResult> rs = reproduce_example("3.14");
  expect(rs.size() == 8, "expected 8 sub-cases");
  const Polynomial x1 = Polynomial::from_gf2_mask(0x3);
  std::vector<Polynomial> allowed;
  for (const CyclotomicFactor& cf : factor_xn_minus_1_gf2(17))
    if (cf.factor.degree() == 8) allowed.push_back(x1 * cf.factor);
  for (const CaseResult& r : rs) {
    expect(r.status == "ok" && r.match && r.expected_ok, r.label + " failed");
    expect(r.n == 17 && r.k == 8 && r.d == 6, r.label + ": wrong parameters");
    const Polynomial g = generator_of(r);
    bool hit = false;
    for (const Polynomial& a : allowed) hit = hit || g == a;
    expect(hit, r.label + ": generator is not (x+1) times a degree-8 factor");
    const auto it = r.checks.find("self_reciprocal_minpoly");
    expect(it != r.checks.end() && it->second, r.label + ": m_rho != m_rho^-1");
  }
  const SpectralData sd = spectral_of_example("3.14");
  expect(!sd.reducible, "example 3.14 must be the irreducible branch");
  expect(sd.working_field == &TowerEmbedding::quadratic(4).ext(),
         "working field must be the quadratic extension of GF(16)");
  log << "8 sub-cases, irreducible branch through GF(2^8)";
}

void criterion4(std::ostringstream& log) {
  const std::vector<CaseResult> rs = reproduce_example("3.20");
  expect(rs.size() == 24, "expected 24 sub-cases");
  for (const CaseResult& r : rs) {
    expect(r.status == "ok" && r.match && r.expected_ok, r.label + " failed");
    const unsigned e = r.s + r.t;
    const std::uint32_t bound = 2 * ((e + 1) / 2) + 2;
    expect(r.d.has_value() && *r.d >= bound, r.label + ": designed-distance bound");
    const auto it = r.checks.find("bch_designed_distance");
    expect(it != r.checks.end() && it->second, r.label + ": BCH root-run check");
    if (e == 3) expect(*r.d == 6, "bound must be tight at s=3");
    if (e == 5) expect(*r.d == 10, "d must be 10 at s=5");
    if (e == 7) expect(*r.d == 12, "d must be 12 at s=7");
  }
  log << "24 sub-cases, bounds tight at s=3 and slack at s=5,7";
}

void criterion5(std::ostringstream& log) {
  const std::vector<CaseResult> rs = reproduce_example("3.24");
  expect(rs.size() == 18, "expected 18 sub-cases");
  unsigned intersections = 0;
  for (const CaseResult& r : rs) {
    expect(r.status == "ok" && r.match && r.expected_ok, r.label + " failed");
    const auto it = r.checks.find("intersection_identity");
    if (it != r.checks.end()) {
      expect(it->second, r.label + ": intersection identity");
      ++intersections;
    }
  }
  expect(intersections == 9, "expected 9 expurgated intersection checks");
  log << "18 sub-cases, 9 intersection identities";
}

void criterion6(std::ostringstream& log) {
  const SweepSummary s = sweep(200, 0xACCE5501, SweepOptions{});
  expect(s.total == 200, "sweep must run 200 cases");
  expect(s.failed == 0, std::to_string(s.failed) + " sweep failures");
  expect(s.reducible > 0 && s.irreducible > 0, "both branches must occur");
  expect(s.expurgated > 0 && s.extended > 0, "both variants must occur");
  log << s.passed << " passed, " << s.skipped << " skipped, " << s.zero_codes
      << " zero codes, " << s.reducible << "/" << s.irreducible << " red/irr";
}

void criterion7(std::ostringstream& log) {
  std::mt19937_64 rng(0xACCE5507);
  unsigned done = 0;
  for (const FieldSpec* f : {&FieldSpec::get(4), &FieldSpec::get(6)}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::uint32_t> masks(f->size());
      for (std::uint32_t x = 0; x < f->size(); ++x) masks[x] = x;
      for (std::size_t i = masks.size() - 1; i > 0; --i)
        std::swap(masks[i], masks[rng() % (i + 1)]);
      std::vector<FieldElement> support;
      for (std::size_t i = 0; i < 12; ++i) support.push_back(f->element(masks[i]));
      Polynomial g = Polynomial::one(*f);
      for (;;) {
        std::vector<std::uint32_t> c(3);
        c[0] = rng() % f->size();
        c[1] = rng() % f->size();
        c[2] = 1;
        g = Polynomial(*f, std::move(c));
        const Polynomial d = g.derivative();
        if (d.is_zero() || !poly_gcd(g, d).is_one()) continue;
        bool ok = true;
        for (const FieldElement& a : support) ok = ok && !g.eval(a).is_zero();
        if (ok) break;
      }
      const BinaryCode plain = build_code(GoppaInstance::make(support, g, Variant::plain));
      const BinaryCode squared =
          build_code(GoppaInstance::make(support, g.square(), Variant::plain));
      expect(plain == squared, "plain code changed under g -> g^2");
      ++done;
    }
  }
  // squared Goppa polynomials on the theorem instances
  for (const std::string& id : {std::string("3.12"), std::string("3.13")}) {
    const SpectralData sd = spectral_of_example(id);
    const std::vector<FieldElement> affine = first_affine_orbit(sd);
    const std::vector<FieldElement> tail = infinity_tail(sd);
    for (unsigned side = 0; side < 2; ++side) {
      const unsigned s = side == 0 ? 1 : 0, t = 1 - s;
      const Polynomial g = admissible_poly(sd, s, t).g;
      expect(build_code(GoppaInstance::make(affine, g, Variant::expurgated)) ==
                 build_code(GoppaInstance::make(affine, g.square(), Variant::expurgated)),
             "expurgated code changed under g -> g^2");
      expect(build_code(GoppaInstance::make(tail, g, Variant::extended)) ==
                 build_code(GoppaInstance::make(tail, g.square(), Variant::extended)),
             "extended code changed under g -> g^2");
      done += 2;
    }
  }
  log << done << " instances";
}

void criterion8(std::ostringstream& log) {
  // (a) gcd extraction equals the minimal-degree nonzero codeword.
  unsigned codes_checked = 0;
  const auto check_min_codeword = [&](const BinaryCode& c) {
    if (c.k() == 0 || c.k() > 14) return;
    const CyclicReport rep = extract_generator(c);
    if (!rep.is_cyclic) return;
    BitVector acc(c.n());
    int best_deg = static_cast<int>(c.n());
    BitVector best(c.n());
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << c.k()); ++i) {
      std::uint64_t bit = i & (~i + 1);
      std::size_t idx = 0;
      while ((bit >>= 1) != 0) ++idx;
      acc ^= c.generator().row(idx);
      int deg = -1;
      for (std::size_t j = c.n(); j-- > 0;)
        if (acc.get(j)) {
          deg = static_cast<int>(j);
          break;
        }
      if (deg >= 0 && deg < best_deg) {
        best_deg = deg;
        best = acc;
      }
    }
    std::vector<std::uint32_t> coeffs(best.size());
    for (std::size_t j = 0; j < best.size(); ++j) coeffs[j] = best.get(j) ? 1 : 0;
    expect(Polynomial(FieldSpec::gf2(), std::move(coeffs)) == *rep.generator,
           "minimal-degree codeword differs from the extracted generator");
    ++codes_checked;
  };
  for (const std::string& id : known_examples()) {
    const SpectralData sd = spectral_of_example(id);
    const std::vector<FieldElement> affine = first_affine_orbit(sd);
    const std::vector<FieldElement> tail = infinity_tail(sd);
    for (const auto& [s, t] :
         std::vector<std::pair<unsigned, unsigned>>{{1, 0}, {0, 1}, {1, 1}, {3, 0}}) {
      if (s + t >= sd.order - 1) continue;
      const Polynomial g = admissible_poly(sd, s, t).g;
      check_min_codeword(build_code(GoppaInstance::make(affine, g, Variant::expurgated)));
      check_min_codeword(build_code(GoppaInstance::make(tail, g, Variant::extended)));
    }
  }
  expect(codes_checked >= 10, "too few codes reached the oracle");

  // (b) expansion kernel vs brute force over GF(16).
  std::mt19937_64 rng(0xACCE5508);
  const FieldSpec& f16 = FieldSpec::get(4);
  for (int trial = 0; trial < 20; ++trial) {
    FieldMatrix m(f16, 3, 8);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 8; ++c) m.set(r, c, f16.element(rng() % 16));
    const BinaryCode via = BinaryCode::from_parity_bits(expand_to_bits(m));
    std::vector<BitVector> members;
    for (unsigned word = 0; word < 256; ++word) {
      bool zero = true;
      for (std::size_t r = 0; r < 3 && zero; ++r) {
        std::uint32_t acc = 0;
        for (std::size_t c = 0; c < 8; ++c)
          if ((word >> c) & 1) acc ^= m.at(r, c);
        zero = (acc == 0);
      }
      if (zero) {
        BitVector v(8);
        for (std::size_t c = 0; c < 8; ++c) v.set(c, (word >> c) & 1);
        members.push_back(v);
      }
    }
    BitMatrix gen(members.size(), 8);
    for (std::size_t i = 0; i < members.size(); ++i) gen.set_row(i, members[i]);
    expect(BinaryCode::from_generator(gen) == via, "expansion kernel oracle");
  }

  // (c) factorization test vs identity test, exhaustively over GF(8), n = 7.
  const FieldSpec& f8 = FieldSpec::get(3);
  const FieldElement rho = f8.generator();
  const MoebiusMap a =
      MoebiusMap::normalized(f8.zero(), f8.one(), f8.one(), rho + rho.inv(), 0);
  const SpectralData sd = spectral(a, TowerEmbedding::quadratic(3));
  expect(sd.order == 7, "instance must have order 7");
  const std::vector<Orbit> orbits = partition(sd.map_w);
  unsigned agreements = 0;
  const auto compare = [&](const Polynomial& g) {
    const bool lhs = check_condition_2_3(sd.map_w, g, sd.order);
    const bool rhs = verify_lemma_2_4(sd.map_w, g, orbits);
    expect(lhs == rhs, "condition and factorization disagree on " + g.to_human());
    ++agreements;
  };
  for (std::uint32_t c0 = 0; c0 < 8; ++c0) {
    compare(Polynomial(f8, {c0, 1}));
    for (std::uint32_t c1 = 0; c1 < 8; ++c1) {
      compare(Polynomial(f8, {c0, c1, 1}));
      for (std::uint32_t c2 = 0; c2 < 8; ++c2)
        compare(Polynomial(f8, {c0, c1, c2, 1}));
    }
  }
  expect(agreements == 8 + 64 + 512, "exhaustive degree <= 3 coverage");
  log << codes_checked << " generator oracles, 20 kernel oracles, " << agreements
      << " identity agreements";
}

void criterion9(std::ostringstream& log) {
  // Partition cardinalities on both branches.
  {
    const SpectralData sd = spectral_of_example("3.12");
    expect(sd.reducible && sd.order == 21, "example 3.12 spectral signature");
    std::size_t singles = 0, full = 0;
    for (const Orbit& o : partition(sd.map_w))
      (o.size() == 1 ? singles : full) += 1;
    expect(singles == 2 && full == (64 - 1) / 21, "reducible partition counts");
  }
  {
    const SpectralData sd = spectral_of_example("3.14");
    expect(!sd.reducible && sd.order == 17, "example 3.14 spectral signature");
    std::size_t singles = 0, full = 0, covered = 0;
    for (const Orbit& o : partition(sd.map_w)) {
      (o.size() == 1 ? singles : full) += 1;
      covered += o.size();
    }
    // F-bar_{q^2} over q = 16: 2 singletons + (q^2-1)/n orbits of length n
    expect(singles == 2 && full == (256 - 1) / 17, "quadratic-extension partition counts");
    expect(covered == 256 + 1, "partition covers the projective line");
    // over F-bar_q itself: no fixed points, (q+1)/n full orbits
    std::size_t base_singles = 0, base_full = 0;
    for (const Orbit& o : partition(sd.map))
      (o.size() == 1 ? base_singles : base_full) += 1;
    expect(base_singles == 0 && base_full == (16 + 1) / 17, "base-line partition counts");
  }
  // Orbit of infinity through the diagonalizer.
  {
    const SpectralData sd = spectral_of_example("3.12");
    const Orbit oinf = orbit_of(sd.map_w, ProjPoint::infinity());
    expect(oinf.size() == sd.order, "orbit of infinity has length n");
    expect(sd.diagonalizer(ProjPoint::finite(sd.rho_w.pow(0))).is_infinity(),
           "P(1) = infinity");
    for (unsigned i = 1; i < sd.order; ++i)
      expect(oinf.contains(sd.diagonalizer(ProjPoint::finite(sd.rho_w.pow(i)))),
             "P(rho^i) must lie on the orbit of infinity");
  }
  // Odd-exponent reduction up to s = 10 on both example instances.
  for (const std::string& id : {std::string("3.12"), std::string("3.14")}) {
    const SpectralData sd = spectral_of_example(id);
    for (unsigned s = 1; s <= 10; ++s) {
      Polynomial full = Polynomial::from_gf2_mask(0x3);
      for (unsigned i = 1; i <= s; ++i)
        full = poly_lcm(full, minimal_polynomial_gf2(sd.rho_inv_ext.pow(i)));
      Polynomial reduced = Polynomial::from_gf2_mask(0x3);
      for (unsigned i : reduce_exponents(s))
        reduced = poly_lcm(reduced, minimal_polynomial_gf2(sd.rho_inv_ext.pow(i)));
      expect(full == reduced, "odd-exponent lcm reduction at s=" + std::to_string(s));
    }
  }
  // Exactly the two fixed-point linear polynomials are admissible on GF(8).
  {
    const FieldSpec& f8 = FieldSpec::get(3);
    const FieldElement rho = f8.generator();
    const MoebiusMap a =
        MoebiusMap::normalized(f8.zero(), f8.one(), f8.one(), rho + rho.inv(), 0);
    const SpectralData sd = spectral(a, TowerEmbedding::quadratic(3));
    unsigned admissible = 0;
    for (std::uint32_t c0 = 0; c0 < 8; ++c0) {
      const Polynomial g(f8, {c0, 1});
      if (check_condition_2_3(sd.map_w, g, sd.order)) {
        ++admissible;
        expect(g == Polynomial::linear(sd.fixed1) || g == Polynomial::linear(sd.fixed2),
               "unexpected admissible degree-1 polynomial");
      }
    }
    expect(admissible == 2, "exactly two degree-1 polynomials are admissible");
  }
  log << "partitions, orbit of infinity, lcm reduction, degree-1 admissibility";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "example 3.13: four Goppa polynomials, both variants -> [9,2,6], exact generator",
       1.0, criterion1},
      {2, "example 3.12: eight sub-cases -> [21,14,4], generator (x+1) * degree-6 factor",
       1.0, criterion2},
      {3, "example 3.14: irreducible branch via the GF(16)->GF(256) tower -> [17,8,6]",
       2.0, criterion3},
      {4, "example 3.20: pure powers s=3..8 -> [21,11,6]/[21,5,10]/[21,3,12] with BCH bound",
       5.0, criterion4},
      {5, "example 3.24: mixed powers -> published triples and intersection identity",
       5.0, criterion5},
      {6, "randomized sweep: 200 seeded cases, all non-skipped predictions match",
       60.0, criterion6},
      {7, "squarefree g vs g^2: 50 random plain instances plus theorem instances",
       10.0, criterion7},
      {8, "oracles: minimal-degree codeword, expansion kernel, factorization agreement",
       30.0, criterion8},
      {9, "structural invariants: partitions, orbit of infinity, lcm reduction, "
          "degree-1 admissibility",
       10.0, criterion9},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream log;
    std::string error;
    try {
      c.body(log);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs <= c.budget_seconds;
    if (error.empty() && in_budget) {
      std::printf("[PASS] criterion %d: %s (%s; %.2fs)\n", c.number, c.title.c_str(),
                  log.str().c_str(), secs);
    } else {
      ++failures;
      const std::string reason = error.empty()
                                     ? "exceeded the " + std::to_string(c.budget_seconds) +
                                           "s budget"
                                     : error;
      std::printf("[FAIL] criterion %d: %s (%s; %.2fs)\n", c.number, c.title.c_str(),
                  reason.c_str(), secs);
    }
  }
  if (failures == 0) std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return failures;
}
