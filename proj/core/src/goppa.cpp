#include "cygoppa/goppa.hpp"

#include <algorithm>
#include <set>

namespace cygoppa {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::expurgated: return "expurgated";
    case Variant::extended: return "extended";
  }
  fail("internal", "unknown variant");
}

Variant variant_from_name(const std::string& s) {
  if (s == "plain") return Variant::plain;
  if (s == "expurgated") return Variant::expurgated;
  if (s == "extended") return Variant::extended;
  fail("bad_literal", "unknown variant '" + s + "'");
}

GoppaInstance GoppaInstance::make(std::vector<FieldElement> support, Polynomial g,
                                  Variant variant) {
  if (support.empty()) fail("bad_literal", "empty support");
  const FieldSpec& f = g.spec();
  std::set<std::uint32_t> masks;
  for (const FieldElement& a : support) {
    if (&a.spec() != &f) fail("field_mismatch", "support and polynomial fields differ");
    if (!masks.insert(a.mask()).second)
      fail("duplicate_support", "support points must be pairwise distinct");
  }
  if (g.is_zero()) fail("zero_polynomial", "Goppa polynomial must be nonzero");
  const int r = g.degree();
  const int bound = static_cast<int>(support.size()) + (variant == Variant::extended ? 1 : 0);
  if (r >= bound)
    fail("degree_bound", "deg g = " + std::to_string(r) + " must be < " + std::to_string(bound));
  for (const FieldElement& a : support)
    if (g.eval(a).is_zero())
      fail("support_root", "the Goppa polynomial vanishes on a support point");
  return GoppaInstance(std::move(support), std::move(g), variant);
}

FieldMatrix parity_check(const GoppaInstance& inst) {
  const FieldSpec& f = inst.field();
  const auto& L = inst.support();
  const std::size_t n = L.size();
  const unsigned r = static_cast<unsigned>(inst.g().degree());
  const std::size_t nrows = (inst.variant() == Variant::plain) ? r : r + 1;
  const std::size_t ncols = inst.length();

  FieldMatrix h(f, nrows, ncols);
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement gi = inst.g().eval(L[i]).inv();
    FieldElement p = gi;
    for (std::size_t j = 0; j < nrows; ++j) {
      h.set(j, i, p);
      p = p * L[i];
    }
  }
  if (inst.variant() == Variant::extended) {
    // g(inf) = g_r, the leading coefficient.
    h.set(nrows - 1, n, inst.g().leading().inv());
  }
  return h;
}

BinaryCode build_code(const GoppaInstance& inst) {
  return BinaryCode::from_parity_bits(expand_to_bits(parity_check(inst)));
}

bool check_condition_2_3(const MoebiusMap& m, const Polynomial& g, unsigned orbit_len) {
  if (m.c().is_zero()) fail("c_zero", "condition (2.3) is checked for c != 0 only");
  if (&m.spec() != &g.spec())
    fail("field_mismatch", "map and polynomial live in different fields");
  const int r = g.degree();
  if (r < 1 || r >= static_cast<int>(orbit_len))
    fail("degree_bound", "condition (2.3) needs 1 <= deg g < n");

  const FieldSpec& f = m.spec();
  const unsigned shift = 1u << m.frob();

  // kappa = c^r g(a/c); the condition includes kappa != 0.
  const FieldElement kappa = m.c().pow(r) * g.eval(m.a() / m.c());
  if (kappa.is_zero()) return false;

  // num = a x^{2^j} + b, den = c x^{2^j} + d.
  auto stretched = [&](const FieldElement& hi, const FieldElement& lo) {
    std::vector<std::uint32_t> c(shift + 1, 0);
    c[0] = lo.mask();
    c[shift] = hi.mask();
    return Polynomial(f, std::move(c));
  };
  const Polynomial num = stretched(m.a(), m.b());
  const Polynomial den = stretched(m.c(), m.d());

  Polynomial lhs = Polynomial::zero(f);
  for (int i = 0; i <= r; ++i) {
    const FieldElement gi = g.coeff(static_cast<std::size_t>(i));
    if (gi.is_zero()) continue;
    lhs = lhs + num.pow(static_cast<unsigned>(i)) *
                    den.pow(static_cast<unsigned>(r - i)) * gi;
  }

  Polynomial rhs = g;
  for (unsigned j = 0; j < m.frob(); ++j) rhs = rhs.square();
  rhs = rhs * kappa;
  return lhs == rhs;
}

AdmissiblePair admissible_pair(const SpectralData& sd) {
  return AdmissiblePair{Polynomial::linear(sd.fixed1), Polynomial::linear(sd.fixed2)};
}

AdmissiblePoly admissible_poly(const SpectralData& sd, unsigned s, unsigned t, CoeffField cf) {
  if (s + t < 1) fail("bad_literal", "admissible polynomials need s + t >= 1");
  const AdmissiblePair pair = admissible_pair(sd);
  if (cf == CoeffField::base && !sd.reducible) {
    if (s != t)
      fail("exponent_constraint",
           "base-field coefficients under an irreducible characteristic polynomial "
           "require s = t");
    Polynomial prod = (pair.g1 * pair.g2).pow(s);
    std::vector<std::uint32_t> base_masks(prod.coeff_masks().size());
    for (std::size_t i = 0; i < base_masks.size(); ++i) {
      const FieldElement c = sd.tower->ext().element(prod.coeff_masks()[i]);
      base_masks[i] = sd.tower->project(c).mask();
    }
    return AdmissiblePoly{Polynomial(sd.tower->base(), std::move(base_masks)),
                          s + t >= sd.order - 1};
  }
  return AdmissiblePoly{pair.g1.pow(s) * pair.g2.pow(t), s + t >= sd.order - 1};
}

bool verify_lemma_2_4(const MoebiusMap& m, const Polynomial& g, std::span<const Orbit> orbits) {
  if (!g.is_monic() || g.degree() < 1)
    fail("bad_literal", "lemma 2.4 applies to monic polynomials of degree >= 1");
  if (&m.spec() != &g.spec())
    fail("field_mismatch", "map and polynomial live in different fields");
  Polynomial rem = g;
  for (const Orbit& o : orbits) {
    if (o.contains_infinity()) continue;
    const Polynomial op = orbit_polynomial(o);
    if (&op.spec() != &g.spec()) fail("field_mismatch", "orbit and polynomial fields differ");
    while (rem.degree() >= op.degree()) {
      auto [q, r] = rem.divmod(op);
      if (!r.is_zero()) break;
      rem = q;
    }
  }
  return rem.is_one();
}

}  // namespace cygoppa
