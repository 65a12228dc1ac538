#include "cygoppa/cyclic.hpp"

#include <algorithm>
#include <bit>

namespace cygoppa {

namespace {

Polynomial row_polynomial(const BitVector& row) {
  std::vector<std::uint32_t> c(row.size(), 0);
  for (std::size_t i = 0; i < row.size(); ++i) c[i] = row.get(i) ? 1 : 0;
  return Polynomial(FieldSpec::gf2(), std::move(c));
}

}  // namespace

bool is_cyclic(const BinaryCode& code) {
  for (std::size_t r = 0; r < code.k(); ++r) {
    if (!code.contains(code.generator().row(r).rotated_right(1))) return false;
  }
  return true;
}

CyclicReport extract_generator(const BinaryCode& code, bool require_cyclic) {
  CyclicReport rep;
  rep.n = code.n();
  rep.k = code.k();
  const Polynomial xn1 = Polynomial::x_pow_n_minus_1(FieldSpec::gf2(),
                                                     static_cast<unsigned>(code.n()));
  if (code.k() == 0) {
    rep.is_cyclic = true;
    rep.generator = xn1;
    rep.parity_check_poly = Polynomial::one(FieldSpec::gf2());
    return rep;
  }
  if (require_cyclic && !is_cyclic(code)) return rep;

  Polynomial u = xn1;
  std::vector<Polynomial> rows;
  rows.reserve(code.k());
  for (std::size_t r = 0; r < code.k(); ++r) {
    rows.push_back(row_polynomial(code.generator().row(r)));
    u = poly_gcd(u, rows.back());
  }
  const bool consistent =
      u.degree() == static_cast<int>(code.n() - code.k()) && u.divides(xn1) &&
      std::all_of(rows.begin(), rows.end(), [&](const Polynomial& p) { return u.divides(p); });
  if (!consistent) return rep;  // not an ideal of F2[x]/(x^n - 1)

  rep.is_cyclic = true;
  rep.generator = u;
  rep.parity_check_poly = xn1 / u;
  return rep;
}

Prediction predict_generator(const SpectralData& sd, unsigned s, unsigned t) {
  if (s + t < 1) fail("bad_literal", "prediction needs s + t >= 1");
  const unsigned n = sd.order;
  const Polynomial x1 = Polynomial::from_gf2_mask(0x3);
  Polynomial u1 = x1, u2 = x1;
  for (unsigned i = 1; i <= s; ++i)
    u1 = poly_lcm(u1, minimal_polynomial_gf2(sd.rho_inv_ext.pow(i)));
  for (unsigned i = 1; i <= t; ++i)
    u2 = poly_lcm(u2, minimal_polynomial_gf2(sd.rho_ext.pow(i)));
  Polynomial u = poly_lcm(u1, u2);

  std::optional<std::uint32_t> designed;
  if (t == 0)
    designed = s + 2;
  else if (s == 0)
    designed = t + 2;

  const bool zero = s + t >= n - 1 || u.degree() == static_cast<int>(n);
  if (s + t >= n - 1) u = Polynomial::x_pow_n_minus_1(FieldSpec::gf2(), n);
  return Prediction{std::move(u), designed, zero};
}

std::vector<unsigned> reduce_exponents(unsigned s) {
  if (s < 1) fail("bad_literal", "exponent reduction needs s >= 1");
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= 2 * ((s + 1) / 2) - 1; i += 2) out.push_back(i);
  return out;
}

std::uint32_t min_distance(const BinaryCode& code) {
  if (code.k() == 0) return kInfiniteDistance;
  if (code.k() > 24)
    fail("min_distance_guard",
         "exhaustive enumeration is limited to k <= 24; this code has k = " +
             std::to_string(code.k()) + " (use the designed-distance bound instead)");
  std::vector<BitVector> rows;
  rows.reserve(code.k());
  for (std::size_t r = 0; r < code.k(); ++r) rows.push_back(code.generator().row(r));

  // Gray-code walk: message i and i+1 differ in bit ctz(i+1).
  BitVector acc(code.n());
  std::uint32_t best = kInfiniteDistance;
  const std::uint64_t total = std::uint64_t(1) << code.k();
  for (std::uint64_t i = 1; i < total; ++i) {
    acc ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    const std::uint32_t w = static_cast<std::uint32_t>(acc.weight());
    if (w < best) best = w;
  }
  return best;
}

bool bch_bound_check(const CyclicReport& report, const Prediction& pred,
                     const SpectralData& sd, unsigned s, unsigned t) {
  if ((s == 0) == (t == 0))
    fail("bad_literal", "the designed-distance bound applies when exactly one exponent is zero");
  if (!report.min_distance.has_value())
    fail("bad_literal", "minimum distance has not been computed");
  const unsigned e = s + t;
  const std::uint32_t bound = 2 * ((e + 1) / 2) + 2;

  // Root exponents of the prediction w.r.t. the matching eigenvalue must
  // contain the consecutive run {0, 1, ..., e}.
  const FieldElement eta = (t == 0) ? sd.rho_inv_ext : sd.rho_ext;
  for (unsigned j = 0; j <= e; ++j) {
    if (!pred.u.eval_gf2_at(eta.pow(j)).is_zero()) return false;
  }
  return *report.min_distance >= bound;
}

}  // namespace cygoppa
