#include "cygoppa/projline.hpp"

#include <algorithm>

namespace cygoppa {

MoebiusMap MoebiusMap::normalized(const FieldElement& a, const FieldElement& b,
                                  const FieldElement& c, const FieldElement& d,
                                  unsigned frob) {
  const FieldSpec& f = a.spec();
  if (&b.spec() != &f || &c.spec() != &f || &d.spec() != &f)
    fail("field_mismatch", "matrix entries must share one field");
  if (frob >= f.degree()) fail("bad_literal", "Frobenius exponent must be < m");
  FieldElement det = a * d + b * c;
  if (det.is_zero()) fail("singular", "matrix has determinant zero");
  FieldElement di = det.sqrt().inv();
  return MoebiusMap(a * di, b * di, c * di, d * di, frob);
}

ProjPoint MoebiusMap::operator()(const ProjPoint& zeta) const {
  if (zeta.is_infinity()) {
    if (c_.is_zero()) return ProjPoint::infinity();
    return ProjPoint::finite(a_ / c_);
  }
  FieldElement w = zeta.value();
  if (&w.spec() != &spec()) fail("field_mismatch", "point and map live in different fields");
  for (unsigned i = 0; i < frob_; ++i) w = w.square();
  const FieldElement den = c_ * w + d_;
  if (den.is_zero()) return ProjPoint::infinity();
  return ProjPoint::finite((a_ * w + b_) / den);
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& other) const {
  if (&spec() != &other.spec()) fail("field_mismatch", "maps live in different fields");
  // (A, s^i)(B, s^j) = (A * s^i(B), s^{i+j}); entrywise Frobenius keeps det 1.
  auto tw = [this](FieldElement x) {
    for (unsigned i = 0; i < frob_; ++i) x = x.square();
    return x;
  };
  const FieldElement e = tw(other.a_), f = tw(other.b_), g = tw(other.c_), h = tw(other.d_);
  return MoebiusMap(a_ * e + b_ * g, a_ * f + b_ * h, c_ * e + d_ * g, c_ * f + d_ * h,
                    (frob_ + other.frob_) % spec().degree());
}

MoebiusMap MoebiusMap::inverse() const {
  if (frob_ != 0) fail("frobenius_exploratory", "inverse of semilinear maps is not needed here");
  // det = 1, so the adjugate [[d, b], [c, a]] is the inverse in characteristic 2.
  return MoebiusMap(d_, b_, c_, a_, 0);
}

bool MoebiusMap::is_identity() const {
  return frob_ == 0 && a_.is_one() && d_.is_one() && b_.is_zero() && c_.is_zero();
}

unsigned MoebiusMap::order() const {
  const unsigned guard = spec().degree() * (spec().size() + 1) + 2;
  MoebiusMap acc = *this;
  for (unsigned k = 1; k <= guard; ++k) {
    if (acc.is_identity()) return k;
    acc = acc.compose(*this);
  }
  fail("internal", "order iteration exceeded the group-order guard");
}

MoebiusMap MoebiusMap::lift(const TowerEmbedding& tower) const {
  return MoebiusMap(tower.embed(a_), tower.embed(b_), tower.embed(c_), tower.embed(d_), frob_);
}

Orbit::Orbit(MoebiusMap map, std::vector<ProjPoint> points)
    : map_(map), points_(std::move(points)) {
  has_infinity_ = std::any_of(points_.begin(), points_.end(),
                              [](const ProjPoint& p) { return p.is_infinity(); });
}

bool Orbit::contains(const ProjPoint& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

std::vector<FieldElement> Orbit::affine_points() const {
  if (has_infinity_) fail("infinite_point", "orbit passes through the point at infinity");
  std::vector<FieldElement> out;
  out.reserve(points_.size());
  for (const ProjPoint& p : points_) out.push_back(p.value());
  return out;
}

Orbit orbit_of(const MoebiusMap& m, const ProjPoint& start) {
  std::vector<ProjPoint> pts{start};
  ProjPoint cur = m(start);
  const std::size_t guard = m.spec().size() + 2;
  while (cur != start) {
    pts.push_back(cur);
    if (pts.size() > guard) fail("internal", "orbit exceeded the projective line size");
    cur = m(cur);
  }
  return Orbit(m, std::move(pts));
}

SpectralData spectral(const MoebiusMap& m, const TowerEmbedding& tower) {
  if (&m.spec() != &tower.base())
    fail("field_mismatch", "map entries must live in the tower's base field");
  if (m.frob() != 0)
    fail("frobenius_exploratory", "spectral analysis requires sigma^j = 1");
  if (m.c().is_zero())
    fail("c_zero", "c = 0 is outside the scope of the spectral predictions");
  const FieldElement trace = m.trace();
  if (trace.is_zero()) fail("order_two", "a = d forces ord(A) <= 2");

  const QuadraticRoots roots = solve_unit_quadratic(trace, tower);
  const unsigned n = roots.rho.multiplicative_order();
  if (n <= 2) fail("order_two", "eigenvalue order <= 2");
  if (n % 2 == 0) fail("internal", "eigenvalue order must be odd (n | q-1 or q+1, q even)");
  if (m.order() != n) fail("internal", "ord(A) and ord(rho) disagree");

  const FieldSpec* working;
  std::optional<MoebiusMap> map_w;
  std::optional<FieldElement> rho_w, rho_inv_w;
  if (roots.reducible) {
    working = &tower.base();
    map_w = m;
    rho_w = tower.project(roots.rho);
    rho_inv_w = tower.project(roots.rho_inv);
  } else {
    working = &tower.ext();
    map_w = m.lift(tower);
    rho_w = roots.rho;
    rho_inv_w = roots.rho_inv;
  }

  const FieldElement aw = map_w->a(), cw = map_w->c();
  const FieldElement fixed1 = (aw + *rho_w) / cw;
  const FieldElement fixed2 = (aw + *rho_inv_w) / cw;
  for (const FieldElement& fp : {fixed1, fixed2}) {
    const ProjPoint p = ProjPoint::finite(fp);
    if ((*map_w)(p) != p) fail("internal", "claimed fixed point moves under the map");
  }

  // P = [[a+rho^{-1}, a+rho], [c, c]]; P^{-1} A P = diag(rho, rho^{-1}).
  MoebiusMap diag =
      MoebiusMap::normalized(aw + *rho_inv_w, aw + *rho_w, cw, cw, 0);
  {
    const MoebiusMap lhs = diag.inverse().compose(*map_w).compose(diag);
    const MoebiusMap rhs =
        MoebiusMap::normalized(*rho_w, working->zero(), working->zero(), *rho_inv_w, 0);
    if (!(lhs == rhs)) fail("internal", "diagonalizer does not conjugate A to diag(rho, rho^-1)");
  }

  return SpectralData{m,       &tower,    trace,     roots.rho, roots.rho_inv,
                      roots.reducible,    n,         working,   *map_w,
                      *rho_w,  *rho_inv_w, fixed1,   fixed2,    diag};
}

std::vector<Orbit> partition(const MoebiusMap& m) {
  if (m.frob() != 0) fail("frobenius_exploratory", "partition requires sigma^j = 1");
  if (m.c().is_zero()) fail("c_zero", "partition requires c != 0");
  if (m.trace().is_zero()) fail("order_two", "partition requires ord(A) > 2");
  const FieldSpec& f = m.spec();
  std::vector<bool> seen(f.size() + 1, false);  // index f.size() = infinity
  std::vector<Orbit> out;
  auto visit = [&](const ProjPoint& p) {
    Orbit o = orbit_of(m, p);
    for (const ProjPoint& q : o.points())
      seen[q.is_infinity() ? f.size() : q.value().mask()] = true;
    out.push_back(std::move(o));
  };
  for (std::uint32_t mask = 0; mask < f.size(); ++mask)
    if (!seen[mask]) visit(ProjPoint::finite(f.element(mask)));
  if (!seen[f.size()]) visit(ProjPoint::infinity());
  return out;
}

}  // namespace cygoppa
