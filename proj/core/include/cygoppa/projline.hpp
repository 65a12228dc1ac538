#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cygoppa/gf2m.hpp"

namespace cygoppa {

/// A point of the projective line over some GF(2^m): either a field element or
/// the distinguished point at infinity.
class ProjPoint {
 public:
  static ProjPoint infinity() { return ProjPoint(); }
  static ProjPoint finite(const FieldElement& v) { return ProjPoint(v); }

  bool is_infinity() const { return !value_.has_value(); }
  const FieldElement& value() const {
    if (is_infinity()) fail("infinite_point", "the point at infinity has no field value");
    return *value_;
  }

  bool operator==(const ProjPoint& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return *value_ == *o.value_;
  }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }

 private:
  ProjPoint() = default;
  explicit ProjPoint(const FieldElement& v) : value_(v) {}
  std::optional<FieldElement> value_;
};

/// An element of PGammaL_2(F_q): a 2x2 matrix with entries in one field plus a
/// Frobenius exponent j (j = 0 means PGL_2). Stored with determinant
/// normalized to 1 by dividing through the unique square root of ad+bc.
class MoebiusMap {
 public:
  static MoebiusMap normalized(const FieldElement& a, const FieldElement& b,
                               const FieldElement& c, const FieldElement& d,
                               unsigned frob = 0);

  const FieldSpec& spec() const { return a_.spec(); }
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const FieldElement& c() const { return c_; }
  const FieldElement& d() const { return d_; }
  unsigned frob() const { return frob_; }
  FieldElement trace() const { return a_ + d_; }

  /// The action zeta -> (a zeta^{2^j} + b) / (c zeta^{2^j} + d), with the
  /// conventions 1/0 = inf, 1/inf = 0 and (a inf + b)/(c inf + d) = a/c.
  ProjPoint operator()(const ProjPoint& zeta) const;

  /// Group composition: this after other (apply `other` first).
  MoebiusMap compose(const MoebiusMap& other) const;
  MoebiusMap inverse() const;
  bool is_identity() const;

  /// Least k >= 1 with M^k the identity of the group.
  unsigned order() const;

  /// Entrywise lift through a tower embedding (Frobenius exponent kept).
  MoebiusMap lift(const TowerEmbedding& tower) const;

  bool operator==(const MoebiusMap& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_ && frob_ == o.frob_;
  }

 private:
  MoebiusMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d, unsigned frob)
      : a_(a), b_(b), c_(c), d_(d), frob_(frob) {}

  FieldElement a_, b_, c_, d_;
  unsigned frob_;
};

/// The ordered cycle [alpha, M(alpha), M^2(alpha), ...] of a point.
class Orbit {
 public:
  Orbit(MoebiusMap map, std::vector<ProjPoint> points);

  const MoebiusMap& map() const { return map_; }
  const std::vector<ProjPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains_infinity() const { return has_infinity_; }
  bool contains(const ProjPoint& p) const;
  /// The points as field elements; throws when the orbit passes through inf.
  std::vector<FieldElement> affine_points() const;

 private:
  MoebiusMap map_;
  std::vector<ProjPoint> points_;
  bool has_infinity_;
};

Orbit orbit_of(const MoebiusMap& m, const ProjPoint& start);

/// Eigenstructure of a PGL_2 element with c != 0 and trace != 0: eigenvalues
/// rho, rho^{-1} of lambda^2 + (a+d) lambda + 1, the order n = ord(rho), the
/// two fixed points (a+rho)/c and (a+rho^{-1})/c, and the diagonalizer P with
/// rows [a+rho^{-1}, a+rho; c, c]. Everything after `reducible` lives in the
/// working field: the base field when the characteristic polynomial is
/// reducible, otherwise the quadratic extension.
struct SpectralData {
  MoebiusMap map;                 // over the base field, frob = 0
  const TowerEmbedding* tower;
  FieldElement trace;             // base field
  FieldElement rho_ext, rho_inv_ext;
  bool reducible;
  unsigned order;                 // n = ord(A) = ord(rho), odd, > 2
  const FieldSpec* working_field;
  MoebiusMap map_w;               // the same map over the working field
  FieldElement rho_w, rho_inv_w;
  FieldElement fixed1, fixed2;    // roots of g1, g2
  MoebiusMap diagonalizer;        // P, det-normalized
};

SpectralData spectral(const MoebiusMap& m, const TowerEmbedding& tower);

/// Disjoint orbits covering the projective line over the map's own field, in
/// canonical order (each orbit starts at its smallest point; inf sorts last).
std::vector<Orbit> partition(const MoebiusMap& m);

}  // namespace cygoppa
