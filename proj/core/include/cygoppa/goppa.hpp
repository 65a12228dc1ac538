#pragma once

#include <span>
#include <string>
#include <vector>

#include "cygoppa/linbin.hpp"
#include "cygoppa/poly.hpp"
#include "cygoppa/projline.hpp"

namespace cygoppa {

enum class Variant { plain, expurgated, extended };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& s);

/// A validated (support, Goppa polynomial, variant) triple over one working
/// field. Support points are pairwise distinct, none is a root of g, and the
/// degree bound deg g < |L| (plain/expurgated) resp. < |L|+1 (extended) holds.
/// The support order is preserved: cyclicity depends on it.
class GoppaInstance {
 public:
  static GoppaInstance make(std::vector<FieldElement> support, Polynomial g, Variant variant);

  const FieldSpec& field() const { return g_.spec(); }
  const std::vector<FieldElement>& support() const { return support_; }
  const Polynomial& g() const { return g_; }
  Variant variant() const { return variant_; }
  /// Code length: |L| for plain/expurgated, |L| + 1 for extended.
  std::size_t length() const {
    return support_.size() + (variant_ == Variant::extended ? 1 : 0);
  }

 private:
  GoppaInstance(std::vector<FieldElement> support, Polynomial g, Variant variant)
      : support_(std::move(support)), g_(std::move(g)), variant_(variant) {}

  std::vector<FieldElement> support_;
  Polynomial g_;
  Variant variant_;
};

/// Parity-check matrix over the working field: rows alpha^j / g(alpha) for
/// j = 0..r-1 (plain) or j = 0..r (expurgated/extended); the extended variant
/// appends the column (0, ..., 0, g_r^{-1}).
FieldMatrix parity_check(const GoppaInstance& inst);

/// The binary code: GF(2) null space of the bit expansion of parity_check.
BinaryCode build_code(const GoppaInstance& inst);

/// Exact check of the functional identity
///   (c x^{2^j} + d)^r g((a x^{2^j} + b)/(c x^{2^j} + d)) = c^r g(a/c) g(x)^{2^j}
/// by clearing denominators and comparing coefficients, together with
/// c^r g(a/c) != 0. Requires c != 0 and deg g < orbit_len.
bool check_condition_2_3(const MoebiusMap& m, const Polynomial& g, unsigned orbit_len);

struct AdmissiblePair {
  Polynomial g1;  // x + (a+rho)/c
  Polynomial g2;  // x + (a+rho^{-1})/c
};

/// The two degree-1 admissible Goppa polynomials over the working field.
AdmissiblePair admissible_pair(const SpectralData& sd);

enum class CoeffField { working, base };

struct AdmissiblePoly {
  Polynomial g;
  bool zero_code_warning;  // s + t >= n - 1: the resulting codes are zero
};

/// g1^s g2^t over the working field. Requesting base-field coefficients in the
/// irreducible branch forces s = t, where the product (g1 g2)^s descends to
/// the base field.
AdmissiblePoly admissible_poly(const SpectralData& sd, unsigned s, unsigned t,
                               CoeffField cf = CoeffField::working);

/// Whether g factors exactly into orbit polynomials of the given partition
/// (affine orbits only, with multiplicity).
bool verify_lemma_2_4(const MoebiusMap& m, const Polynomial& g, std::span<const Orbit> orbits);

}  // namespace cygoppa
