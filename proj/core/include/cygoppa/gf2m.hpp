#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cygoppa/errors.hpp"

namespace cygoppa {

class FieldElement;

/// An immutable description of GF(2^m), 1 <= m <= 16: the defining polynomial
/// (an (m+1)-bit mask, bit i = coefficient of x^i) and a fixed primitive
/// element. Instances are interned and live for the program's lifetime, so
/// elements may hold plain pointers to their field.
///
/// Elements are m-bit coordinate vectors in the polynomial basis
/// {1, x, ..., x^{m-1}}; multiplication goes through log/antilog tables built
/// once at construction.
class FieldSpec {
 public:
  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  /// Interned field with the built-in primitive defining polynomial.
  static const FieldSpec& get(unsigned m);
  /// Interned field with a chosen monic irreducible modulus; the generator is
  /// the smallest-mask primitive element (x itself when the modulus is
  /// primitive).
  static const FieldSpec& get(unsigned m, std::uint32_t modulus);
  /// Interned field with both modulus and generator pinned. Rejects reducible
  /// moduli (naming a factor) and non-primitive generators.
  static const FieldSpec& get(unsigned m, std::uint32_t modulus, std::uint32_t generator);

  static const FieldSpec& gf2() { return get(1); }
  static std::uint32_t default_modulus(unsigned m);

  unsigned degree() const { return m_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return q_; }            // 2^m
  std::uint32_t group_order() const { return q_ - 1; } // 2^m - 1
  std::uint32_t generator_mask() const { return generator_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement element(std::uint32_t mask) const;      // from coordinate mask
  FieldElement generator_pow(std::int64_t k) const;    // g^k

  // Raw mask arithmetic; FieldElement wraps these.
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_raw(std::uint32_t a) const;
  std::uint32_t pow_raw(std::uint32_t a, std::int64_t e) const;
  std::uint32_t sqrt_raw(std::uint32_t a) const;
  std::uint32_t log_raw(std::uint32_t a) const;        // w.r.t. the generator
  std::uint32_t element_order(std::uint32_t a) const;  // multiplicative order

  /// Textual form `gf2m m=<int> poly=0x<hex> gen=<literal>`.
  std::string describe() const;

  bool operator==(const FieldSpec& other) const { return this == &other; }

 private:
  FieldSpec(unsigned m, std::uint32_t modulus, std::uint32_t generator, bool generator_given);

  unsigned m_;
  std::uint32_t modulus_;
  std::uint32_t q_;
  std::uint32_t generator_;
  std::vector<std::uint32_t> antilog_;  // antilog_[i] = g^i, i in [0, q-2]
  std::vector<std::uint32_t> log_;      // log_[mask], defined for mask != 0
};

/// A value of one specific FieldSpec. Mixed-field arithmetic is rejected;
/// lifts between fields go through TowerEmbedding explicitly.
class FieldElement {
 public:
  FieldElement(const FieldSpec& spec, std::uint32_t mask) : spec_(&spec), mask_(mask) {
    if (mask >= spec.size()) fail("bad_literal", "coordinate mask out of range for field");
  }

  const FieldSpec& spec() const { return *spec_; }
  std::uint32_t mask() const { return mask_; }
  bool is_zero() const { return mask_ == 0; }
  bool is_one() const { return mask_ == 1; }

  FieldElement operator+(const FieldElement& o) const {
    check_same(o);
    return FieldElement(*spec_, mask_ ^ o.mask_);
  }
  FieldElement operator-(const FieldElement& o) const { return *this + o; }
  FieldElement operator*(const FieldElement& o) const {
    check_same(o);
    return FieldElement(*spec_, spec_->mul_raw(mask_, o.mask_));
  }
  FieldElement operator/(const FieldElement& o) const {
    check_same(o);
    return FieldElement(*spec_, spec_->mul_raw(mask_, spec_->inv_raw(o.mask_)));
  }
  FieldElement inv() const { return FieldElement(*spec_, spec_->inv_raw(mask_)); }
  FieldElement pow(std::int64_t e) const { return FieldElement(*spec_, spec_->pow_raw(mask_, e)); }
  FieldElement square() const { return FieldElement(*spec_, spec_->mul_raw(mask_, mask_)); }
  FieldElement sqrt() const { return FieldElement(*spec_, spec_->sqrt_raw(mask_)); }
  std::uint32_t multiplicative_order() const { return spec_->element_order(mask_); }

  bool operator==(const FieldElement& o) const { return spec_ == o.spec_ && mask_ == o.mask_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void check_same(const FieldElement& o) const {
    if (spec_ != o.spec_)
      fail("field_mismatch", "operands belong to different fields; embed explicitly first");
  }

  const FieldSpec* spec_;
  std::uint32_t mask_;
};

/// The quadratic extension GF(2^l) into GF(2^{2l}).
///
/// The image of the base generator is ext.generator^((2^{2l}-1)/(2^l-1)); the
/// extension field of `quadratic(l)` is constructed with a generator chosen so
/// that this power is a root of the base generator's minimal polynomial over
/// GF(2), which makes exponent scaling a field homomorphism.
class TowerEmbedding {
 public:
  /// Interned default tower over the built-in moduli for degrees l and 2l.
  static const TowerEmbedding& quadratic(unsigned l);
  /// Tower over explicitly chosen fields; rejects incompatible generators.
  static TowerEmbedding make(const FieldSpec& base, const FieldSpec& ext);

  const FieldSpec& base() const { return *base_; }
  const FieldSpec& ext() const { return *ext_; }
  FieldElement image_of_base_generator() const;

  FieldElement embed(const FieldElement& x) const;
  bool in_base_image(const FieldElement& y) const;
  /// Preimage under embed; throws "not_in_subfield" when y is outside the copy
  /// of the base field.
  FieldElement project(const FieldElement& y) const;

 private:
  TowerEmbedding(const FieldSpec& base, const FieldSpec& ext);

  const FieldSpec* base_;
  const FieldSpec* ext_;
  std::uint32_t image_;
  std::vector<std::uint32_t> forward_;               // base mask -> ext mask
  std::vector<std::uint32_t> reverse_;               // ext mask -> base mask or kNone
  static constexpr std::uint32_t kNone = 0xFFFFFFFF;
};

struct QuadraticRoots {
  FieldElement rho;      // smaller-mask root, in the extension field
  FieldElement rho_inv;  // the other root = rho^{-1}
  bool reducible;        // both roots lie in the image of the base field
};

/// Both roots of lambda^2 + t*lambda + 1 over GF(2^{2l}), found by exhaustive
/// scan of the extension field. t = 0 would force a double root 1 (the
/// excluded order-2 case) and is rejected.
QuadraticRoots solve_unit_quadratic(const FieldElement& t, const TowerEmbedding& tower);

}  // namespace cygoppa
