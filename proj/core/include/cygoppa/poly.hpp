#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cygoppa/gf2m.hpp"
#include "cygoppa/projline.hpp"

namespace cygoppa {

/// Dense univariate polynomial over one FieldSpec (GF(2) included).
/// Coefficients are stored low degree first; the zero polynomial is the empty
/// vector and has degree -1.
class Polynomial {
 public:
  explicit Polynomial(const FieldSpec& spec) : spec_(&spec) {}
  Polynomial(const FieldSpec& spec, std::vector<std::uint32_t> coeff_masks);

  static Polynomial zero(const FieldSpec& spec) { return Polynomial(spec); }
  static Polynomial one(const FieldSpec& spec) { return constant(spec, 1); }
  static Polynomial constant(const FieldSpec& spec, std::uint32_t mask);
  static Polynomial x(const FieldSpec& spec) { return Polynomial(spec, {0, 1}); }
  /// x + root (characteristic 2: the monic linear polynomial with that root).
  static Polynomial linear(const FieldElement& root);
  /// Over GF(2), from a coefficient bit mask (bit i = coefficient of x^i).
  static Polynomial from_gf2_mask(std::uint64_t mask);
  static Polynomial x_pow_n_minus_1(const FieldSpec& spec, unsigned n);

  const FieldSpec& spec() const { return *spec_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  FieldElement coeff(std::size_t i) const {
    return spec_->element(i < coeffs_.size() ? coeffs_[i] : 0);
  }
  FieldElement leading() const;
  const std::vector<std::uint32_t>& coeff_masks() const { return coeffs_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const FieldElement& k) const;
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator/(const Polynomial& o) const { return divmod(o).first; }
  Polynomial operator%(const Polynomial& o) const { return divmod(o).second; }
  Polynomial pow(unsigned e) const;
  Polynomial square() const { return *this * *this; }
  Polynomial monic() const;
  Polynomial derivative() const;
  Polynomial reciprocal() const;  // coefficient reversal of a nonzero polynomial
  bool divides(const Polynomial& other) const;

  FieldElement eval(const FieldElement& x) const;
  /// Evaluate a GF(2) polynomial at a point of any field; the 0/1 coefficients
  /// lift canonically.
  FieldElement eval_gf2_at(const FieldElement& x) const;

  bool operator==(const Polynomial& o) const {
    return spec_ == o.spec_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// GF(2) only: little-endian coefficient mask as "0x..." (arbitrary degree).
  std::string to_hex() const;
  /// "x^6+x^4+x^3+x+1" over GF(2); "[lit,lit,...]" lowest-first otherwise.
  std::string to_human() const;

 private:
  void trim();
  void check_same(const Polynomial& o) const {
    if (spec_ != o.spec_) fail("field_mismatch", "polynomials over different fields");
  }

  const FieldSpec* spec_;
  std::vector<std::uint32_t> coeffs_;
};

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);  // monic
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);  // monic

/// prod (x + beta^{2^i}) over the Frobenius orbit of beta, coerced to GF(2).
Polynomial minimal_polynomial_gf2(const FieldElement& beta);

/// Monic polynomial with the orbit's points as roots; rejects orbits through
/// the point at infinity.
Polynomial orbit_polynomial(const Orbit& orbit);

struct CyclotomicFactor {
  std::uint64_t coset_rep;  // smallest exponent in the 2-cyclotomic coset mod n
  Polynomial factor;        // irreducible over GF(2)
};

/// Canonical factorization of x^n - 1 over GF(2) via cyclotomic cosets, for
/// odd n whose splitting field fits in GF(2^16) (ord_n(2) <= 16). Ordered by
/// coset representative; the coset {0} always contributes x+1.
std::vector<CyclotomicFactor> factor_xn_minus_1_gf2(std::uint64_t n);

}  // namespace cygoppa
