#include "cygoppa/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cygoppa {

Polynomial::Polynomial(const FieldSpec& spec, std::vector<std::uint32_t> coeff_masks)
    : spec_(&spec), coeffs_(std::move(coeff_masks)) {
  for (std::uint32_t c : coeffs_)
    if (c >= spec.size()) fail("bad_literal", "coefficient mask out of range");
  trim();
}

Polynomial Polynomial::constant(const FieldSpec& spec, std::uint32_t mask) {
  return Polynomial(spec, {mask});
}

Polynomial Polynomial::linear(const FieldElement& root) {
  return Polynomial(root.spec(), {root.mask(), 1});
}

Polynomial Polynomial::from_gf2_mask(std::uint64_t mask) {
  std::vector<std::uint32_t> c;
  for (std::uint64_t m = mask; m != 0; m >>= 1) c.push_back(static_cast<std::uint32_t>(m & 1));
  return Polynomial(FieldSpec::gf2(), std::move(c));
}

Polynomial Polynomial::x_pow_n_minus_1(const FieldSpec& spec, unsigned n) {
  if (n == 0) fail("bad_literal", "x^0 - 1 is the zero polynomial");
  std::vector<std::uint32_t> c(n + 1, 0);
  c[0] = 1;
  c[n] = 1;
  return Polynomial(spec, std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldElement Polynomial::leading() const {
  if (is_zero()) fail("zero_polynomial", "the zero polynomial has no leading coefficient");
  return spec_->element(coeffs_.back());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(o);
  std::vector<std::uint32_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] ^= coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] ^= o.coeffs_[i];
  return Polynomial(*spec_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Polynomial(*spec_);
  std::vector<std::uint32_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      c[i + j] ^= spec_->mul_raw(coeffs_[i], o.coeffs_[j]);
    }
  }
  return Polynomial(*spec_, std::move(c));
}

Polynomial Polynomial::operator*(const FieldElement& k) const {
  if (&k.spec() != spec_) fail("field_mismatch", "scalar from a different field");
  std::vector<std::uint32_t> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = spec_->mul_raw(coeffs_[i], k.mask());
  return Polynomial(*spec_, std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  check_same(divisor);
  if (divisor.is_zero()) fail("division_by_zero", "division by the zero polynomial");
  std::vector<std::uint32_t> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial(*spec_), *this};
  std::vector<std::uint32_t> quot(coeffs_.size() - dd, 0);
  const std::uint32_t lead_inv = spec_->inv_raw(divisor.coeffs_.back());
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    const std::uint32_t q = spec_->mul_raw(rem[i], lead_inv);
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j)
      rem[i - dd + j] ^= spec_->mul_raw(q, divisor.coeffs_[j]);
  }
  return {Polynomial(*spec_, std::move(quot)), Polynomial(*spec_, std::move(rem))};
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::one(*spec_);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) fail("zero_polynomial", "cannot normalize the zero polynomial");
  if (is_monic()) return *this;
  return *this * leading().inv();
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial(*spec_);
  std::vector<std::uint32_t> c(coeffs_.size() - 1, 0);
  // Characteristic 2: only odd-exponent terms survive.
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) c[i - 1] = coeffs_[i];
  return Polynomial(*spec_, std::move(c));
}

Polynomial Polynomial::reciprocal() const {
  if (is_zero()) fail("zero_polynomial", "the zero polynomial has no reciprocal");
  std::vector<std::uint32_t> c(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(*spec_, std::move(c));
}

bool Polynomial::divides(const Polynomial& other) const {
  return other.divmod(*this).second.is_zero();
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  if (&x.spec() != spec_) fail("field_mismatch", "evaluation point from a different field");
  std::uint32_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = spec_->mul_raw(acc, x.mask()) ^ *it;
  return spec_->element(acc);
}

FieldElement Polynomial::eval_gf2_at(const FieldElement& x) const {
  if (spec_ != &FieldSpec::gf2())
    fail("field_mismatch", "lifted evaluation is defined for GF(2) polynomials");
  const FieldSpec& f = x.spec();
  std::uint32_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = f.mul_raw(acc, x.mask()) ^ *it;
  return f.element(acc);
}

std::string Polynomial::to_hex() const {
  if (spec_ != &FieldSpec::gf2()) fail("field_mismatch", "hex form is defined over GF(2) only");
  if (is_zero()) return "0x0";
  std::string digits;
  for (std::size_t i = 0; i < coeffs_.size(); i += 4) {
    unsigned nib = 0;
    for (unsigned b = 0; b < 4 && i + b < coeffs_.size(); ++b) nib |= coeffs_[i + b] << b;
    digits += "0123456789ABCDEF"[nib];
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::reverse(digits.begin(), digits.end());
  return "0x" + digits;
}

std::string Polynomial::to_human() const {
  if (spec_ == &FieldSpec::gf2()) {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (coeffs_[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0)
        out += "1";
      else if (i == 1)
        out += "x";
      else
        out += "x^" + std::to_string(i);
    }
    return out;
  }
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    const std::uint32_t c = coeffs_[i];
    if (c == 0)
      os << "0";
    else if (c == 1)
      os << "1";
    else
      os << "g^" << spec_->log_raw(c);
  }
  os << "]";
  return os.str();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) fail("zero_polynomial", "gcd(0, 0) is undefined");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) fail("zero_polynomial", "lcm with the zero polynomial");
  return ((a / poly_gcd(a, b)) * b).monic();
}

Polynomial minimal_polynomial_gf2(const FieldElement& beta) {
  if (beta.is_zero())
    fail("zero_argument", "the minimal polynomial of 0 is x; pass a nonzero element");
  const FieldSpec& f = beta.spec();
  Polynomial p = Polynomial::one(f);
  FieldElement b = beta;
  do {
    p = p * Polynomial::linear(b);
    b = b.square();
  } while (b != beta);
  std::vector<std::uint32_t> bits(p.coeff_masks().size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const std::uint32_t c = p.coeff_masks()[i];
    if (c > 1) fail("internal", "Frobenius-orbit product has a non-binary coefficient");
    bits[i] = c;
  }
  return Polynomial(FieldSpec::gf2(), std::move(bits));
}

Polynomial orbit_polynomial(const Orbit& orbit) {
  if (orbit.contains_infinity())
    fail("infinite_point", "orbit polynomials are defined for affine orbits only");
  const FieldSpec& f = orbit.map().spec();
  Polynomial p = Polynomial::one(f);
  for (const ProjPoint& pt : orbit.points()) p = p * Polynomial::linear(pt.value());
  return p;
}

std::vector<CyclotomicFactor> factor_xn_minus_1_gf2(std::uint64_t n) {
  if (n == 0 || n % 2 == 0) fail("even_n", "n must be odd and positive");
  if (n == 1) return {CyclotomicFactor{0, Polynomial::from_gf2_mask(0x3)}};

  unsigned k = 1;
  std::uint64_t pw = 2 % n;
  while (pw != 1) {
    pw = (pw * 2) % n;
    if (++k > 16) fail("splitting_degree", "ord_n(2) exceeds 16; splitting field too large");
  }
  const FieldSpec& f = FieldSpec::get(k);
  const FieldElement beta = f.generator_pow(static_cast<std::int64_t>(f.group_order() / n));

  std::vector<bool> seen(n, false);
  std::vector<CyclotomicFactor> out;
  for (std::uint64_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    Polynomial prod = Polynomial::one(f);
    std::uint64_t e = a;
    do {
      seen[e] = true;
      prod = prod * Polynomial::linear(beta.pow(static_cast<std::int64_t>(e)));
      e = (e * 2) % n;
    } while (e != a);
    std::vector<std::uint32_t> bits(prod.coeff_masks().size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (prod.coeff_masks()[i] > 1)
        fail("internal", "cyclotomic-coset product has a non-binary coefficient");
      bits[i] = prod.coeff_masks()[i];
    }
    out.push_back(CyclotomicFactor{a, Polynomial(FieldSpec::gf2(), std::move(bits))});
  }
  return out;
}

}  // namespace cygoppa
