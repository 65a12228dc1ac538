#include "cygoppa/gf2m.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace cygoppa {

namespace {

constexpr unsigned kMaxDegree = 16;

// One primitive polynomial per degree; every entry is validated again at
// construction (irreducible modulus, x of full order).
constexpr std::uint32_t kDefaultModulus[kMaxDegree + 1] = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x43,    0x89,   0x11D,
    0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003,  0x1100B};

int poly_degree(std::uint64_t p) {
  return p == 0 ? -1 : 63 - __builtin_clzll(p);
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  while (a != 0 && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
  return a;
}

std::string poly_to_string(std::uint64_t p) {
  if (p == 0) return "0";
  std::string out;
  for (int i = poly_degree(p); i >= 0; --i) {
    if (!((p >> i) & 1)) continue;
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

// Trial division; returns a nontrivial factor or 0 when irreducible.
std::uint32_t find_factor(std::uint32_t f) {
  const int d = poly_degree(f);
  for (int dg = 1; dg <= d / 2; ++dg) {
    for (std::uint32_t g = 1u << dg; g < (2u << dg); ++g) {
      if (poly_mod(f, g) == 0) return g;
    }
  }
  return 0;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> ps;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Shift-and-reduce product, used only until the log tables exist.
std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned m) {
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> m) & 1) a ^= modulus;
  }
  return r;
}

std::uint32_t pow_slow(std::uint32_t a, std::uint32_t e, std::uint32_t modulus, unsigned m) {
  std::uint32_t r = 1;
  while (e != 0) {
    if (e & 1) r = mul_slow(r, a, modulus, m);
    a = mul_slow(a, a, modulus, m);
    e >>= 1;
  }
  return r;
}

bool is_primitive_mask(std::uint32_t a, std::uint32_t modulus, unsigned m,
                       const std::vector<std::uint32_t>& q1_primes) {
  const std::uint32_t n = (1u << m) - 1;
  if (a == 0) return false;
  if (pow_slow(a, n, modulus, m) != 1) return false;
  for (std::uint32_t p : q1_primes) {
    if (pow_slow(a, n / p, modulus, m) == 1) return false;
  }
  return true;
}

}  // namespace

std::uint32_t FieldSpec::default_modulus(unsigned m) {
  if (m < 1 || m > kMaxDegree) fail("bad_literal", "extension degree must be in [1,16]");
  return kDefaultModulus[m];
}

FieldSpec::FieldSpec(unsigned m, std::uint32_t modulus, std::uint32_t generator,
                     bool generator_given)
    : m_(m), modulus_(modulus), q_(1u << m) {
  if (m < 1 || m > kMaxDegree) fail("bad_literal", "extension degree must be in [1,16]");
  if (poly_degree(modulus) != static_cast<int>(m))
    fail("bad_literal", "defining polynomial must be monic of degree m");
  if (std::uint32_t f = find_factor(modulus); f != 0)
    fail("reducible_modulus",
         "defining polynomial " + poly_to_string(modulus) + " is reducible; factor " +
             poly_to_string(f));

  const auto q1_primes = prime_factors(q_ - 1);
  if (generator_given) {
    if (!is_primitive_mask(generator, modulus, m, q1_primes))
      fail("non_primitive_generator",
           "chosen generator does not have multiplicative order 2^m-1");
    generator_ = generator;
  } else {
    generator_ = 0;
    for (std::uint32_t a = 1; a < q_; ++a) {
      if (is_primitive_mask(a, modulus, m, q1_primes)) {
        generator_ = a;
        break;
      }
    }
    if (generator_ == 0) fail("non_primitive_generator", "no primitive element found");
  }

  antilog_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    antilog_[i] = v;
    log_[v] = i;
    v = mul_slow(v, generator_, modulus_, m_);
  }
  if (v != 1) fail("non_primitive_generator", "generator power table did not close");
}

const FieldSpec& FieldSpec::get(unsigned m, std::uint32_t modulus, std::uint32_t generator) {
  static std::mutex mu;
  static std::map<std::tuple<unsigned, std::uint32_t, std::uint32_t>,
                  std::unique_ptr<FieldSpec>>
      registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(m, modulus, generator);
  auto it = registry.find(key);
  if (it == registry.end()) {
    auto spec = std::unique_ptr<FieldSpec>(new FieldSpec(m, modulus, generator, generator != 0));
    it = registry.emplace(key, std::move(spec)).first;
  }
  return *it->second;
}

const FieldSpec& FieldSpec::get(unsigned m, std::uint32_t modulus) {
  const FieldSpec& probe = get(m, modulus, 0u);
  return get(m, modulus, probe.generator_mask());
}

const FieldSpec& FieldSpec::get(unsigned m) { return get(m, default_modulus(m)); }

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }
FieldElement FieldSpec::generator() const { return FieldElement(*this, generator_); }
FieldElement FieldSpec::element(std::uint32_t mask) const { return FieldElement(*this, mask); }

FieldElement FieldSpec::generator_pow(std::int64_t k) const {
  const std::int64_t n = group_order();
  std::int64_t e = k % n;
  if (e < 0) e += n;
  return FieldElement(*this, antilog_[static_cast<std::size_t>(e)]);
}

std::uint32_t FieldSpec::mul_raw(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return antilog_[s];
}

std::uint32_t FieldSpec::inv_raw(std::uint32_t a) const {
  if (a == 0) fail("division_by_zero", "inverse of zero");
  return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FieldSpec::pow_raw(std::uint32_t a, std::int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) fail("division_by_zero", "negative power of zero");
    return 0;
  }
  const std::int64_t n = group_order();
  std::int64_t s = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
  if (s < 0) s += n;
  return antilog_[static_cast<std::size_t>(s)];
}

std::uint32_t FieldSpec::sqrt_raw(std::uint32_t a) const {
  // Squaring is a bijection; the unique square root is a^(2^{m-1}).
  std::uint32_t r = a;
  for (unsigned i = 0; i + 1 < m_; ++i) r = mul_raw(r, r);
  return r;
}

std::uint32_t FieldSpec::log_raw(std::uint32_t a) const {
  if (a == 0) fail("division_by_zero", "log of zero");
  return log_[a];
}

std::uint32_t FieldSpec::element_order(std::uint32_t a) const {
  if (a == 0) fail("division_by_zero", "order of zero");
  return (q_ - 1) / std::gcd(q_ - 1, log_[a]);
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "gf2m m=" << m_ << " poly=0x" << std::hex << std::uppercase << modulus_ << std::dec;
  if (generator_ == 1) {
    os << " gen=1";
  } else {
    os << " gen=0b";
    for (int i = static_cast<int>(m_) - 1; i >= 0; --i) os << ((generator_ >> i) & 1);
  }
  return os.str();
}

namespace {

// Minimal polynomial over GF(2) of a field element, as a coefficient mask.
// Local helper so the tower construction does not depend on the poly module.
std::uint32_t minpoly_mask(const FieldSpec& f, std::uint32_t beta) {
  std::vector<std::uint32_t> conj;
  std::uint32_t b = beta;
  do {
    conj.push_back(b);
    b = f.mul_raw(b, b);
  } while (b != beta);
  std::vector<std::uint32_t> p{1};
  for (std::uint32_t c : conj) {
    std::vector<std::uint32_t> r(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i + 1] ^= p[i];
      r[i] ^= f.mul_raw(p[i], c);
    }
    p = std::move(r);
  }
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 1) fail("tower_incompatible", "minimal polynomial has non-binary coefficient");
    mask |= p[i] << i;
  }
  return mask;
}

}  // namespace

TowerEmbedding::TowerEmbedding(const FieldSpec& base, const FieldSpec& ext)
    : base_(&base), ext_(&ext) {
  if (ext.degree() != 2 * base.degree())
    fail("tower_incompatible", "extension degree must be twice the base degree");
  const std::uint32_t subgroup_index = ext.size() / base.size() + 1;  // (q^2-1)/(q-1) = q+1
  image_ = ext.pow_raw(ext.generator_mask(), subgroup_index);
  if (ext.element_order(image_) != base.group_order())
    fail("tower_incompatible", "image of base generator has wrong order");
  if (minpoly_mask(ext, image_) != minpoly_mask(base, base.generator_mask()))
    fail("tower_incompatible",
         "ext generator^(q+1) is not a conjugate of the base generator; "
         "choose a compatible extension generator");

  forward_.assign(base.size(), 0);
  reverse_.assign(ext.size(), kNone);
  forward_[0] = 0;
  reverse_[0] = 0;
  std::uint32_t bim = 1, xim = 1;
  for (std::uint32_t i = 0; i < base.group_order(); ++i) {
    forward_[bim] = xim;
    reverse_[xim] = bim;
    bim = base.mul_raw(bim, base.generator_mask());
    xim = ext.mul_raw(xim, image_);
  }

  // Homomorphism spot-check: exhaustive for l <= 4, randomized otherwise.
  auto check_pair = [&](std::uint32_t x, std::uint32_t y) {
    if (forward_[x ^ y] != (forward_[x] ^ forward_[y]))
      fail("tower_incompatible", "embedding does not preserve sums");
    if (forward_[base.mul_raw(x, y)] != ext.mul_raw(forward_[x], forward_[y]))
      fail("tower_incompatible", "embedding does not preserve products");
  };
  if (base.degree() <= 4) {
    for (std::uint32_t x = 0; x < base.size(); ++x)
      for (std::uint32_t y = 0; y < base.size(); ++y) check_pair(x, y);
  } else {
    std::uint64_t state = 0x9E3779B97F4A7C15ull;
    for (int i = 0; i < 10000; ++i) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      check_pair(static_cast<std::uint32_t>(state >> 17) % base.size(),
                 static_cast<std::uint32_t>(state >> 41) % base.size());
    }
  }
}

const TowerEmbedding& TowerEmbedding::quadratic(unsigned l) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<TowerEmbedding>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(l);
  if (it != registry.end()) return *it->second;

  const FieldSpec& base = FieldSpec::get(l);
  const FieldSpec& plain_ext = FieldSpec::get(2 * l);
  const std::uint32_t target = minpoly_mask(base, base.generator_mask());
  const std::uint32_t n2 = plain_ext.group_order();
  const std::uint32_t index = base.size() + 1;  // 2^l + 1
  std::uint32_t chosen = 0;
  for (std::uint32_t j = 1; j < n2 + 1 && chosen == 0; ++j) {
    if (std::gcd(j, n2) != 1) continue;
    const std::uint32_t cand = plain_ext.pow_raw(plain_ext.generator_mask(), j);
    if (minpoly_mask(plain_ext, plain_ext.pow_raw(cand, index)) == target) chosen = cand;
  }
  if (chosen == 0) fail("tower_incompatible", "no compatible extension generator found");
  const FieldSpec& ext = FieldSpec::get(2 * l, FieldSpec::default_modulus(2 * l), chosen);
  auto tower = std::unique_ptr<TowerEmbedding>(new TowerEmbedding(base, ext));
  it = registry.emplace(l, std::move(tower)).first;
  return *it->second;
}

TowerEmbedding TowerEmbedding::make(const FieldSpec& base, const FieldSpec& ext) {
  return TowerEmbedding(base, ext);
}

FieldElement TowerEmbedding::image_of_base_generator() const {
  return FieldElement(*ext_, image_);
}

FieldElement TowerEmbedding::embed(const FieldElement& x) const {
  if (&x.spec() != base_) fail("field_mismatch", "embed expects an element of the base field");
  return FieldElement(*ext_, forward_[x.mask()]);
}

bool TowerEmbedding::in_base_image(const FieldElement& y) const {
  if (&y.spec() != ext_) fail("field_mismatch", "expected an element of the extension field");
  return reverse_[y.mask()] != kNone;
}

FieldElement TowerEmbedding::project(const FieldElement& y) const {
  if (&y.spec() != ext_) fail("field_mismatch", "expected an element of the extension field");
  const std::uint32_t b = reverse_[y.mask()];
  if (b == kNone) fail("not_in_subfield", "element is outside the base-field image");
  return FieldElement(*base_, b);
}

QuadraticRoots solve_unit_quadratic(const FieldElement& t, const TowerEmbedding& tower) {
  if (&t.spec() != &tower.base())
    fail("field_mismatch", "trace must live in the tower's base field");
  if (t.is_zero())
    fail("order_two", "t = 0 forces a double root 1 (order <= 2 excluded)");
  const FieldSpec& ext = tower.ext();
  const std::uint32_t tm = tower.embed(t).mask();
  std::uint32_t r1 = 0, r2 = 0;
  for (std::uint32_t y = 1; y < ext.size(); ++y) {
    if ((ext.mul_raw(y, y) ^ ext.mul_raw(tm, y) ^ 1u) == 0) {
      if (r1 == 0)
        r1 = y;
      else {
        r2 = y;
        break;
      }
    }
  }
  if (r1 == 0 || r2 == 0) fail("internal", "unit quadratic did not split in the extension");
  FieldElement rho(ext, r1), rho_inv(ext, r2);
  if ((rho * rho_inv).mask() != 1 || (rho + rho_inv).mask() != tm)
    fail("internal", "quadratic roots fail Vieta checks");
  const bool reducible = tower.in_base_image(rho);
  return QuadraticRoots{rho, rho_inv, reducible};
}

}  // namespace cygoppa
