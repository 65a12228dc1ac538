#pragma once

#include <optional>
#include <vector>

#include "cygoppa/linbin.hpp"
#include "cygoppa/poly.hpp"
#include "cygoppa/projline.hpp"

namespace cygoppa {

/// Outcome of cyclicity analysis of a binary code. For the zero code the
/// generator is x^n - 1 by convention, so generator * parity_check_poly is
/// always x^n - 1.
struct CyclicReport {
  bool is_cyclic = false;
  std::optional<Polynomial> generator;          // monic divisor of x^n - 1, over GF(2)
  std::optional<Polynomial> parity_check_poly;  // (x^n - 1) / generator
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::uint32_t> min_distance;       // absent: unknown or zero code
  std::optional<std::uint32_t> designed_distance;  // BCH designed distance, when one applies
};

/// Shift-closure test: the right cyclic shift of every generator row must stay
/// in the code. Sufficient because shifting is linear.
bool is_cyclic(const BinaryCode& code);

/// Generator polynomial as gcd over GF(2) of the row polynomials and x^n - 1.
/// Postconditions (degree n-k, rows multiples, divisor of x^n - 1) are
/// re-checked; a failure yields a not-cyclic report instead of a bogus
/// generator. With require_cyclic the shift test runs first.
CyclicReport extract_generator(const BinaryCode& code, bool require_cyclic = true);

struct Prediction {
  Polynomial u;  // over GF(2); x^n - 1 when the prediction is the zero code
  std::optional<std::uint32_t> designed_distance;
  bool zero_code;
};

/// Closed-form generator for the cyclic expurgated/extended Goppa codes with
/// g = g1^s g2^t:
///   u1 = (x+1) lcm{ m_{rho^{-i}} : 1 <= i <= s },
///   u2 = (x+1) lcm{ m_{rho^{i}}  : 1 <= i <= t },  u = lcm(u1, u2).
/// Designed distance s+2 when t = 0, t+2 when s = 0, none otherwise. The
/// prediction is the zero code when s + t >= n - 1 or deg u = n.
Prediction predict_generator(const SpectralData& sd, unsigned s, unsigned t);

/// The odd exponents {1, 3, ..., 2 floor((s+1)/2) - 1}; the lcm over this set
/// equals the lcm over {1, ..., s}.
std::vector<unsigned> reduce_exponents(unsigned s);

inline constexpr std::uint32_t kInfiniteDistance = 0xFFFFFFFF;

/// Exhaustive minimum Hamming weight over all 2^k - 1 nonzero codewords,
/// guarded at k <= 24. The zero code reports kInfiniteDistance.
std::uint32_t min_distance(const BinaryCode& code);

/// BCH designed-distance bookkeeping for the pure-power cases (exactly one of
/// s, t nonzero): checks that the predicted generator's roots, as exponents of
/// the matching eigenvalue, contain the consecutive run {0, 1, ..., e}, and
/// that the measured distance meets d >= 2 floor((e+1)/2) + 2.
bool bch_bound_check(const CyclicReport& report, const Prediction& pred,
                     const SpectralData& sd, unsigned s, unsigned t);

}  // namespace cygoppa
