#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cygoppa/cyclic.hpp"
#include "cygoppa/goppa.hpp"
#include "cygoppa/literals.hpp"

namespace cygoppa {

using OrderedJson = nlohmann::ordered_json;

struct ExpectedOutcome {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::uint32_t> d;
  std::optional<std::string> generator_hex;  // pinned exact generator, when unique
  std::string provenance;                    // example id or oracle note
};

enum class SupportKind { orbit_of, orbit_infinity, auto_affine };

/// One verification case: a matrix over a base field, exponents (s, t) for the
/// Goppa polynomial g1^s g2^t, a support selector, and a variant.
struct CaseSpec {
  const FieldSpec* base_field = nullptr;
  std::array<std::uint32_t, 4> matrix{0, 0, 0, 0};  // a, b, c, d masks
  unsigned frob = 0;
  SupportKind support = SupportKind::auto_affine;
  std::string support_literal;  // for orbit_of, parsed in the working field
  unsigned s = 1;
  unsigned t = 0;
  Variant variant = Variant::expurgated;
  bool compute_distance = true;          // exhaustive d when k <= 24
  bool include_generator_matrix = false;  // hex rows in the report
  std::optional<ExpectedOutcome> expected;
  std::string label;
};

struct CaseResult {
  std::string label;
  std::string status = "ok";  // "ok" | "skip" | "error"
  std::string error_kind;
  std::string message;

  // Echo of the resolved inputs.
  std::string base_field;
  std::array<std::string, 4> matrix{};
  unsigned frob = 0;
  unsigned s = 0;
  unsigned t = 0;
  std::string variant;

  // Spectral data (valid when status == "ok").
  bool reducible = false;
  unsigned order = 0;
  std::string working_field;
  std::string trace, rho, rho_inv, fixed1, fixed2;

  // Construction and analysis.
  std::vector<std::string> support;
  std::string goppa_poly;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::uint32_t> d;
  bool cyclic = false;
  std::optional<Polynomial> generator;         // over GF(2)
  std::optional<Polynomial> predicted;         // over GF(2)
  std::optional<std::uint32_t> designed_distance;
  bool zero_code = false;
  bool match = false;
  std::vector<std::string> generator_factors;  // canonical factors of x^n - 1
  std::vector<std::string> generator_rows;     // hex rows, only when requested

  std::optional<ExpectedOutcome> expected;
  bool expected_ok = true;
  std::map<std::string, bool> checks;  // named side conditions, all must hold
  std::vector<std::string> warnings;
  double elapsed_ms = 0.0;  // never serialized: reports stay byte-deterministic

  bool ok() const;
  OrderedJson to_json() const;
};

/// Full pipeline for one case: spectral analysis, support resolution,
/// construction, cyclicity, generator extraction, prediction, match. Standing
/// assumption violations (c = 0, trace = 0, ord <= 2, sigma^j != 1, no affine
/// orbit) come back as status "skip", not exceptions.
CaseResult run_case(const CaseSpec& spec);

/// The five golden examples. Each id runs every listed sub-case and checks the
/// published [n, k, d] triples, prediction match, canonical factor membership,
/// and the per-example side conditions (square equality, self-reciprocal
/// minimal polynomial, designed-distance bound, intersection identity).
std::vector<CaseResult> reproduce_example(const std::string& id);
std::vector<std::string> known_examples();

OrderedJson results_to_json(const std::string& title, const std::vector<CaseResult>& results);

struct SweepOptions {
  std::vector<unsigned> degrees{4, 6, 8};
  unsigned max_exponent = 6;
  bool frobenius = false;  // mix in sigma^j != 1 cases (cyclicity only)
};

struct SweepSummary {
  std::uint64_t seed = 0;
  unsigned total = 0;
  unsigned passed = 0;
  unsigned failed = 0;
  unsigned skipped = 0;
  std::map<std::string, unsigned> skip_kinds;
  unsigned reducible = 0;
  unsigned irreducible = 0;
  unsigned expurgated = 0;
  unsigned extended = 0;
  unsigned zero_codes = 0;
  unsigned frobenius_cases = 0;
  std::vector<std::string> failures;
  OrderedJson to_json() const;
};

/// Seeded randomized campaign; deterministic for a fixed seed and options.
SweepSummary sweep(unsigned count, std::uint64_t seed, const SweepOptions& opts = {});

}  // namespace cygoppa
