#pragma once

#include <string>
#include <string_view>

#include "cygoppa/poly.hpp"
#include "cygoppa/projline.hpp"

namespace cygoppa {

/// Element literals: `0`, `1`, `g^<k>` (power of the field's generator), or
/// `0b<m bits>` (coordinate vector, low bit = constant term).
FieldElement parse_element(const FieldSpec& f, std::string_view text);
std::string element_literal(const FieldElement& e);

/// Point literals: element literals plus `inf`.
ProjPoint parse_point(const FieldSpec& f, std::string_view text);
std::string point_literal(const ProjPoint& p);

/// Field literals: `m=<int>` with optional `poly=0x<hex>` and `gen=<element
/// literal>`, separated by spaces or commas (the leading `gf2m` tag of the
/// display form is accepted and ignored).
const FieldSpec& parse_field(std::string_view text);

/// Matrix literal `[[a,b],[c,d]]` of element literals.
MoebiusMap parse_matrix(const FieldSpec& f, std::string_view text, unsigned frob = 0);

/// GF(2) polynomial literals: `0x<hex>` (bit i = coefficient of x^i) or the
/// human form `x^6+x^4+x^3+x+1`.
Polynomial parse_gf2_poly(std::string_view text);

/// Polynomial over any field: `[lit,lit,...]` lowest degree first, or a GF(2)
/// literal (whose 0/1 coefficients lift into the field).
Polynomial parse_poly(const FieldSpec& f, std::string_view text);

}  // namespace cygoppa
