#include "cygoppa/literals.hpp"

#include <charconv>
#include <vector>

namespace cygoppa {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, int base, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc() || p != s.data() + s.size())
    fail("bad_literal", std::string("cannot parse ") + what + " from '" + std::string(s) + "'");
  return v;
}

std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 10);
  if (ec != std::errc() || p != s.data() + s.size())
    fail("bad_literal", std::string("cannot parse ") + what + " from '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(strip(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// Splits a bracketed list at top-level commas: "[a,[b,c],d]" -> {a, [b,c], d}.
std::vector<std::string_view> split_list(std::string_view s) {
  s = strip(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    fail("bad_literal", "expected a [...] list, got '" + std::string(s) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.push_back(strip(s.substr(start, i - start)));
      start = i + 1;
    } else if (s[i] == '[') {
      ++depth;
    } else if (s[i] == ']') {
      --depth;
    }
  }
  return out;
}

}  // namespace

FieldElement parse_element(const FieldSpec& f, std::string_view text) {
  text = strip(text);
  if (text == "0") return f.zero();
  if (text == "1") return f.one();
  if (text.starts_with("g^")) {
    return f.generator_pow(parse_int(text.substr(2), "generator exponent"));
  }
  if (text.starts_with("0b")) {
    std::string_view bits = text.substr(2);
    if (bits.empty() || bits.size() > f.degree())
      fail("bad_literal", "coordinate literal needs 1..m bits");
    std::uint32_t mask = 0;
    for (char ch : bits) {
      if (ch != '0' && ch != '1') fail("bad_literal", "coordinate literal must be binary");
      mask = (mask << 1) | static_cast<std::uint32_t>(ch - '0');
    }
    return f.element(mask);
  }
  fail("bad_literal", "unknown element literal '" + std::string(text) + "'");
}

std::string element_literal(const FieldElement& e) {
  if (e.is_zero()) return "0";
  if (e.is_one()) return "1";
  return "g^" + std::to_string(e.spec().log_raw(e.mask()));
}

ProjPoint parse_point(const FieldSpec& f, std::string_view text) {
  if (strip(text) == "inf") return ProjPoint::infinity();
  return ProjPoint::finite(parse_element(f, text));
}

std::string point_literal(const ProjPoint& p) {
  return p.is_infinity() ? "inf" : element_literal(p.value());
}

const FieldSpec& parse_field(std::string_view text) {
  unsigned m = 0;
  std::uint32_t poly = 0, gen_mask = 0;
  bool have_gen = false;
  std::string gen_text;
  // Accept both space- and comma-separated k=v pairs.
  std::string normalized(strip(text));
  for (char& ch : normalized)
    if (ch == ',') ch = ' ';
  for (std::string_view item : split(normalized, ' ')) {
    if (item.empty() || item == "gf2m") continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      fail("bad_literal", "field literal items must be key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "m") {
      m = static_cast<unsigned>(parse_uint(val, 10, "field degree"));
    } else if (key == "poly") {
      if (!val.starts_with("0x")) fail("bad_literal", "poly expects a 0x hex mask");
      poly = static_cast<std::uint32_t>(parse_uint(val.substr(2), 16, "defining polynomial"));
    } else if (key == "gen") {
      have_gen = true;
      gen_text = std::string(val);
    } else {
      fail("bad_literal", "unknown field key '" + std::string(key) + "'");
    }
  }
  if (m == 0) fail("bad_literal", "field literal requires m=<degree>");
  if (poly == 0) poly = FieldSpec::default_modulus(m);
  if (!have_gen) return FieldSpec::get(m, poly);
  gen_mask = parse_element(FieldSpec::get(m, poly), gen_text).mask();
  return FieldSpec::get(m, poly, gen_mask);
}

MoebiusMap parse_matrix(const FieldSpec& f, std::string_view text, unsigned frob) {
  const auto rows = split_list(text);
  if (rows.size() != 2) fail("bad_literal", "matrix literal must have two rows");
  const auto top = split_list(rows[0]), bot = split_list(rows[1]);
  if (top.size() != 2 || bot.size() != 2)
    fail("bad_literal", "matrix rows must have two entries");
  return MoebiusMap::normalized(parse_element(f, top[0]), parse_element(f, top[1]),
                                parse_element(f, bot[0]), parse_element(f, bot[1]), frob);
}

Polynomial parse_gf2_poly(std::string_view text) {
  text = strip(text);
  if (text.starts_with("0x")) {
    const std::uint64_t mask = parse_uint(text.substr(2), 16, "polynomial mask");
    return Polynomial::from_gf2_mask(mask);
  }
  std::vector<std::uint32_t> coeffs;
  for (std::string_view term : split(text, '+')) {
    term = strip(term);
    unsigned e = 0;
    if (term == "1") {
      e = 0;
    } else if (term == "x") {
      e = 1;
    } else if (term.starts_with("x^")) {
      e = static_cast<unsigned>(parse_uint(term.substr(2), 10, "exponent"));
    } else {
      fail("bad_literal", "unknown polynomial term '" + std::string(term) + "'");
    }
    if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
    coeffs[e] ^= 1;  // repeated terms cancel in characteristic 2
  }
  return Polynomial(FieldSpec::gf2(), std::move(coeffs));
}

Polynomial parse_poly(const FieldSpec& f, std::string_view text) {
  text = strip(text);
  if (!text.starts_with("[")) {
    const Polynomial p2 = parse_gf2_poly(text);
    return Polynomial(f, std::vector<std::uint32_t>(p2.coeff_masks()));
  }
  std::vector<std::uint32_t> coeffs;
  for (std::string_view item : split_list(text))
    coeffs.push_back(parse_element(f, item).mask());
  return Polynomial(f, std::move(coeffs));
}

}  // namespace cygoppa
