// Command-line front end: construct binary Goppa codes from projective-line
// orbits, analyze cyclicity, and verify extracted generator polynomials
// against the closed-form predictions.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cygoppa/harness.hpp"

namespace {

using namespace cygoppa;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSkip = 3;

struct Output {
  bool json = false;
  std::string out_path;

  void emit(const OrderedJson& j, const std::string& text) const {
    const std::string payload = json ? j.dump(2) + "\n" : text;
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) fail("io", "cannot open output file '" + out_path + "'");
      f << payload;
    }
  }
};

SupportKind parse_support(const std::string& text, std::string& literal) {
  if (text == "orbit-infty") return SupportKind::orbit_infinity;
  if (text.starts_with("orbit-of:")) {
    literal = text.substr(9);
    return SupportKind::orbit_of;
  }
  if (text.empty() || text == "auto") return SupportKind::auto_affine;
  fail("bad_literal", "support selector must be orbit-of:<point> or orbit-infty");
}

std::string case_line(const CaseResult& r) {
  std::string line = r.label.empty() ? std::string("case") : r.label;
  if (r.status != "ok") return line + ": " + r.status + " (" + r.error_kind + ") " + r.message;
  line += ": [" + std::to_string(r.n) + "," + std::to_string(r.k);
  line += r.d ? "," + std::to_string(*r.d) : std::string(",?");
  line += "]";
  line += r.cyclic ? " cyclic" : " NOT-cyclic";
  if (r.generator) line += " gen=" + r.generator->to_human();
  line += r.match ? " match" : " MISMATCH";
  if (r.expected && !r.expected_ok) line += " EXPECTED-DIFFERS";
  for (const auto& [name, ok] : r.checks)
    if (!ok) line += " CHECK-FAILED:" + name;
  if (r.zero_code) line += " (zero code)";
  return line + "\n";
}

int exit_for(const std::vector<CaseResult>& results) {
  for (const CaseResult& r : results) {
    if (r.status == "error") return kExitUsage;
    if (r.status == "skip") return kExitSkip;
    if (!r.ok()) return kExitMismatch;
  }
  return kExitOk;
}

struct CommonArgs {
  std::string field = "m=6";
  std::string matrix;
  unsigned frob = 0;
  std::string support = "auto";
  unsigned s = 1, t = 0;
  std::string variant = "expurgated";
  std::string instance_path;

  void load_instance_file() {
    if (instance_path.empty()) return;
    std::ifstream f(instance_path);
    if (!f) fail("io", "cannot read instance file '" + instance_path + "'");
    OrderedJson j = OrderedJson::parse(f, nullptr, true, true);
    if (j.contains("field")) field = j["field"].get<std::string>();
    if (j.contains("matrix")) matrix = j["matrix"].get<std::string>();
    if (j.contains("frob")) frob = j["frob"].get<unsigned>();
    if (j.contains("support")) support = j["support"].get<std::string>();
    if (j.contains("s")) s = j["s"].get<unsigned>();
    if (j.contains("t")) t = j["t"].get<unsigned>();
    if (j.contains("variant")) variant = j["variant"].get<std::string>();
  }

  CaseSpec to_case() {
    load_instance_file();
    if (matrix.empty()) fail("bad_literal", "a matrix literal is required");
    CaseSpec cs;
    cs.base_field = &parse_field(field);
    const MoebiusMap m = parse_matrix(*cs.base_field, matrix, frob);
    cs.matrix = {m.a().mask(), m.b().mask(), m.c().mask(), m.d().mask()};
    cs.frob = frob;
    cs.support = parse_support(support, cs.support_literal);
    cs.s = s;
    cs.t = t;
    cs.variant = variant_from_name(variant);
    return cs;
  }
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_exponents) {
  cmd->add_option("--field", a.field, "field literal, e.g. m=6 or m=6,poly=0x43");
  cmd->add_option("--matrix", a.matrix, "matrix literal [[a,b],[c,d]] of element literals");
  cmd->add_option("--frob", a.frob, "Frobenius exponent j (sigma^j)");
  if (with_exponents) {
    cmd->add_option("--support", a.support, "orbit-of:<point> | orbit-infty | auto");
    cmd->add_option("--s", a.s, "exponent of g1 = x + (a+rho)/c");
    cmd->add_option("--t", a.t, "exponent of g2 = x + (a+rho^-1)/c");
    cmd->add_option("--variant", a.variant, "plain | expurgated | extended");
    cmd->add_option("--instance", a.instance_path, "JSON instance description file");
  }
}

int cmd_field(const CommonArgs& a, const Output& out) {
  const FieldSpec& f = parse_field(a.field);
  OrderedJson j;
  j["field"] = f.describe();
  j["size"] = f.size();
  j["generator_order"] = f.element_order(f.generator_mask());
  std::string text = f.describe() + "\n  size " + std::to_string(f.size()) +
                     ", generator order " + std::to_string(f.element_order(f.generator_mask())) +
                     "\n";
  out.emit(j, text);
  return kExitOk;
}

int cmd_spectral(const CommonArgs& a, const Output& out) {
  const FieldSpec& f = parse_field(a.field);
  const MoebiusMap m = parse_matrix(f, a.matrix, a.frob);
  const SpectralData sd = spectral(m, TowerEmbedding::quadratic(f.degree()));
  OrderedJson j;
  j["field"] = f.describe();
  j["order"] = sd.order;
  j["trace"] = element_literal(sd.trace);
  j["rho"] = element_literal(sd.rho_w);
  j["rho_inv"] = element_literal(sd.rho_inv_w);
  j["reducible"] = sd.reducible;
  j["working_field"] = sd.working_field->describe();
  j["fixed"] = OrderedJson::array(
      {element_literal(sd.fixed1), element_literal(sd.fixed2)});
  std::string text = "ord(A) = " + std::to_string(sd.order) +
                     (sd.reducible ? " (reducible" : " (irreducible") +
                     ", working field " + sd.working_field->describe() + ")\n" +
                     "rho = " + element_literal(sd.rho_w) +
                     ", rho^-1 = " + element_literal(sd.rho_inv_w) + "\n" +
                     "fixed points: " + element_literal(sd.fixed1) + ", " +
                     element_literal(sd.fixed2) + "\n";
  out.emit(j, text);
  return kExitOk;
}

int cmd_orbit(const CommonArgs& a, const std::string& point, bool full_partition,
              const Output& out) {
  const FieldSpec& f = parse_field(a.field);
  const MoebiusMap m = parse_matrix(f, a.matrix, a.frob);
  OrderedJson j;
  std::string text;
  j["field"] = f.describe();
  j["order"] = m.order();
  if (full_partition) {
    const std::vector<Orbit> orbits = partition(m);
    j["orbits"] = OrderedJson::array();
    for (const Orbit& o : orbits) {
      OrderedJson row = OrderedJson::array();
      for (const ProjPoint& p : o.points()) row.push_back(point_literal(p));
      j["orbits"].push_back(row);
      text += "orbit (" + std::to_string(o.size()) + "):";
      for (const ProjPoint& p : o.points()) text += " " + point_literal(p);
      text += "\n";
    }
  } else {
    const Orbit o = orbit_of(m, parse_point(f, point));
    OrderedJson row = OrderedJson::array();
    for (const ProjPoint& p : o.points()) row.push_back(point_literal(p));
    j["orbit"] = row;
    text = "orbit (" + std::to_string(o.size()) + "):";
    for (const ProjPoint& p : o.points()) text += " " + point_literal(p);
    text += "\n";
  }
  out.emit(j, text);
  return kExitOk;
}

// Direct construction; with --goppa this also covers the exploratory
// sigma^j != 1 path, where cyclicity is tested but no prediction exists.
int cmd_code(CommonArgs& a, const std::string& goppa_text, bool want_distance,
             const Output& out) {
  if (!goppa_text.empty()) {
    a.load_instance_file();
    const FieldSpec& f = parse_field(a.field);
    const MoebiusMap m = parse_matrix(f, a.matrix, a.frob);
    const Polynomial g = parse_poly(f, goppa_text);
    std::string literal;
    const SupportKind kind = parse_support(a.support, literal);
    if (kind == SupportKind::auto_affine)
      fail("bad_literal",
           "--goppa needs an explicit --support orbit-of:<point> or orbit-infty");
    std::vector<FieldElement> support;
    Variant variant = variant_from_name(a.variant);
    const Orbit o = (kind == SupportKind::orbit_infinity)
                        ? orbit_of(m, ProjPoint::infinity())
                        : orbit_of(m, parse_point(f, literal));
    const unsigned n = static_cast<unsigned>(o.size());
    if (o.contains_infinity()) {
      const std::vector<ProjPoint>& pts = o.points();
      std::size_t at = 0;
      while (!pts[at].is_infinity()) ++at;
      for (std::size_t i = 1; i < pts.size(); ++i)
        support.push_back(pts[(at + i) % pts.size()].value());
      variant = Variant::extended;
    } else {
      if (variant == Variant::extended)
        fail("bad_literal", "the extended variant requires a support orbit through infinity");
      support = o.affine_points();
    }
    const bool invariant = check_condition_2_3(m, g, n);
    const BinaryCode code = build_code(GoppaInstance::make(support, g, variant));
    const CyclicReport rep = extract_generator(code, true);
    OrderedJson j;
    j["field"] = f.describe();
    j["variant"] = variant_name(variant);
    j["goppa_poly"] = g.to_human();
    j["orbit_length"] = n;
    j["condition_2_3"] = invariant;
    j["code"] = OrderedJson{{"n", code.n()}, {"k", code.k()}};
    j["is_cyclic"] = rep.is_cyclic;
    j["generator_hex"] =
        rep.generator ? OrderedJson(rep.generator->to_hex()) : OrderedJson(nullptr);
    j["generator_human"] =
        rep.generator ? OrderedJson(rep.generator->to_human()) : OrderedJson(nullptr);
    std::optional<std::uint32_t> d;
    if (want_distance && code.k() >= 1 && code.k() <= 24) {
      const std::uint32_t dist = min_distance(code);
      if (dist != kInfiniteDistance) d = dist;
    }
    j["d"] = d ? OrderedJson(*d) : OrderedJson(nullptr);
    j["generator_matrix"] = OrderedJson::array();
    for (std::size_t r = 0; r < code.k(); ++r)
      j["generator_matrix"].push_back(code.generator().row_hex(r));
    j["prediction"] = nullptr;  // none for explicit Goppa polynomials
    std::string text = "[" + std::to_string(code.n()) + "," + std::to_string(code.k()) +
                       (d ? "," + std::to_string(*d) : "") + "] " +
                       (rep.is_cyclic ? "cyclic" : "not cyclic");
    if (rep.generator) text += ", generator " + rep.generator->to_human();
    text += "\n";
    out.emit(j, text);
    return kExitOk;
  }

  CaseSpec cs = a.to_case();
  cs.compute_distance = want_distance;
  cs.label = "code";
  const CaseResult r = run_case(cs);
  out.emit(r.to_json(), case_line(r));
  if (r.status == "error") return kExitUsage;
  if (r.status == "skip") return kExitSkip;
  return kExitOk;  // `code` reports; `verify` enforces the match
}

int cmd_verify(CommonArgs& a, const Output& out) {
  CaseSpec cs = a.to_case();
  cs.label = "verify";
  const CaseResult r = run_case(cs);
  out.emit(r.to_json(), case_line(r));
  if (r.status == "error") return kExitUsage;
  if (r.status == "skip") return kExitSkip;
  return r.ok() ? kExitOk : kExitMismatch;
}

int cmd_reproduce(const std::string& id, const Output& out) {
  const std::vector<CaseResult> results = reproduce_example(id);
  std::string text;
  for (const CaseResult& r : results) text += case_line(r);
  out.emit(results_to_json("example " + id, results), text);
  return exit_for(results);
}

int cmd_sweep(unsigned count, std::uint64_t seed, unsigned max_exp,
              std::vector<unsigned> degrees, bool frobenius, const Output& out) {
  SweepOptions opts;
  if (!degrees.empty()) opts.degrees = std::move(degrees);
  opts.max_exponent = max_exp;
  opts.frobenius = frobenius;
  const SweepSummary sum = sweep(count, seed, opts);
  std::string text = "sweep seed=" + std::to_string(seed) + ": " + std::to_string(sum.passed) +
                     " passed, " + std::to_string(sum.failed) + " failed, " +
                     std::to_string(sum.skipped) + " skipped of " + std::to_string(sum.total) +
                     "\n";
  for (const std::string& fmsg : sum.failures) text += "  FAIL " + fmsg + "\n";
  out.emit(sum.to_json(), text);
  return sum.failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary Goppa codes under projective-linear symmetry: construction, "
               "cyclicity, and generator-polynomial verification"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--json", out.json, "emit machine-readable JSON");
  app.add_option("--out", out.out_path, "write the report to a file");

  CommonArgs field_args, spectral_args, orbit_args, code_args, verify_args;

  CLI::App* c_field = app.add_subcommand("field", "inspect and validate a field literal");
  add_common(c_field, field_args, false);

  CLI::App* c_spec = app.add_subcommand("spectral", "order, eigenvalues, fixed points");
  add_common(c_spec, spectral_args, false);

  CLI::App* c_orbit = app.add_subcommand("orbit", "orbit of a point, or the full partition");
  add_common(c_orbit, orbit_args, false);
  std::string orbit_point = "inf";
  bool orbit_partition = false;
  c_orbit->add_option("--point", orbit_point, "start point (element literal or inf)");
  c_orbit->add_flag("--partition", orbit_partition, "list the whole orbit partition");

  CLI::App* c_code = app.add_subcommand("code", "build a Goppa instance and report n, k, d");
  add_common(c_code, code_args, true);
  std::string goppa_text;
  bool want_distance = false;
  c_code->add_option("--goppa", goppa_text,
                     "explicit Goppa polynomial (exploratory; works with --frob > 0)");
  c_code->add_flag("--distance", want_distance, "compute the exact minimum distance (k <= 24)");

  CLI::App* c_verify = app.add_subcommand("verify", "construct, extract, predict, and compare");
  add_common(c_verify, verify_args, true);

  CLI::App* c_rep = app.add_subcommand("reproduce", "run a named example end to end");
  std::string example_id;
  c_rep->add_option("--example", example_id, "one of 3.12, 3.13, 3.14, 3.20, 3.24")->required();

  CLI::App* c_sweep = app.add_subcommand("sweep", "seeded randomized verification campaign");
  unsigned sweep_count = 200, sweep_max_exp = 6;
  std::uint64_t sweep_seed = 1;
  std::vector<unsigned> sweep_degrees;
  bool sweep_frob = false;
  c_sweep->add_option("--count", sweep_count, "number of cases");
  c_sweep->add_option("--seed", sweep_seed, "RNG seed (echoed in the report)");
  c_sweep->add_option("--max-exp", sweep_max_exp, "maximum exponent for s and t");
  c_sweep->add_option("--degrees", sweep_degrees, "base field degrees (default 4 6 8)");
  c_sweep->add_flag("--frobenius", sweep_frob, "mix in exploratory sigma^j != 1 cases");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_field->parsed()) return cmd_field(field_args, out);
    if (c_spec->parsed()) return cmd_spectral(spectral_args, out);
    if (c_orbit->parsed()) return cmd_orbit(orbit_args, orbit_point, orbit_partition, out);
    if (c_code->parsed()) return cmd_code(code_args, goppa_text, want_distance, out);
    if (c_verify->parsed()) return cmd_verify(verify_args, out);
    if (c_rep->parsed()) return cmd_reproduce(example_id, out);
    if (c_sweep->parsed())
      return cmd_sweep(sweep_count, sweep_seed, sweep_max_exp, sweep_degrees, sweep_frob, out);
  } catch (const cygoppa::Error& e) {
    OrderedJson j;
    j["error"] = OrderedJson{{"kind", e.kind()}, {"message", e.what()}};
    const std::string text = std::string("error (") + e.kind() + "): " + e.what() + "\n";
    if (out.json)
      std::cerr << j.dump(2) << "\n";
    else
      std::cerr << text;
    return cygoppa::is_skip_kind(e.kind()) ? kExitSkip : kExitUsage;
  }
  return kExitUsage;
}
