#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cwsphere/complex.hpp"
#include "cwsphere/enriched.hpp"
#include "cwsphere/error.hpp"
#include "cwsphere/geometry.hpp"
#include "cwsphere/io.hpp"
#include "cwsphere/lattice.hpp"
#include "cwsphere/qsym.hpp"
#include "cwsphere/sphere.hpp"

using namespace cwsphere;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

struct RunConfig {
  std::string input;
  std::string out = ".";
  int m_max = 3;
  std::vector<std::string> emit;
  std::size_t max_facets = kDefaultMaxFacets;

  bool emits(const std::string& what) const {
    return std::find(emit.begin(), emit.end(), what) != emit.end();
  }
};

struct Outcome {
  Json report;
  bool pass = true;
};

void write_text(const RunConfig& cfg, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(cfg.out);
  const auto path = std::filesystem::path(cfg.out) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
  f << text;
}

void write_json(const RunConfig& cfg, const std::string& name, const Json& j) { write_text(cfg, name, j.dump(2) + "\n"); }

ConvexGeometry load_geometry(const RunConfig& cfg) {
  const std::string text = read_file(cfg.input);
  ConvexGeometry g = is_geometry_document(text) ? parse_geometry(text) : upper_ideal_geometry(parse_poset(text));
  require_valid(g);
  return g;
}

Json sets_json(const std::vector<Subset>& sets) {
  Json a = Json::array();
  for (Subset s : sets) a.push_back(subset_to_json(s));
  return a;
}

Json check(const std::string& name, bool pass, Json detail = Json::object()) {
  Json c;
  c["name"] = name;
  c["pass"] = pass;
  if (!detail.empty()) c["detail"] = std::move(detail);
  return c;
}

Outcome cmd_lattice(const RunConfig& cfg) {
  ClosedSetLattice lattice(load_geometry(cfg));
  const GradedPoset& p = lattice.poset();
  Json r;
  r["geometry"] = geometry_to_json(lattice.geometry());
  r["closed_set_count"] = lattice.size();
  r["closed_sets"] = sets_json(lattice.sets());
  std::vector<Subset> ext;
  for (int i = 0; i < lattice.size(); ++i) ext.push_back(lattice.ext(i));
  r["extreme_points"] = sets_json(ext);
  r["covers"] = Json::array();
  for (auto [a, b] : p.cover_pairs()) r["covers"].push_back({a, b});
  r["meet_distributive"] = is_meet_distributive(p);
  r["join_distributive"] = is_join_distributive(p);
  r["join_irreducibles"] = sets_json(lattice.join_irreducibles());
  if (cfg.emits("dot")) write_text(cfg, "lattice.dot", poset_to_dot(p, "L"));
  if (cfg.emits("json")) write_json(cfg, "lattice.json", poset_to_json(p));
  return {r, r["meet_distributive"].get<bool>()};
}

Outcome cmd_complex(const RunConfig& cfg) {
  ClosedSetLattice lattice(load_geometry(cfg));
  SubdivisionSequence seq = build_by_subdivision(lattice, cfg.max_facets);
  const SimplicialComplex& last = seq.final_complex();
  SimplicialComplex target = order_complex(lattice.poset().convex_subposet([&] {
    std::vector<int> keep;
    for (int i = 1; i < lattice.size(); ++i) keep.push_back(i);
    return keep;
  }()));
  Json r;
  r["stage_facet_counts"] = Json::array();
  for (const auto& s : seq.stages) r["stage_facet_counts"].push_back(s.facet_count());
  r["steps"] = Json::array();
  for (const auto& s : seq.steps) {
    Json step;
    step["closed_set"] = subset_to_json(s.closed_set);
    step["extreme"] = subset_to_json(s.extreme);
    step["principal"] = s.principal;
    step["facets_after"] = s.facets_after;
    r["steps"].push_back(step);
  }
  const bool same = last.same_labeled_facets(target);
  r["equals_order_complex"] = same;
  r["f_vector"] = f_vector(last);
  r["h_vector"] = h_polynomial(last).coeffs;
  if (cfg.emits("json")) write_json(cfg, "complex.json", complex_to_json(last));
  return {r, same};
}

Outcome cmd_sphere(const RunConfig& cfg) {
  ClosedSetLattice lattice(load_geometry(cfg));
  QPoset q(lattice);
  SimplicialComplex pm = reflect(lattice, cfg.max_facets);
  const auto pmc = pseudomanifold_check(pm);
  const int n = lattice.ground_size();
  const std::int64_t chi = euler_characteristic(pm);
  Json r;
  r["n"] = n;
  r["q_size"] = q.poset().size();
  r["coatoms"] = q.poset().covers_down(q.top()).size();
  r["f_vector"] = f_vector(pm);
  r["h_vector"] = h_polynomial(pm).coeffs;
  r["euler_characteristic"] = chi;
  r["closed_pseudomanifold"] = pmc.closed;
  r["pm_delta_equals_order_complex"] = verify_pm_delta(q, pm);
  r["eulerian"] = q_is_eulerian(q);
  r["sign_flip_symmetry"] = has_sign_flip_symmetry(q, pm);
  const bool pass = pmc.closed && chi == 1 + (n % 2 == 1 ? 1 : -1) && r["pm_delta_equals_order_complex"].get<bool>() &&
                    r["eulerian"].get<bool>() && r["sign_flip_symmetry"].get<bool>();
  if (cfg.emits("json")) {
    write_json(cfg, "pm_delta.json", complex_to_json(pm));
    write_json(cfg, "q_poset.json", q_poset_to_json(q));
    Json cells = Json::array();
    for (int i = 1; i < q.top(); ++i) cells.push_back(cell_to_json(q, cell(q, i)));
    write_json(cfg, "cells.json", cells);
  }
  if (cfg.emits("dot")) write_text(cfg, "q_poset.dot", poset_to_dot(q.poset(), "Q"));
  if (cfg.emits("off")) {
    if (n > 3) throw Error(ErrorKind::InvalidArgument, "OFF export needs n <= 3");
    write_text(cfg, "pm_delta.off", complex_to_off(pm, q));
  }
  return {r, pass};
}

Outcome cmd_qsym(const RunConfig& cfg) {
  const std::string text = read_file(cfg.input);
  Json r;
  if (!is_geometry_document(text)) {
    GradedPoset p = parse_poset(text);
    r["flag_f"] = qsym_to_json(flag_f(p));
    r["theta"] = qsym_to_json(theta_of_poset(p));
    r["eulerian"] = is_eulerian(p);
    return {r, true};
  }
  ConvexGeometry g = parse_geometry(text);
  require_valid(g);
  ClosedSetLattice lattice(g);
  MainTheoremReport m = verify_main_theorem(lattice);
  r["twice_flag_f_q"] = qsym_to_json(m.lhs);
  r["theta_l_with_bottom"] = qsym_to_json(m.rhs);
  r["main_theorem"] = m.holds;
  r["mismatches"] = Json::array();
  for (const auto& mm : m.mismatches) {
    r["mismatches"].push_back({{"composition", composition_key(mm.composition)}, {"lhs", mm.lhs}, {"rhs", mm.rhs}});
  }
  return {r, m.holds};
}

Json rows_json(const std::vector<EnrichedRow>& rows, const char* expected_name) {
  Json a = Json::array();
  for (const auto& row : rows) {
    a.push_back({{"m", row.m}, {expected_name, row.expected}, {"count", row.count}, {"match", row.match()}});
  }
  return a;
}

Outcome cmd_enriched(const RunConfig& cfg) {
  ClosedSetLattice lattice(load_geometry(cfg));
  QPoset q(lattice);
  EnrichedReport e = verify_prop_enriched(lattice, cfg.m_max);
  SimplicialComplex pm = reflect(lattice, cfg.max_facets);
  HIdentityReport h = verify_h_identity(q, pm);
  ReciprocityReport rec = verify_self_reciprocity(q);
  const RationalPolynomial hp = h_polynomial(pm).to_rational();
  Json r;
  r["zbar"] = rows_json(e.zbar_rows, "zbar");
  r["extension"] = rows_json(e.extension_rows, "twice_z");
  r["extension_zbar"] = rows_json(e.extension_zbar_rows, "twice_z");
  r["zeta_binomial"] = zeta_polynomial(q.poset()).binomial;
  r["zeta"] = polynomial_to_json(zeta_polynomial(q.poset()).to_monomial());
  r["zbar_polynomial"] = polynomial_to_json(zbar_polynomial(q.poset()).to_monomial());
  r["h"] = polynomial_to_json(hp);
  r["h_real_rooted"] = is_real_rooted(hp);
  r["h_identity"] = {{"denominator_exponent", h.exponent},
                     {"numerator", polynomial_to_json(h.numerator)},
                     {"exact", h.exact},
                     {"series", h.series},
                     {"series_with_exponent_n_plus_1", h.series_with_n_plus_1}};
  r["self_reciprocity"] = {{"z", rec.z}, {"zbar", rec.zbar}};
  return {r, e.holds() && h.holds() && rec.holds()};
}

Outcome cmd_verify(const RunConfig& cfg) {
  ClosedSetLattice lattice(load_geometry(cfg));
  const int n = lattice.ground_size();
  QPoset q(lattice);
  SimplicialComplex pm = reflect(lattice, cfg.max_facets);
  Json checks = Json::array();

  checks.push_back(check("meet_distributive", is_meet_distributive(lattice.poset())));
  checks.push_back(check("pm_delta_equals_order_complex", verify_pm_delta(q, pm)));
  const auto pmc = pseudomanifold_check(pm);
  const std::int64_t chi = euler_characteristic(pm);
  checks.push_back(check("closed_pseudomanifold", pmc.closed));
  checks.push_back(check("euler_characteristic", chi == 1 + (n % 2 == 1 ? 1 : -1), {{"chi", chi}}));
  checks.push_back(check("sign_flip_symmetry", has_sign_flip_symmetry(q, pm)));
  checks.push_back(check("eulerian", q_is_eulerian(q)));

  std::int64_t fiber_bad = 0;
  const auto chains = chains_to_top(lattice);
  for (const auto& c : chains) fiber_bad += fiber_count(q, c) != fiber_product(lattice, c);
  checks.push_back(check("fiber_product", fiber_bad == 0, {{"chains", chains.size()}, {"mismatches", fiber_bad}}));

  int boundary_bad = 0;
  for (int i = 1; i < q.top(); ++i) boundary_bad += !verify_boundary_lemma(q, i);
  checks.push_back(check("cell_boundaries", boundary_bad == 0, {{"mismatches", boundary_bad}}));

  MainTheoremReport main = verify_main_theorem(lattice);
  checks.push_back(check("main_theorem", main.holds, {{"mismatches", main.mismatches.size()}}));

  EnrichedReport e = verify_prop_enriched(lattice, cfg.m_max);
  checks.push_back(check("enriched_zbar", e.holds(),
                         {{"zbar", rows_json(e.zbar_rows, "zbar")},
                          {"extension", rows_json(e.extension_rows, "twice_z")},
                          {"extension_zbar", rows_json(e.extension_zbar_rows, "twice_z")}}));

  HIdentityReport h = verify_h_identity(q, pm);
  checks.push_back(check("h_identity", h.holds(),
                         {{"denominator_exponent", h.exponent}, {"numerator", polynomial_to_json(h.numerator)}}));
  ReciprocityReport rec = verify_self_reciprocity(q);
  checks.push_back(check("self_reciprocity", rec.holds(), {{"z", rec.z}, {"zbar", rec.zbar}}));

  bool pass = true;
  for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
  const RationalPolynomial hp = h_polynomial(pm).to_rational();
  Json r;
  r["pass"] = pass;
  r["checks"] = checks;
  r["summary"] = {{"n", n},
                  {"closed_sets", lattice.size()},
                  {"f_vector", f_vector(pm)},
                  {"h_vector", h_polynomial(pm).coeffs},
                  {"h_real_rooted", is_real_rooted(hp)},
                  {"zbar_1", e.zbar_rows.empty() ? 0 : e.zbar_rows.front().count}};
  return {r, pass};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex geometries, their closed-set lattices and the CW sphere Q_L"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string emit;

  struct Command {
    const char* name;
    const char* help;
    Outcome (*run)(const RunConfig&);
  };
  const std::vector<Command> commands = {
      {"lattice", "Closed sets, covers, distributivity and join-irreducibles", cmd_lattice},
      {"complex", "Order complex by iterated stellar subdivision", cmd_complex},
      {"sphere", "+-Delta, Q_L, cells and sphere checks", cmd_sphere},
      {"qsym", "Flag quasisymmetric functions and the theta identity", cmd_qsym},
      {"enriched", "Enriched extremal functions, zeta polynomials and h", cmd_enriched},
      {"verify", "Run every identity check; exit 0 iff all pass", cmd_verify},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--input", cfg.input, "Geometry or poset JSON document")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", cfg.out, "Output directory for report.json and exports");
    sub->add_option("--m-max", cfg.m_max, "Largest m for the enriched counts")->check(CLI::Range(1, 16));
    sub->add_option("--emit", emit, "Comma-separated exports: dot,off,json");
    sub->add_option("--max-facets", cfg.max_facets, "Facet cap for complexes")->check(CLI::Range(std::size_t{1}, kDefaultMaxFacets * 100));
    subs.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  std::stringstream ss(emit);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    if (item != "dot" && item != "off" && item != "json") {
      std::cerr << "error: unknown export '" << item << "'\n";
      return kExitInputError;
    }
    cfg.emit.push_back(item);
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      Outcome o = commands[i].run(cfg);
      Json out;
      out["command"] = commands[i].name;
      out["pass"] = o.pass;
      out["report"] = o.report;
      const std::string text = out.dump(2) + "\n";
      std::cout << text;
      if (!cfg.emit.empty() || app.get_subcommand(commands[i].name)->count("--out")) write_text(cfg, "report.json", text);
      return o.pass ? kExitPass : kExitCheckFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::ResourceLimit || e.kind() == ErrorKind::Overflow || e.kind() == ErrorKind::GroundSetTooLarge) {
      return kExitResourceLimit;
    }
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
