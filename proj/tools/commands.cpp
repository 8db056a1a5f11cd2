#include "commands.hpp"

#include <cstdio>
#include <sstream>

#include "coopx/degree.hpp"
#include "coopx/error.hpp"
#include "coopx/examples.hpp"
#include "coopx/hopf.hpp"
#include "coopx/induce.hpp"
#include "coopx/tu.hpp"

namespace coopx::cli {

namespace {

enum class Kind { Game, Tu, Ntu, Firms, Complex };

Kind kind_of(const Json& j) {
  if (j.is_object()) {
    if (j.contains("utilities")) return Kind::Game;
    if (j.contains("values")) return Kind::Tu;
    if (j.contains("sets")) return Kind::Ntu;
    if (j.contains("facets")) return Kind::Complex;
    if (j.contains("firms")) return Kind::Firms;
  }
  throw Error(ErrorCode::MalformedInput, "$: not a game, TU game, NTU game, firm system or complex document");
}

GeneralizedGame load_game(const Json& j) {
  switch (kind_of(j)) {
    case Kind::Game:
      return game_from_json(j);
    case Kind::Tu:
      return embed_coalitional(tu_game_from_json(j));
    case Kind::Ntu:
      return embed_coalitional(ntu_game_from_json(j));
    default:
      throw Error(ErrorCode::MalformedInput, "$: expected a game document");
  }
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Vector parse_point(const std::string& s) {
  Vector v;
  for (const auto& x : split(s)) v.push_back(parse_rational(x));
  if (v.empty()) throw Error(ErrorCode::MalformedInput, "empty point '" + s + "'");
  return v;
}

Mask parse_firms(const std::string& s) {
  Mask m = 0;
  for (const auto& x : split(s)) {
    std::size_t used = 0;
    int i = -1;
    try {
      i = std::stoi(x, &used);
    } catch (const std::exception&) {
    }
    if (used != x.size() || i < 0 || i >= 32) throw Error(ErrorCode::MalformedInput, "bad firm index '" + x + "'");
    m |= Mask{1} << i;
  }
  return m;
}

Json firm_list(Mask m) { return Json(members(m)); }

Json witness_json(const FractionalCoreWitness& w) {
  return Json{{"point", to_json(w.point)},
              {"base", to_json(w.base)},
              {"level", to_json(w.level)},
              {"firms", firm_list(w.firms)},
              {"weights", to_json(w.weights)}};
}

Json simplex_json(const Simplex& s) { return Json(s); }

SolveOptions solve_options(const Limits& limits, BalanceMode mode = BalanceMode::Cone) {
  SolveOptions o;
  o.firm_cap = limits.firm_cap;
  o.node_cap = limits.node_cap;
  o.mode = mode;
  return o;
}

Json checks_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return checks;
}

Json manifold_json(const ManifoldReport& m) {
  return Json{{"pure", m.pure},       {"ridges_paired", m.ridges_paired}, {"connected", m.connected},
              {"orientable", m.orientable}, {"links_ok", m.links_ok},   {"euler", m.euler},
              {"problems", m.problems}};
}

struct LabeledComplex {
  OrientedComplex complex;
  Labeling labels;
  FirmSystem firms;
};

LabeledComplex load_labeled(const Json& j) {
  if (kind_of(j) != Kind::Complex) throw Error(ErrorCode::MalformedInput, "$: expected a complex document");
  ComplexDocument doc = complex_from_json(j);
  if (!doc.labels) throw Error(ErrorCode::MalformedInput, "$: missing field 'labels'");
  if (!doc.firms) throw Error(ErrorCode::MalformedInput, "$: missing field 'firms'");
  doc.firms->check();
  return {std::move(doc.complex), std::move(*doc.labels), std::move(*doc.firms)};
}

Json degree_json(const DegreeResult& d) {
  if (d.balanced()) return Json{{"verdict", "BalancedSimplexFound"}, {"facet", simplex_json(*d.balanced_facet)}};
  return Json{{"verdict", "Degree"}, {"degree", d.degree}};
}

Json tu_balanced_json(const TUGame& g, const TuBalance& b) {
  Json coalitions = Json::array();
  Json weighted = Json::array();
  for (std::size_t k = 0; k < b.family.coalitions.size(); ++k) {
    coalitions.push_back(coalition_label(b.family.coalitions[k]));
    weighted.push_back(to_json(b.family.weights[k] * g.value(b.family.coalitions[k])));
  }
  return Json{{"verdict", b.balanced ? "Balanced" : "Violated"},
              {"family", coalitions},
              {"weights", to_json(b.family.weights)},
              {"weighted_values", weighted},
              {"value", to_json(b.value)},
              {"grand_value", to_json(g.grand())}};
}

Json frac_json(const FractionalCoreResult& r) {
  Json j{{"verdict", r.nonempty() ? "Nonempty" : "Empty"}, {"nodes", r.nodes}};
  if (r.witness) j["witness"] = witness_json(*r.witness);
  return j;
}

Json verify_json(const GeneralizedGame& g, const Vector& point, Mask firms, BalanceMode mode) {
  Json j{{"point", to_json(point)}, {"firms", firm_list(firms)}};
  const auto w = make_witness(g, firms, point, mode);
  if (!w) {
    j["accepted"] = false;
    j["reason"] = "firm set is not balanced";
    return j;
  }
  const std::string why = verify_witness(g, *w, mode);
  j["accepted"] = why.empty();
  if (!why.empty()) j["reason"] = why;
  j["weights"] = to_json(w->weights);
  return j;
}

Triangulation build_region(const std::string& name, const GeneralizedGame& g, const std::string& scale_text) {
  const int n = static_cast<int>(g.dimension());
  const Rational scale = parse_rational(scale_text);
  if (name == "simplex") return corner_simplex_boundary(n, scale);
  if (name == "cube") return cube_boundary(n, scale);
  if (name == "ball") return cone(cube_boundary(n, scale), zeros(g.dimension()));
  if (name == "hopf") {
    if (n != 5) throw Error(ErrorCode::DimensionMismatch, "the hopf region lives in R^5");
    return hopf_region(hopf_asset());
  }
  throw Error(ErrorCode::MalformedInput, "unknown region '" + name + "'");
}

void check_depth(int depth, const Limits& limits) {
  if (depth < 0 || depth > limits.max_depth) {
    throw Error(ErrorCode::CapExceeded, "depth " + std::to_string(depth) + " exceeds the cap");
  }
}

}  // namespace

Json report(const std::string& command) { return Json{{"schema", kSchema}, {"command", command}}; }

Json run_validate(const Json& input) {
  Json r = report("validate");
  switch (kind_of(input)) {
    case Kind::Game: {
      const ValidationReport v = validate_game(game_from_json(input));
      r["kind"] = "game";
      r["verdict"] = v.ok() ? "Valid" : "Invalid";
      r["checks"] = checks_json(v);
      break;
    }
    case Kind::Ntu: {
      const ValidationReport v = validate_ntu(ntu_game_from_json(input));
      r["kind"] = "ntu";
      r["verdict"] = v.ok() ? "Valid" : "Invalid";
      r["checks"] = checks_json(v);
      break;
    }
    case Kind::Tu: {
      const TUGame g = tu_game_from_json(input);
      r["kind"] = "tu";
      r["verdict"] = "Valid";
      r["checks"] = Json::array({Json{{"name", "values"}, {"passed", true}, {"detail", std::to_string(g.players) + " players"}}});
      break;
    }
    case Kind::Firms: {
      const FirmSystem fs = firms_from_json(input);
      fs.check();
      r["kind"] = "firms";
      r["verdict"] = "Valid";
      r["checks"] = Json::array();
      break;
    }
    case Kind::Complex: {
      const ComplexDocument doc = complex_from_json(input);
      const ManifoldReport m = validate_closed_manifold(doc.complex.complex);
      r["kind"] = "complex";
      r["verdict"] = m.ok() ? "Valid" : "Invalid";
      r["manifold"] = manifold_json(m);
      break;
    }
  }
  return r;
}

Json run_balance(const Json& input, const BalanceArgs& args, const Limits& limits) {
  const FirmSystem fs = kind_of(input) == Kind::Firms ? firms_from_json(input) : load_game(input).firm_system;
  fs.check();
  Json r = report("balance");
  r["verdict"] = "Computed";
  r["mode"] = args.mode == BalanceMode::Cone ? "cone" : "convex";
  const bool any = !args.check.empty() || args.all || args.families > 0 || args.other || args.convexify;
  if (!args.check.empty()) {
    const Mask s = parse_firms(args.check);
    const auto w = balanced_weights(s, fs, args.mode);
    r["check"] = Json{{"firms", firm_list(s)}, {"balanced", w.has_value()}};
    if (w) r["check"]["weights"] = to_json(*w);
  }
  if (args.minimal || !any) {
    Json sets = Json::array();
    for (Mask s : minimal_balanced_sets(fs, args.mode, limits.firm_cap)) sets.push_back(firm_list(s));
    r["minimal"] = sets;
  }
  if (args.all) {
    Json sets = Json::array();
    for (Mask s : enumerate_bs(fs, args.mode, limits.firm_cap)) sets.push_back(firm_list(s));
    r["balanced_sets"] = sets;
  }
  if (args.families > 0) {
    Json fams = Json::array();
    for (const auto& f : minimal_balanced_families(args.families)) {
      Json labels = Json::array();
      for (Mask c : f.coalitions) labels.push_back(coalition_label(c));
      fams.push_back(Json{{"coalitions", labels}, {"weights", to_json(f.weights)}});
    }
    r["families"] = Json{{"players", args.families}, {"count", fams.size()}, {"list", fams}};
  }
  if (args.other) {
    const FirmSystem other =
        kind_of(*args.other) == Kind::Firms ? firms_from_json(*args.other) : load_game(*args.other).firm_system;
    const Equivalence e = bs_equivalent(fs, other, args.mode, limits.firm_cap);
    r["equivalence"] = Json{{"equivalent", e.equivalent}};
    if (e.witness) r["equivalence"]["witness"] = firm_list(*e.witness);
  }
  if (args.convexify) {
    const Convexified c = convexify(fs);
    if (c.system) {
      r["convexified"] = to_json(*c.system);
    } else {
      r["convexified"] = Json{{"offending_firm", *c.offending_firm}};
    }
  }
  return r;
}

Json run_tu_core(const Json& input, const std::string& check_point) {
  const TUGame g = tu_game_from_json(input);
  Json r = report("tu-core");
  const auto x = core_nonempty(g);
  r["verdict"] = x ? "Nonempty" : "Empty";
  if (x) r["point"] = to_json(*x);
  if (!check_point.empty()) {
    const Vector p = parse_point(check_point);
    if (p.size() != static_cast<std::size_t>(g.players)) {
      throw Error(ErrorCode::DimensionMismatch, "check point has " + std::to_string(p.size()) + " entries");
    }
    const CoreCheck c = check_core_point(g, p);
    r["check"] = Json{{"point", to_json(p)}, {"accepted", c.accepted}, {"efficient", c.efficient}};
    if (c.blocking) r["check"]["blocking"] = coalition_label(*c.blocking);
  }
  return r;
}

Json run_tu_balanced(const Json& input, const std::string& method) {
  const TUGame g = tu_game_from_json(input);
  TuBalanceMethod m = TuBalanceMethod::Auto;
  if (method == "enumerate") m = TuBalanceMethod::Enumerate;
  if (method == "dual") m = TuBalanceMethod::DualProgram;
  Json r = report("tu-balanced");
  r.update(tu_balanced_json(g, is_balanced_tu(g, m)));
  return r;
}

Json run_frac_core(const Json& input, const FracArgs& args, const Limits& limits) {
  const GeneralizedGame g = load_game(input);
  SolveOptions o = solve_options(limits, args.mode);
  if (!args.probe_region.empty()) {
    check_depth(args.probe_depth, limits);
    const InducedCover cover = induce_labeling(g, build_region(args.probe_region, g, args.probe_scale), args.probe_depth);
    o.probes = cover_probes(g, cover, args.mode);
  }
  Json r = report("frac-core");
  r.update(frac_json(fractional_core_solve(g, o)));
  if (!args.probe_region.empty()) r["probes"] = o.probes.size();
  if (!args.verify_point.empty()) {
    r["verify"] = verify_json(g, parse_point(args.verify_point), parse_firms(args.verify_firms), args.mode);
  }
  return r;
}

Json run_core(const Json& input, const Limits& limits) {
  const GeneralizedGame g = load_game(input);
  const CoreResult c = core_solve(g, solve_options(limits));
  Json r = report("core");
  r["verdict"] = c.point ? "Nonempty" : "Empty";
  r["nodes"] = c.nodes;
  if (c.point) {
    r["point"] = to_json(*c.point);
    r["verified"] = verify_core_point(g, *c.point);
  }
  return r;
}

Json run_game_balanced(const Json& input, const Limits& limits) {
  const GeneralizedGame g = load_game(input);
  const GameBalance b = is_balanced_game(g, solve_options(limits));
  Json r = report("game-balanced");
  switch (b.status) {
    case GameBalanceStatus::Balanced:
      r["verdict"] = "Balanced";
      break;
    case GameBalanceStatus::Unsupported:
      r["verdict"] = "Unsupported";
      r["reason"] = "the distinguished utility set is not a single primitive";
      break;
    case GameBalanceStatus::Violated:
      r["verdict"] = "Violated";
      r["firms"] = firm_list(b.firms);
      r["point"] = to_json(b.point);
      r["excess"] = b.excess ? to_json(*b.excess) : Json("unbounded");
      break;
  }
  return r;
}

Json run_embed(const Json& input) {
  const Kind k = kind_of(input);
  if (k != Kind::Tu && k != Kind::Ntu) throw Error(ErrorCode::MalformedInput, "$: expected a TU or NTU game");
  Json r = report("embed");
  r["verdict"] = "Computed";
  r["game"] = to_json(load_game(input));
  return r;
}

Json run_induce_cover(const Json& input, const CoverArgs& args, const Limits& limits) {
  const GeneralizedGame g = load_game(input);
  check_depth(args.depth, limits);
  const Triangulation region = build_region(args.region, g, args.scale);
  const InducedCover cover = induce_labeling(g, region, args.depth);
  ComplexDocument doc;
  doc.complex = cover.triangulation.complex;
  doc.has_orientation = true;
  doc.labels = cover.labels;
  doc.positions = cover.triangulation.positions;
  doc.firms = g.firm_system;
  Json r = report("induce-cover");
  r["verdict"] = "Computed";
  r["vertices"] = cover.labels.size();
  r["facets"] = doc.complex.facets().size();
  r["rainbow"] = rainbow_simplices(doc.complex.complex, cover.labels, g.firm_system, BalanceMode::Cone).size();
  r["complex"] = to_json(doc);
  return r;
}

Json run_degree(const Json& input, const std::string& rule) {
  const LabeledComplex lc = load_labeled(input);
  Json r = report("degree");
  r.update(degree_json(pl_degree(lc.complex, lc.labels, lc.firms, rule == "highest" ? ChoiceRule::Highest : ChoiceRule::Lowest)));
  return r;
}

Json run_index_sum(const Json& input) {
  const LabeledComplex lc = load_labeled(input);
  const IndexSum s = index_sum_check(lc.complex, lc.labels, lc.firms);
  Json r = report("index-sum");
  r["verdict"] = s.sum_matches ? "Matches" : "Mismatch";
  r["boundary"] = degree_json(s.boundary_degree);
  Json comps = Json::array();
  for (const auto& c : s.components) {
    Json facets = Json::array();
    for (std::size_t f : c.facets) facets.push_back(simplex_json(lc.complex.facets()[f]));
    comps.push_back(Json{{"facets", facets}, {"index", c.index}});
  }
  r["components"] = comps;
  return r;
}

Json run_rainbow(const Json& input, BalanceMode mode) {
  const LabeledComplex lc = load_labeled(input);
  Json r = report("rainbow");
  Json list = Json::array();
  for (const auto& s : rainbow_simplices(lc.complex.complex, lc.labels, lc.firms, mode)) list.push_back(simplex_json(s));
  r["verdict"] = list.empty() ? "None" : "Found";
  r["mode"] = mode == BalanceMode::Cone ? "cone" : "convex";
  r["count"] = list.size();
  r["facets"] = list;
  return r;
}

Json run_hopf(const HopfArgs& args, const Limits& limits) {
  check_depth(args.depth, limits);
  const HopfAsset& asset = hopf_asset();
  const ManifoldReport m = validate_closed_manifold(asset.complex.complex);
  char hex[32];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(asset.checksum));
  const long h = hopf_invariant(asset.complex, asset.colors);

  Json r = report("hopf");
  r["asset"] = Json{{"version", asset.version},
                    {"vertices", asset.complex.complex.vertices},
                    {"facets", asset.complex.facets().size()},
                    {"checksum", hex},
                    {"valid", m.ok()},
                    {"manifold", manifold_json(m)},
                    {"colors", asset.colors}};
  r["hopf_invariant"] = h;

  const GeneralizedGame g = hopf_game(asset);
  const InducedCover cover = induce_labeling(g, hopf_region(asset), args.depth);
  const auto rainbow = rainbow_simplices(cover.triangulation.complex.complex, cover.labels, g.firm_system, BalanceMode::Cone);
  Json list = Json::array();
  for (const auto& s : rainbow) list.push_back(simplex_json(s));
  r["cover"] = Json{{"region", "cone over the sphere, apex at the origin"},
                    {"depth", args.depth},
                    {"facets", cover.triangulation.complex.facets().size()},
                    {"rainbow_count", list.size()},
                    {"rainbow", list}};
  if (args.solve) {
    SolveOptions o = solve_options(limits);
    o.probes = cover_probes(g, cover);
    const FractionalCoreResult fc = fractional_core_solve(g, o);
    Json f = frac_json(fc);
    f["probes"] = o.probes.size();
    if (fc.witness) f["verified"] = verify_witness(g, *fc.witness).empty();
    r["fractional_core"] = f;
  }
  r["verdict"] = (m.ok() && (h == 1 || h == -1)) ? "Nontrivial" : "Failed";
  return r;
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {"example1", "example1-modified", "example2",
                                                 "symmetric", "bubbles", "hopf"};
  return names;
}

Json example_input(const std::string& name) {
  if (name == "example1") return to_json(example1());
  if (name == "example1-modified") return to_json(example1_modified());
  if (name == "example2") return to_json(example2());
  if (name == "symmetric") return to_json(axis_symmetric_game(3, 1, {Rational(-2, 5), Rational(1, 5), Rational(4, 5)}));
  if (name == "bubbles") {
    const BubbleFixture b = bubble_pair(1, -1);
    ComplexDocument doc;
    doc.complex = b.region.complex;
    doc.has_orientation = true;
    doc.labels = b.labels;
    doc.positions = b.region.positions;
    doc.firms = b.firms;
    return to_json(doc);
  }
  if (name == "hopf") return to_json(hopf_game(hopf_asset()));
  throw Error(ErrorCode::MalformedInput, "unknown example '" + name + "'");
}

Json run_example(const std::string& name, const Limits& limits) {
  Json r = report("examples");
  r["example"] = name;
  if (name == "example1") {
    const TUGame g = example1();
    r["tu_core"] = run_tu_core(to_json(g), "-8,-12,-15");
    r["verdict"] = r["tu_core"]["check"]["accepted"].get<bool>() ? "Reproduced" : "Failed";
  } else if (name == "example1-modified") {
    const TUGame g = example1_modified();
    const Json doc = to_json(g);
    r["tu_core"] = run_tu_core(doc, "");
    r["tu_balanced"] = run_tu_balanced(doc, "auto");
    FracArgs fa;
    fa.verify_point = "-9,-13,-19";
    fa.verify_firms = "3,4,5";
    r["frac_core"] = run_frac_core(doc, fa, limits);
    const bool ok = r["tu_core"]["verdict"] == "Empty" && r["tu_balanced"]["verdict"] == "Violated" &&
                    r["frac_core"]["verdict"] == "Nonempty" && r["frac_core"]["verify"]["accepted"].get<bool>();
    r["verdict"] = ok ? "Reproduced" : "Failed";
  } else if (name == "example2") {
    r["frac_core"] = run_frac_core(to_json(example2()), {}, limits);
    r["verdict"] = r["frac_core"]["verdict"] == "Empty" ? "Reproduced" : "Failed";
  } else if (name == "symmetric") {
    Json cases = Json::array();
    bool ok = true;
    for (int n : {3, 4}) {
      std::vector<Rational> offsets;
      for (int i = 0; i < n; ++i) offsets.emplace_back(3 * i - 2, 5);
      const GeneralizedGame g = axis_symmetric_game(n, 1, offsets);
      const InducedCover cover = induce_labeling(g, cube_boundary(n, 10), 2);
      const DegreeResult d = pl_degree(cover.triangulation.complex, cover.labels, g.firm_system);
      const FractionalCoreResult fc = fractional_core_solve(g, solve_options(limits));
      ok = ok && !d.balanced() && d.degree != 0 && fc.nonempty();
      cases.push_back(Json{{"players", n}, {"sphere_dimension", n - 2}, {"degree", degree_json(d)}, {"frac_core", frac_json(fc)}});
    }
    r["cases"] = cases;
    r["verdict"] = ok ? "Reproduced" : "Failed";
  } else if (name == "bubbles") {
    Json cases = Json::array();
    bool ok = true;
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, -1}}) {
      const BubbleFixture f = bubble_pair(a, b);
      const IndexSum s = index_sum_check(f.region.complex, f.labels, f.firms);
      Json idx = Json::array();
      for (const auto& c : s.components) idx.push_back(c.index);
      ok = ok && s.sum_matches;
      cases.push_back(Json{{"signs", {a, b}}, {"boundary", degree_json(s.boundary_degree)}, {"indices", idx}, {"sum_matches", s.sum_matches}});
    }
    r["cases"] = cases;
    r["verdict"] = ok ? "Reproduced" : "Failed";
  } else if (name == "hopf") {
    r["hopf"] = run_hopf({}, limits);
    const Json& h = r["hopf"];
    const bool ok = h["verdict"] == "Nontrivial" && h["cover"]["rainbow_count"].get<std::size_t>() > 0 &&
                    h["fractional_core"]["verdict"] == "Nonempty";
    r["verdict"] = ok ? "Reproduced" : "Failed";
  } else {
    throw Error(ErrorCode::MalformedInput, "unknown example '" + name + "'");
  }
  return r;
}

}  // namespace coopx::cli
