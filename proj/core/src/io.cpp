#include "coopx/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "coopx/error.hpp"

namespace coopx {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::MalformedInput, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

long integer_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

}  // namespace

Json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(to_string(q));
}

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(to_json(q));
  return j;
}

Json to_json(const Labeling& labels) {
  Json j = Json::array();
  for (Mask l : labels) j.push_back(members(l));
  return j;
}

Json to_json(const FirmSystem& fs) {
  Json firms = Json::array();
  for (const auto& v : fs.firms) firms.push_back(to_json(v));
  return Json{{"firms", firms}, {"resource", to_json(fs.resource)}};
}

Json to_json(const ComprehensiveSet& u) {
  Json prims = Json::array();
  for (const auto& p : u.primitives()) {
    Json hs = Json::array();
    for (const auto& h : p.halfspaces()) hs.push_back(Json{{"a", to_json(h.normal())}, {"b", to_json(h.offset())}});
    prims.push_back(Json{{"halfspaces", hs}});
  }
  return Json{{"primitives", prims}};
}

Json to_json(const GeneralizedGame& g) {
  Json j;
  j["dimension"] = g.dimension();
  const Json fs = to_json(g.firm_system);
  j["firms"] = fs["firms"];
  j["resource"] = fs["resource"];
  Json us = Json::array();
  for (const auto& u : g.utilities) us.push_back(to_json(u));
  j["utilities"] = us;
  if (g.distinguished) j["distinguished"] = *g.distinguished;
  return j;
}

Json to_json(const TUGame& g) {
  Json values = Json::object();
  for (Mask s : canonical_subsets(g.players)) values[coalition_label(s)] = to_json(g.value(s));
  return Json{{"n", g.players}, {"values", values}};
}

Json to_json(const CoalitionalNTUGame& g) {
  Json sets = Json::object();
  for (Mask s : canonical_subsets(g.players)) {
    auto it = g.sets.find(s);
    if (it != g.sets.end()) sets[coalition_label(s)] = to_json(it->second);
  }
  return Json{{"n", g.players}, {"sets", sets}};
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a \"p/q\" string");
}

Vector vector_from_json(const Json& j, const std::string& path) {
  Vector v;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
    v.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return v;
}

FirmSystem firms_from_json(const Json& j, const std::string& path) {
  FirmSystem fs;
  const Json& firms = array_at(field(j, "firms", path), path + ".firms");
  for (std::size_t i = 0; i < firms.size(); ++i) {
    fs.firms.push_back(vector_from_json(firms[i], path + ".firms[" + std::to_string(i) + "]"));
  }
  fs.resource = vector_from_json(field(j, "resource", path), path + ".resource");
  try {
    fs.check();
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return fs;
}

ComprehensiveSet set_from_json(const Json& j, const std::string& path) {
  std::vector<Primitive> prims;
  const Json& ps = array_at(field(j, "primitives", path), path + ".primitives");
  if (ps.empty()) fail(path + ".primitives", "no primitives");
  for (std::size_t p = 0; p < ps.size(); ++p) {
    const std::string pp = path + ".primitives[" + std::to_string(p) + "]";
    const Json& hs = array_at(field(ps[p], "halfspaces", pp), pp + ".halfspaces");
    if (hs.empty()) fail(pp + ".halfspaces", "no half-spaces");
    std::vector<HalfSpace> halfspaces;
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const std::string hp = pp + ".halfspaces[" + std::to_string(k) + "]";
      try {
        halfspaces.emplace_back(vector_from_json(field(hs[k], "a", hp), hp + ".a"),
                                rational_from_json(field(hs[k], "b", hp), hp + ".b"));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::MalformedInput) throw;
        fail(hp, e.what());
      }
    }
    try {
      prims.emplace_back(std::move(halfspaces));
    } catch (const Error& e) {
      fail(pp, e.what());
    }
  }
  try {
    return ComprehensiveSet(std::move(prims));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

GeneralizedGame game_from_json(const Json& j, const std::string& path) {
  GeneralizedGame g;
  const long n = integer_from_json(field(j, "dimension", path), path + ".dimension");
  g.firm_system = firms_from_json(j, path);
  const Json& us = array_at(field(j, "utilities", path), path + ".utilities");
  for (std::size_t i = 0; i < us.size(); ++i) {
    const std::string up = path + ".utilities[" + std::to_string(i) + "]";
    g.utilities.push_back(set_from_json(us[i], up));
    if (static_cast<long>(g.utilities.back().dimension()) != n) fail(up, "dimension differs from 'dimension'");
  }
  if (j.contains("distinguished")) {
    const long d = integer_from_json(j["distinguished"], path + ".distinguished");
    if (d < 0) fail(path + ".distinguished", "negative index");
    g.distinguished = static_cast<std::size_t>(d);
  }
  try {
    g.check();
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return g;
}

TUGame tu_game_from_json(const Json& j, const std::string& path) {
  const long n = integer_from_json(field(j, "n", path), path + ".n");
  if (n < 1 || n > 20) fail(path + ".n", "player count outside 1..20");
  TUGame g(static_cast<int>(n));
  const Json& values = field(j, "values", path);
  if (!values.is_object()) fail(path + ".values", "expected an object");
  std::vector<bool> seen(std::size_t{full_mask(g.players)} + 1, false);
  for (const auto& [key, value] : values.items()) {
    const std::string vp = path + ".values[\"" + key + "\"]";
    Mask s = 0;
    try {
      s = parse_coalition_label(key, g.players);
    } catch (const Error& e) {
      fail(vp, e.what());
    }
    g.value(s) = rational_from_json(value, vp);
    seen[s] = true;
  }
  for (Mask s = 1; s <= full_mask(g.players); ++s) {
    if (!seen[s]) fail(path + ".values", "missing coalition " + coalition_label(s));
  }
  return g;
}

CoalitionalNTUGame ntu_game_from_json(const Json& j, const std::string& path) {
  CoalitionalNTUGame g;
  const long n = integer_from_json(field(j, "n", path), path + ".n");
  if (n < 1 || n > 20) fail(path + ".n", "player count outside 1..20");
  g.players = static_cast<int>(n);
  const Json& sets = field(j, "sets", path);
  if (!sets.is_object()) fail(path + ".sets", "expected an object");
  for (const auto& [key, value] : sets.items()) {
    const std::string sp = path + ".sets[\"" + key + "\"]";
    Mask s = 0;
    try {
      s = parse_coalition_label(key, g.players);
    } catch (const Error& e) {
      fail(sp, e.what());
    }
    ComprehensiveSet u = set_from_json(value, sp);
    if (u.dimension() != static_cast<std::size_t>(popcount(s))) fail(sp, "dimension must equal the coalition size");
    g.sets.emplace(s, std::move(u));
  }
  return g;
}

Json to_json(const ComplexDocument& doc) {
  Json j;
  j["vertices"] = doc.complex.complex.vertices;
  j["facets"] = doc.complex.complex.facets;
  if (doc.has_orientation) j["orientation"] = doc.complex.orientation;
  if (doc.labels) j["labels"] = to_json(*doc.labels);
  if (!doc.positions.empty()) {
    Json ps = Json::array();
    for (const auto& p : doc.positions) ps.push_back(to_json(p));
    j["positions"] = ps;
  }
  if (doc.firms) {
    const Json fs = to_json(*doc.firms);
    j["firms"] = fs["firms"];
    j["resource"] = fs["resource"];
  }
  return j;
}

ComplexDocument complex_from_json(const Json& j, const std::string& path) {
  ComplexDocument doc;
  const long v = integer_from_json(field(j, "vertices", path), path + ".vertices");
  if (v < 1) fail(path + ".vertices", "expected a positive vertex count");
  const Json& fs = array_at(field(j, "facets", path), path + ".facets");
  std::vector<std::vector<int>> facets;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string fp = path + ".facets[" + std::to_string(i) + "]";
    std::vector<int> f;
    for (std::size_t k = 0; k < array_at(fs[i], fp).size(); ++k) {
      const long x = integer_from_json(fs[i][k], fp + "[" + std::to_string(k) + "]");
      if (x < 0 || x >= v) fail(fp, "vertex index out of range");
      f.push_back(static_cast<int>(x));
    }
    facets.push_back(std::move(f));
  }
  std::vector<int> signs;
  if (j.contains("orientation")) {
    doc.has_orientation = true;
    const Json& os = array_at(j["orientation"], path + ".orientation");
    for (std::size_t i = 0; i < os.size(); ++i) {
      const long s = integer_from_json(os[i], path + ".orientation[" + std::to_string(i) + "]");
      if (s != 1 && s != -1) fail(path + ".orientation[" + std::to_string(i) + "]", "expected 1 or -1");
      signs.push_back(static_cast<int>(s));
    }
    if (signs.size() != facets.size()) fail(path + ".orientation", "one sign per facet required");
  }
  try {
    doc.complex = make_oriented(static_cast<int>(v), facets, signs);
    if (!doc.has_orientation) {
      if (auto coherent = coherent_orientation(doc.complex.complex)) doc.complex.orientation = std::move(*coherent);
    }
  } catch (const Error& e) {
    fail(path + ".facets", e.what());
  }
  if (j.contains("labels")) {
    const Json& ls = array_at(j["labels"], path + ".labels");
    if (static_cast<long>(ls.size()) != v) fail(path + ".labels", "one label list per vertex required");
    Labeling labels;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const std::string lp = path + ".labels[" + std::to_string(i) + "]";
      Mask m = 0;
      for (std::size_t k = 0; k < array_at(ls[i], lp).size(); ++k) {
        const long f = integer_from_json(ls[i][k], lp + "[" + std::to_string(k) + "]");
        if (f < 0 || f >= 32) fail(lp, "firm index outside 0..31");
        m |= Mask{1} << f;
      }
      labels.push_back(m);
    }
    doc.labels = std::move(labels);
  }
  if (j.contains("positions")) {
    const Json& ps = array_at(j["positions"], path + ".positions");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      doc.positions.push_back(vector_from_json(ps[i], path + ".positions[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("firms")) doc.firms = firms_from_json(j, path);
  return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("JSON syntax: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace coopx
