#include "cylo/document.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace cylo {

namespace {

using Json = nlohmann::ordered_json;

// ---- serialization ----------------------------------------------------

Json pair_list(const std::vector<Bitset>& rows) {
  Json out = Json::array();
  for (std::size_t x = 0; x < rows.size(); ++x)
    rows[x].for_each([&](int y) { out.push_back(Json::array({x, y})); });
  return out;
}

Json id_list(const Bitset& s) {
  Json out = Json::array();
  s.for_each([&](int x) { out.push_back(x); });
  return out;
}

Json algebra_payload(const CylindricOrtholattice& A) {
  Json j;
  j["name"] = A.name;
  j["elements"] = A.lat.names();
  Json covers = Json::array();
  for (auto [a, b] : A.lat.cover_pairs()) covers.push_back(Json::array({a, b}));
  j["covers"] = std::move(covers);
  j["ocomp"] = A.ocomp;
  j["exists"] = A.exists;
  j["delta"] = A.delta;
  j["boolean"] = A.boolean_axiom5;
  return j;
}

Json frame_payload(const CylindricOrthoFrame& X) {
  Json j;
  j["name"] = X.name;
  j["points"] = X.points;
  j["perp"] = pair_list(X.perp);
  Json rels = Json::array();
  for (const auto& rel : X.rels) rels.push_back(pair_list(rel));
  j["rels"] = std::move(rels);
  Json deltas = Json::array();
  for (const auto& row : X.deltas) {
    Json r = Json::array();
    for (const auto& d : row) r.push_back(id_list(d));
    deltas.push_back(std::move(r));
  }
  j["deltas"] = std::move(deltas);
  return j;
}

Json space_payload(const FiniteSpace& X) {
  Json j;
  j["name"] = X.name;
  j["points"] = X.points;
  Json basis = Json::array();
  for (const auto& b : X.basis) basis.push_back(id_list(b));
  j["basis"] = std::move(basis);
  if (X.has_perp()) j["perp"] = pair_list(X.perp);
  if (X.dims() > 0) {
    Json rels = Json::array();
    for (const auto& rel : X.rels) rels.push_back(pair_list(rel));
    j["rels"] = std::move(rels);
    Json deltas = Json::array();
    for (const auto& row : X.deltas) {
      Json r = Json::array();
      for (const auto& d : row) r.push_back(id_list(d));
      deltas.push_back(std::move(r));
    }
    j["deltas"] = std::move(deltas);
  }
  return j;
}

std::string envelope(const char* kind, Json payload) {
  Json j;
  j["format"] = "cylo/1";
  j["kind"] = kind;
  j[kind] = std::move(payload);
  return j.dump(2) + "\n";
}

// ---- parsing ----------------------------------------------------------

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string get_string(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<std::string> get_names(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array() || v.empty()) bad(std::string("\"") + key + "\" must be a nonempty array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) bad(std::string("\"") + key + "\" must contain strings");
    out.push_back(e.get<std::string>());
  }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (out[a] == out[b]) bad(std::string("duplicate name \"") + out[a] + "\" in \"" + key + "\"");
  return out;
}

int get_id(const Json& v, int n, const char* what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer id");
  int x = v.get<int>();
  if (x < 0 || x >= n) bad(std::string(what) + " id " + std::to_string(x) + " is out of range");
  return x;
}

std::vector<std::pair<int, int>> get_pairs(const Json& v, int n, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2) bad(std::string(what) + " must contain [x, y] pairs");
    out.emplace_back(get_id(e[0], n, what), get_id(e[1], n, what));
  }
  return out;
}

std::vector<Bitset> rows_from_pairs(const Json& v, int n, const char* what) {
  std::vector<Bitset> rows(n, Bitset(n));
  for (auto [x, y] : get_pairs(v, n, what)) rows[x].set(y);
  return rows;
}

Bitset set_from_ids(const Json& v, int n, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array of point ids");
  Bitset s(n);
  for (const auto& e : v) s.set(get_id(e, n, what));
  return s;
}

std::vector<int> get_table(const Json& v, std::size_t len, int range, const char* what) {
  if (!v.is_array() || v.size() != len)
    bad(std::string(what) + " must be an array of " + std::to_string(len) + " ids");
  std::vector<int> out;
  for (const auto& e : v) out.push_back(get_id(e, range, what));
  return out;
}

CylindricOrtholattice parse_algebra(const Json& j) {
  if (!j.is_object()) bad("algebra payload must be an object");
  CylindricOrtholattice A;
  A.name = get_string(j, "name");
  std::vector<std::string> names = get_names(j, "elements");
  const int n = static_cast<int>(names.size());
  A.lat = Lattice(std::move(names), get_pairs(field(j, "covers"), n, "covers"));
  A.ocomp = get_table(field(j, "ocomp"), n, n, "ocomp");
  if (j.contains("exists")) {
    const Json& ex = j.at("exists");
    if (!ex.is_array()) bad("\"exists\" must be an array of quantifier tables");
    for (const auto& row : ex) A.exists.push_back(get_table(row, n, n, "exists"));
  }
  const int m = A.dims();
  if (j.contains("delta")) {
    const Json& de = j.at("delta");
    if (!de.is_array() || static_cast<int>(de.size()) != m)
      bad("\"delta\" must be a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
    for (const auto& row : de) A.delta.push_back(get_table(row, m, n, "delta"));
  } else if (m > 0) {
    bad("\"delta\" is required when quantifiers are present");
  }
  if (j.contains("boolean")) {
    if (!j.at("boolean").is_boolean()) bad("\"boolean\" must be a boolean");
    A.boolean_axiom5 = j.at("boolean").get<bool>();
  }
  return A;
}

void parse_decorated_rels(const Json& j, int n, std::vector<std::vector<Bitset>>& rels,
                          std::vector<std::vector<Bitset>>& deltas, bool required) {
  const bool has_rels = j.contains("rels");
  const bool has_deltas = j.contains("deltas");
  if (!has_rels && !has_deltas && !required) return;
  if (!has_rels || !has_deltas) bad("\"rels\" and \"deltas\" must be given together");
  const Json& jr = j.at("rels");
  if (!jr.is_array()) bad("\"rels\" must be an array of relations");
  for (const auto& rel : jr) rels.push_back(rows_from_pairs(rel, n, "rels"));
  const int m = static_cast<int>(rels.size());
  const Json& jd = j.at("deltas");
  if (!jd.is_array() || static_cast<int>(jd.size()) != m)
    bad("\"deltas\" must be a " + std::to_string(m) + "x" + std::to_string(m) +
        " matrix of point sets");
  for (const auto& row : jd) {
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      bad("\"deltas\" must be a " + std::to_string(m) + "x" + std::to_string(m) +
          " matrix of point sets");
    std::vector<Bitset> r;
    for (const auto& d : row) r.push_back(set_from_ids(d, n, "deltas"));
    deltas.push_back(std::move(r));
  }
}

CylindricOrthoFrame parse_frame(const Json& j) {
  if (!j.is_object()) bad("frame payload must be an object");
  CylindricOrthoFrame X;
  X.name = get_string(j, "name");
  X.points = get_names(j, "points");
  const int n = X.n();
  X.perp = rows_from_pairs(field(j, "perp"), n, "perp");
  parse_decorated_rels(j, n, X.rels, X.deltas, true);
  return X;
}

FiniteSpace parse_space(const Json& j, const Limits& lim) {
  if (!j.is_object()) bad("space payload must be an object");
  std::string name = get_string(j, "name");
  std::vector<std::string> points = get_names(j, "points");
  const int n = static_cast<int>(points.size());
  const Json& jb = field(j, "basis");
  if (!jb.is_array()) bad("\"basis\" must be an array of point sets");
  std::vector<Bitset> basis;
  for (const auto& b : jb) basis.push_back(set_from_ids(b, n, "basis"));
  FiniteSpace X = make_space(std::move(name), std::move(points), std::move(basis), lim);
  if (j.contains("perp")) X.perp = rows_from_pairs(j.at("perp"), n, "perp");
  parse_decorated_rels(j, n, X.rels, X.deltas, false);
  return X;
}

AlgebraHom parse_hom(const Json& j) {
  if (!j.is_object()) bad("hom payload must be an object");
  AlgebraHom h;
  h.name = get_string(j, "name");
  h.source = parse_algebra(field(j, "source"));
  h.target = parse_algebra(field(j, "target"));
  h.map = get_table(field(j, "map"), h.source.size(), h.target.size(), "map");
  return h;
}

SpaceMap parse_map(const Json& j, const Limits& lim) {
  if (!j.is_object()) bad("map payload must be an object");
  SpaceMap f;
  f.name = get_string(j, "name");
  f.source = parse_space(field(j, "source"), lim);
  f.target = parse_space(field(j, "target"), lim);
  f.map = get_table(field(j, "points"), f.source.n(), f.target.n(), "points");
  return f;
}

}  // namespace

std::string to_json(const CylindricOrtholattice& A) { return envelope("algebra", algebra_payload(A)); }
std::string to_json(const CylindricOrthoFrame& X) { return envelope("frame", frame_payload(X)); }
std::string to_json(const FiniteSpace& X) { return envelope("space", space_payload(X)); }

std::string to_json(const AlgebraHom& h) {
  Json j;
  j["name"] = h.name;
  j["source"] = algebra_payload(h.source);
  j["target"] = algebra_payload(h.target);
  j["map"] = h.map;
  return envelope("hom", std::move(j));
}

std::string to_json(const SpaceMap& f) {
  Json j;
  j["name"] = f.name;
  j["source"] = space_payload(f.source);
  j["target"] = space_payload(f.target);
  j["points"] = f.map;
  return envelope("map", std::move(j));
}

std::string to_json(const Document& doc) {
  return std::visit([](const auto& x) { return to_json(x); }, doc);
}

const char* kind_of(const Document& doc) {
  struct Visitor {
    const char* operator()(const CylindricOrtholattice&) const { return "algebra"; }
    const char* operator()(const CylindricOrthoFrame&) const { return "frame"; }
    const char* operator()(const FiniteSpace&) const { return "space"; }
    const char* operator()(const AlgebraHom&) const { return "hom"; }
    const char* operator()(const SpaceMap&) const { return "map"; }
  };
  return std::visit(Visitor{}, doc);
}

Document parse_document(const std::string& text, const Limits& lim) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("document must be a JSON object");
  if (get_string(j, "format") != "cylo/1") bad("unsupported format; expected \"cylo/1\"");
  std::string kind = get_string(j, "kind");
  if (kind == "algebra") return parse_algebra(field(j, "algebra"));
  if (kind == "frame") return parse_frame(field(j, "frame"));
  if (kind == "space") return parse_space(field(j, "space"), lim);
  if (kind == "hom") return parse_hom(field(j, "hom"));
  if (kind == "map") return parse_map(field(j, "map"), lim);
  bad("unknown kind \"" + kind + "\"");
}

Document load_document(const std::string& path, const Limits& lim) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), lim);
}

}  // namespace cylo
