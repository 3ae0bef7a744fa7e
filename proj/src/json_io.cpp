#include "cx1/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "cx1/errors.hpp"

namespace cx1 {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

std::size_t size_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

int sign_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  long long v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InputError(where + ": integer out of range");
  return static_cast<int>(v);
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    bool digits = s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
    if (!digits) throw InputError(where + ": \"" + s + "\" is not a decimal integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw InputError(where + ": expected an integer");
}

IntVector int_vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of integers");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

IntVector int_vector_from_csv(const std::string& text) {
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in integer list \"" + text + "\"");
    v.push_back(integer_from_json(Json(item.substr(b, e - b + 1)), "integer list"));
  }
  if (v.empty()) throw InputError("empty integer list");
  return v;
}

Json to_json(const WeightSystem& ws) {
  Json out;
  out["n"] = ws.n;
  out["weights"] = Json::array();
  for (const auto& w : ws.weights) out["weights"].push_back(to_json(w));
  if (ws.sign_choice) out["sign_choice"] = *ws.sign_choice;
  return out;
}

WeightSystem weight_system_from_json(const Json& j) {
  WeightSystem ws;
  ws.n = size_from_json(field(j, "n", "weight system"), "weight system n");
  const Json& weights = field(j, "weights", "weight system");
  if (!weights.is_array()) throw InputError("weight system: \"weights\" must be an array");
  for (std::size_t i = 0; i < weights.size(); ++i)
    ws.weights.push_back(int_vector_from_json(weights[i], "weights[" + std::to_string(i) + "]"));
  if (j.contains("sign_choice")) {
    std::vector<int> signs;
    const Json& sc = j["sign_choice"];
    if (!sc.is_array()) throw InputError("weight system: \"sign_choice\" must be an array");
    for (const auto& s : sc) signs.push_back(sign_from_json(s, "sign_choice"));
    ws.sign_choice = signs;
  }
  try {
    ws.check_shape();
  } catch (const DimensionMismatch& e) {
    throw InputError(e.what());
  }
  return ws;
}

Json to_json(const SpongeComplex& s) {
  Json out;
  out["n"] = s.n;
  std::vector<Cell> cells = s.complex.cells();
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.id < b.id; });
  out["cells"] = Json::array();
  out["incidence"] = Json::object();
  for (const auto& c : cells) {
    out["cells"].push_back({{"id", c.id}, {"dim", c.dim}, {"label", c.label}});
    Incidence b = s.complex.boundary(c.id);
    std::sort(b.begin(), b.end());
    Json list = Json::array();
    for (const auto& [f, k] : b) list.push_back(Json::array({f, k}));
    out["incidence"][c.id] = list;
  }
  return out;
}

SpongeComplex sponge_from_json(const Json& j) {
  SpongeComplex s;
  s.n = size_from_json(field(j, "n", "sponge"), "sponge n");
  const Json& cells = field(j, "cells", "sponge");
  if (!cells.is_array()) throw InputError("sponge: \"cells\" must be an array");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = "sponge cells[" + std::to_string(i) + "]";
    std::string id = string_from_json(field(cells[i], "id", where), where + ".id");
    int dim = sign_from_json(field(cells[i], "dim", where), where + ".dim");
    std::string label = cells[i].contains("label") ? string_from_json(cells[i]["label"], where + ".label") : "";
    s.complex.add_cell(id, dim, label);
  }
  if (j.contains("incidence")) {
    const Json& inc = j["incidence"];
    if (!inc.is_object()) throw InputError("sponge: \"incidence\" must be an object");
    for (const auto& [id, list] : inc.items()) {
      if (!s.complex.contains(id)) throw InputError("sponge: incidence for unknown cell " + id);
      if (!list.is_array()) throw InputError("sponge: incidence of " + id + " must be an array");
      Incidence b;
      for (const auto& entry : list) {
        if (!entry.is_array() || entry.size() != 2)
          throw InputError("sponge: incidence entries of " + id + " must be [face, coefficient] pairs");
        b.emplace_back(string_from_json(entry[0], "incidence of " + id), sign_from_json(entry[1], "incidence of " + id));
      }
      s.complex.set_boundary(id, std::move(b));
    }
  }
  return s;
}

Json to_json(const CharacteristicData& cd) {
  Json out;
  out["n"] = cd.n;
  out["sponge"] = to_json(cd.sponge);
  out["mu"] = Json::object();
  for (const auto& [f, v] : cd.mu) out["mu"][f] = to_json(v);
  out["euler_sign"] = Json::object();
  for (const auto& [f, k] : cd.euler_sign) out["euler_sign"][f] = k;
  out["ambient"] = to_string(cd.ambient.kind);
  if (cd.ambient.kind == AmbientKind::product) out["boundary_trivial"] = cd.ambient.boundary_trivial;
  return out;
}

CharacteristicData chardata_from_json(const Json& j) {
  CharacteristicData cd;
  cd.n = size_from_json(field(j, "n", "characteristic data"), "characteristic data n");
  cd.sponge = sponge_from_json(field(j, "sponge", "characteristic data"));
  const Json& mu = field(j, "mu", "characteristic data");
  if (!mu.is_object()) throw InputError("characteristic data: \"mu\" must be an object");
  for (const auto& [f, v] : mu.items()) cd.mu[f] = int_vector_from_json(v, "mu[" + f + "]");
  const Json& es = field(j, "euler_sign", "characteristic data");
  if (!es.is_object()) throw InputError("characteristic data: \"euler_sign\" must be an object");
  for (const auto& [f, v] : es.items()) cd.euler_sign[f] = sign_from_json(v, "euler_sign[" + f + "]");
  cd.ambient.kind = ambient_from_string(string_from_json(field(j, "ambient", "characteristic data"), "ambient"));
  if (j.contains("boundary_trivial")) {
    if (!j["boundary_trivial"].is_boolean()) throw InputError("characteristic data: \"boundary_trivial\" must be a boolean");
    cd.ambient.boundary_trivial = j["boundary_trivial"].get<bool>();
  }
  return cd;
}

Json to_json(const SimplePolytope& P) {
  Json out;
  out["n"] = P.n;
  out["facets"] = P.facets;
  out["vertices"] = P.vertices;
  return out;
}

SimplePolytope polytope_from_json(const Json& j) {
  SimplePolytope P;
  P.n = size_from_json(field(j, "n", "polytope"), "polytope n");
  const Json& facets = field(j, "facets", "polytope");
  if (!facets.is_array()) throw InputError("polytope: \"facets\" must be an array");
  for (const auto& f : facets) P.facets.push_back(string_from_json(f, "polytope facet"));
  const Json& vertices = field(j, "vertices", "polytope");
  if (!vertices.is_array()) throw InputError("polytope: \"vertices\" must be an array");
  for (const auto& v : vertices) {
    if (!v.is_array()) throw InputError("polytope: each vertex must be an array of facet ids");
    std::vector<std::string> ids;
    for (const auto& f : v) ids.push_back(string_from_json(f, "polytope vertex"));
    P.vertices.push_back(ids);
  }
  return P;
}

Json lambda_to_json(const CharacteristicFunction& lambda) {
  Json out = Json::object();
  for (const auto& [f, v] : lambda) out[f] = to_json(v);
  return out;
}

CharacteristicFunction lambda_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("characteristic function: expected an object");
  CharacteristicFunction lambda;
  for (const auto& [f, v] : j.items()) lambda[f] = int_vector_from_json(v, "lambda[" + f + "]");
  return lambda;
}

Json to_json(const EquivalenceWitness& w) {
  Json out;
  out["bijection"] = w.bijection;
  out["orientation"] = w.orientation;
  out["A"] = to_json(w.A);
  out["global_sign"] = w.global_sign;
  return out;
}

Json to_json(const Comparison& c) {
  Json out;
  out["verdict"] = to_string(c.verdict);
  out["certificate"] = c.certificate;
  out["isomorphisms_tried"] = c.isomorphisms_tried;
  out["semantics"] = "relative to cellular equivalence";
  if (c.witness) out["witness"] = to_json(*c.witness);
  return out;
}

Json to_json(const CatalogEntry& e) {
  Json out;
  out["name"] = e.name;
  out["description"] = e.description;
  out["chardata"] = to_json(e.data);
  out["fixed_points"] = Json::array();
  for (const auto& fp : e.fixed_points)
    out["fixed_points"].push_back({{"vertex", fp.vertex}, {"weights", to_json(fp.weights)}, {"edges", fp.edges}});
  out["expected"] = Json::object();
  for (const auto& [k, v] : e.expected) out["expected"][k] = {{"value", v.value}, {"source", v.source}};
  return out;
}

Json results_json(const Report& r) {
  Json out = Json::array();
  for (const auto& f : r.findings())
    out.push_back({{"check", f.check}, {"status", f.passed ? "pass" : "fail"}, {"detail", f.detail}});
  return out;
}

}  // namespace cx1
