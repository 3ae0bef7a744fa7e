#include "cx1/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <set>

#include "cx1/errors.hpp"
#include "cx1/json_io.hpp"
#include "cx1/quasitoric.hpp"

namespace cx1 {

namespace {

constexpr std::size_t kMaxLocalModel = 8;

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string edge_id(const std::string& a, const std::string& b) { return a < b ? a + "-" + b : b + "-" + a; }

void add_prefixed(Report& out, const Report& in, const std::string& prefix) {
  for (const auto& f : in.findings()) {
    if (f.passed) out.pass(prefix + f.check, f.detail);
    else out.fail(prefix + f.check, f.detail);
  }
}

// --- G(2,4): octahedron with three equatorial squares ----------------------

struct Octahedron {
  // Vertex ids p1, m1, p2, m2, p3, m3 for +e_i and -e_i.
  static std::string id(int axis, int sign) { return std::string(sign > 0 ? "p" : "m") + std::to_string(axis); }
  static IntVector point(int axis, int sign) {
    IntVector v(3, Integer(0));
    v[static_cast<std::size_t>(axis - 1)] = sign;
    return v;
  }
};

IntVector octahedron_point(const std::string& id) {
  return Octahedron::point(id[1] - '0', id[0] == 'p' ? 1 : -1);
}

}  // namespace

CatalogEntry g42_entry() {
  CatalogEntry e;
  e.name = "g42";
  e.description =
      "T^3 acting on the Grassmannian G(2,4); sponge = boundary of the octahedron with three equatorial squares";

  std::vector<std::string> vertices;
  for (int axis = 1; axis <= 3; ++axis)
    for (int sign : {1, -1}) vertices.push_back(Octahedron::id(axis, sign));

  std::vector<std::pair<std::string, std::vector<std::string>>> polygons;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) {
        std::string a = Octahedron::id(1, s1), b = Octahedron::id(2, s2), c = Octahedron::id(3, s3);
        polygons.push_back({"t-" + a + b + c, {a, b, c}});
      }
  for (int k = 1; k <= 3; ++k) {
    int i = k % 3 + 1, j = i % 3 + 1;
    polygons.push_back({"s" + std::to_string(k),
                        {Octahedron::id(i, 1), Octahedron::id(j, 1), Octahedron::id(i, -1), Octahedron::id(j, -1)}});
  }

  CharacteristicData& cd = e.data;
  cd.n = 4;
  cd.sponge.n = 4;
  cd.sponge.complex = complex_from_polygons(vertices, polygons);
  cd.ambient.kind = AmbientKind::sphere;
  cd.ambient.note = "S^5";

  // Tangent weights: edge directions u - v towards the four neighbours, in
  // cyclic order +e_i, +e_j, -e_i, -e_j with (k, i, j) a cyclic rotation.
  for (int k = 1; k <= 3; ++k)
    for (int sign : {1, -1}) {
      int i = k % 3 + 1, j = i % 3 + 1;
      const IntVector v = Octahedron::point(k, sign);
      FixedPoint fp;
      fp.vertex = Octahedron::id(k, sign);
      std::vector<IntVector> weights;
      for (auto [axis, s] : {std::pair{i, 1}, std::pair{j, 1}, std::pair{i, -1}, std::pair{j, -1}}) {
        weights.push_back(added(Octahedron::point(axis, s), negated(v)));
        fp.edges.push_back(edge_id(fp.vertex, Octahedron::id(axis, s)));
      }
      fp.weights = make_weight_system(weights);
      e.charts.push_back(fp);
      e.fixed_points.push_back({fp.vertex, fp.weights, {}});
    }

  // The weights generate an index-2 sublattice of Z^3; mu lives in the dual of
  // that lattice, written in its Hermite basis.
  std::vector<IntVector> directions;
  for (const auto& fp : e.charts) directions.insert(directions.end(), fp.weights.weights.begin(), fp.weights.weights.end());
  const IntMatrix basis = hermite_normal_form(IntMatrix::from_rows(directions, 3));
  auto coords = [&](const IntVector& d) {
    IntVector x;
    if (!coordinates_in_lattice(basis, d, x)) throw ConsistencyError("g42: edge direction outside the weight lattice");
    return x;
  };
  for (const auto& [pid, cycle] : polygons) {
    const IntVector v0 = octahedron_point(cycle.front());
    IntVector d1 = coords(added(octahedron_point(cycle[1]), negated(v0)));
    IntVector d2 = coords(added(octahedron_point(cycle.back()), negated(v0)));
    auto kernel = integer_kernel(IntMatrix::from_rows({d1, d2}, 3));
    if (kernel.size() != 1) throw ConsistencyError("g42: face " + pid + " does not span a plane");
    cd.mu[pid] = kernel.front();
  }
  auto signs = solve_facet_signs(cd.sponge, cd.mu);
  if (!signs) throw ConsistencyError("g42: no Euler signs make the Euler chain a cycle");
  cd.euler_sign = *signs;

  e.expected["fixed_points"] = {"6", "published"};
  e.expected["strictly_appropriate"] = {"true", "published"};
  e.expected["sponge_valid"] = {"true", "published"};
  e.expected["ambient"] = {"sphere", "published"};
  e.expected["cramer_c"] = {"(1,-1,1,-1)", "derived"};
  e.expected["cells_per_dim"] = {"6,12,11", "derived"};
  e.expected["betti"] = {"1,0,4", "derived"};
  e.expected["sigma_cycle"] = {"true", "derived"};
  e.expected["stars_valid"] = {"true", "derived"};
  return e;
}

CatalogEntry f3_entry() {
  CatalogEntry e;
  e.name = "f3";
  e.description =
      "T^2 acting on the flag manifold F_3; sponge = K_{3,3} as the 1-skeleton of three hexagons on a torus";

  const std::vector<std::string> a{"a0", "a1", "a2"};
  const std::vector<std::string> b{"b0", "b1", "b2"};
  std::vector<std::string> vertices(a);
  vertices.insert(vertices.end(), b.begin(), b.end());
  std::vector<std::pair<std::string, std::vector<std::string>>> hexagons;
  for (std::size_t t = 0; t < 3; ++t)
    hexagons.push_back({"H" + std::to_string(t), {a[0], b[t], a[1], b[(t + 1) % 3], a[2], b[(t + 2) % 3]}});
  const CellComplex torus = complex_from_polygons(vertices, hexagons);

  CharacteristicFunction lambda;
  for (std::size_t t = 0; t < 3; ++t) {
    IntVector v(3, Integer(0));
    v[t] = 1;
    lambda[hexagons[t].first] = v;
  }
  const SubtorusChoice st = make_subtorus(make_vector({1, 1, 1}));
  e.data = cell_manifold_data(torus, 3, lambda, st);

  // Charts from the induced weights at each vertex, hexagons in sorted order.
  std::map<std::string, std::set<std::string>> hexagons_at;
  for (const auto& [hid, cycle] : hexagons)
    for (const auto& g : torus.closure(hid)) hexagons_at[g].insert(hid);
  for (const auto& v : vertices) {
    std::vector<std::string> tops(hexagons_at[v].begin(), hexagons_at[v].end());
    std::vector<IntVector> rows;
    for (const auto& t : tops) rows.push_back(lambda.at(t));
    FixedPoint fp;
    fp.vertex = v;
    fp.weights = induced_weights(rows, st.alpha_t);
    for (std::size_t k = 0; k < tops.size(); ++k) {
      std::set<std::string> others(tops.begin(), tops.end());
      others.erase(tops[k]);
      for (const auto& edge : torus.cofaces(v))
        if (hexagons_at[edge] == others) fp.edges.push_back(edge);
    }
    e.charts.push_back(fp);
  }

  // Tangent weights at the permutation flags: w(e_i - e_j) for i < j in the
  // root basis e1 - e2, e2 - e3. Even permutations sit at a0..a2.
  const std::vector<std::vector<int>> perms{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}};
  for (std::size_t p = 0; p < perms.size(); ++p) {
    std::vector<IntVector> weights;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      IntVector x(3, Integer(0));
      x[static_cast<std::size_t>(perms[p][static_cast<std::size_t>(i)] - 1)] += 1;
      x[static_cast<std::size_t>(perms[p][static_cast<std::size_t>(j)] - 1)] -= 1;
      weights.push_back(IntVector{x[0], -x[2]});
    }
    e.fixed_points.push_back({vertices[p], make_weight_system(weights), {}});
  }

  e.expected["fixed_points"] = {"6", "published"};
  e.expected["strictly_appropriate"] = {"true", "published"};
  e.expected["ambient"] = {"product", "published"};
  e.expected["cramer_c"] = {"(1,-1,1)", "derived"};
  e.expected["sponge_valid"] = {"true", "derived"};
  e.expected["cells_per_dim"] = {"6,9", "derived"};
  e.expected["betti"] = {"1,4", "derived"};
  e.expected["sigma_cycle"] = {"true", "derived"};
  e.expected["stars_valid"] = {"true", "derived"};
  return e;
}

CatalogEntry cp3_reduction_entry() {
  CatalogEntry e;
  e.name = "cp3-reduction";
  e.description = "CP^3 over the 3-simplex restricted to the subtorus ker (1,1,-1)";
  const SimplePolytope P = simplex_polytope(3);
  CharacteristicFunction lambda{{"1", make_vector({1, 0, 0})},
                                {"2", make_vector({0, 1, 0})},
                                {"3", make_vector({0, 0, 1})},
                                {"4", make_vector({-1, -1, -1})}};
  const SubtorusChoice st = make_subtorus(make_vector({1, 1, -1}));
  e.data = reduce(P, lambda, st);

  auto name = [&](const std::vector<std::size_t>& fs) {
    std::vector<std::string> ids;
    for (auto f : fs) ids.push_back(P.facets[f]);
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i];
    return s + "}";
  };
  for (std::size_t v = 0; v < P.vertices.size(); ++v) {
    auto fs = P.vertex_facets(v);
    std::vector<IntVector> rows;
    for (auto f : fs) rows.push_back(lambda.at(P.facets[f]));
    FixedPoint fp;
    fp.vertex = name(fs);
    fp.weights = induced_weights(rows, st.alpha_t);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      auto rest = fs;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      fp.edges.push_back(name(rest));
    }
    e.charts.push_back(fp);
    e.fixed_points.push_back(fp);
  }

  e.expected["fixed_points"] = {"4", "derived"};
  e.expected["strictly_appropriate"] = {"true", "derived"};
  e.expected["ambient"] = {"sphere", "derived"};
  e.expected["sponge_valid"] = {"true", "derived"};
  e.expected["cells_per_dim"] = {"4,6", "derived"};
  e.expected["betti"] = {"1,3", "derived"};
  e.expected["sigma_cycle"] = {"true", "derived"};
  e.expected["stars_valid"] = {"true", "derived"};
  return e;
}

CatalogEntry local_model_entry(std::size_t n) {
  if (n < 2 || n > kMaxLocalModel) throw LookupError("local-model-" + std::to_string(n) + ": n must be in 2.." +
                                                     std::to_string(kMaxLocalModel));
  CatalogEntry e;
  e.name = "local-model-" + std::to_string(n);
  e.description = "(n-2)-skeleton of the A_{n-1} fan with the standard weights, n = " + std::to_string(n);
  std::vector<IntVector> weights;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector w(n - 1, Integer(0));
    w[i] = 1;
    weights.push_back(w);
  }
  weights.push_back(IntVector(n - 1, Integer(-1)));
  WeightSystem ws = make_weight_system(weights);
  e.data = local_characteristic_data(ws);

  FixedPoint fp;
  fp.vertex = LocalModel::face_id({});
  fp.weights = ws;
  if (n >= 3)
    for (std::size_t k = 0; k < n; ++k) fp.edges.push_back(LocalModel::face_id({k}));
  e.charts.push_back(fp);
  e.fixed_points.push_back(fp);

  std::vector<std::size_t> counts;
  for (std::size_t k = 0; k + 2 <= n; ++k) counts.push_back(binomial(n, k));
  e.expected["cells_per_dim"] = {join(counts), "derived"};
  e.expected["cramer_c"] = {to_string(IntVector(n, Integer(1))), "trivial"};
  e.expected["strictly_appropriate"] = {"true", "trivial"};
  e.expected["sponge_valid"] = {"true", "derived"};
  e.expected["sigma_cycle"] = {"true", "derived"};
  e.expected["stars_valid"] = {"true", "derived"};
  return e;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names{"g42", "f3", "cp3-reduction"};
  for (std::size_t n = 2; n <= kMaxLocalModel; ++n) names.push_back("local-model-" + std::to_string(n));
  return names;
}

CatalogEntry load(const std::string& name) {
  if (const char* dir = std::getenv("CX1_CATALOG_PATH"); dir && *dir) {
    std::filesystem::path file = std::filesystem::path(dir) / (name + ".json");
    if (std::filesystem::exists(file)) {
      CatalogEntry e;
      e.name = name;
      e.description = "loaded from " + file.string();
      e.data = chardata_from_json(read_json_file(file.string()));
      return e;
    }
  }
  if (name == "g42") return g42_entry();
  if (name == "f3") return f3_entry();
  if (name == "cp3-reduction") return cp3_reduction_entry();
  const std::string prefix = "local-model-";
  if (name.rfind(prefix, 0) == 0) {
    const std::string digits = name.substr(prefix.size());
    if (!digits.empty() && digits.size() <= 2 && digits.find_first_not_of("0123456789") == std::string::npos)
      return local_model_entry(std::stoul(digits));
  }
  throw LookupError("unknown catalog entry '" + name + "'");
}

bool chart_agrees(const CharacteristicData& cd, const FixedPoint& fp, std::string& reason) {
  const std::size_t n = cd.n;
  if (fp.weights.n != n) {
    reason = "weight system has n = " + std::to_string(fp.weights.n);
    return false;
  }
  if (n >= 3 && fp.edges.size() != n) {
    reason = "expected " + std::to_string(n) + " edges";
    return false;
  }
  const auto& cx = cd.sponge.complex;
  if (!cx.contains(fp.vertex) || cx.cell(fp.vertex).dim != 0) {
    reason = fp.vertex + " is not a 0-cell";
    return false;
  }
  const CharacteristicData local = local_characteristic_data(fp.weights);
  const LocalModel model = local_model(n);
  const std::set<std::string> star = cx.upper_set(fp.vertex);
  if (star.size() != model.faces.size()) {
    reason = "star of " + fp.vertex + " has " + std::to_string(star.size()) + " cells, local model has " +
             std::to_string(model.faces.size());
    return false;
  }

  // Local face I goes to the cell of dim |I| in the star containing the edges in I.
  std::map<std::string, std::string> phi;
  std::set<std::string> image;
  for (const auto& face : model.faces) {
    std::string match;
    if (face.empty()) {
      match = fp.vertex;
    } else {
      for (const auto& c : star) {
        if (cx.cell(c).dim != static_cast<int>(face.size())) continue;
        auto closure = cx.closure(c);
        bool all = std::all_of(face.begin(), face.end(), [&](std::size_t k) { return closure.count(fp.edges[k]) > 0; });
        if (all) {
          if (!match.empty()) {
            reason = "two cells at " + fp.vertex + " contain the edges " + LocalModel::face_id(face);
            return false;
          }
          match = c;
        }
      }
    }
    if (match.empty() || !image.insert(match).second) {
      reason = "no distinct cell at " + fp.vertex + " for local face " + LocalModel::face_id(face);
      return false;
    }
    phi[LocalModel::face_id(face)] = match;
  }

  // Orientation signs o with inc_global(phi I, phi J) = o(I) o(J) inc_local(I, J).
  const auto& lx = local.sponge.complex;
  std::map<std::string, int> o;
  std::deque<std::string> queue;
  const std::string root = LocalModel::face_id({});
  o[root] = 1;
  queue.push_back(root);
  std::map<std::string, std::vector<std::string>> up;
  for (const auto& c : lx.cells())
    for (const auto& [f, k] : lx.boundary(c.id)) up[f].push_back(c.id);
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    for (const auto& next : up[cur]) {
      int want = o[cur] * lx.incidence(next, cur) * cx.incidence(phi[next], phi[cur]);
      if (want == 0) {
        reason = "incidence between " + phi[next] + " and " + phi[cur] + " missing";
        return false;
      }
      auto it = o.find(next);
      if (it == o.end()) {
        o[next] = want;
        queue.push_back(next);
      } else if (it->second != want) {
        reason = "cell orientations at " + fp.vertex + " are inconsistent with the local model";
        return false;
      }
    }
  }

  int global = 0;
  for (const auto& f : local.sponge.facets()) {
    const std::string& g = phi[f];
    IntVector lhs = scaled(cd.mu.at(g), Integer(cd.euler_sign.at(g)));
    IntVector rhs = scaled(local.mu.at(f), Integer(local.euler_sign.at(f) * o[f]));
    int s = 0;
    if (lhs == rhs) s = 1;
    else if (lhs == negated(rhs)) s = -1;
    if (s == 0 || (global != 0 && s != global)) {
      reason = "Euler datum on " + g + " differs from the local model at " + fp.vertex;
      return false;
    }
    global = s;
  }
  return true;
}

Report verify(const CatalogEntry& entry) {
  Report report;
  const CharacteristicData& cd = entry.data;

  Report sponge = validate_sponge(cd.sponge);
  add_prefixed(report, sponge, "sponge/");
  if (!sponge.ok()) return report;
  Report mu = validate_mu(cd);
  add_prefixed(report, mu, "chardata/");
  if (compatibility_check(cd)) report.pass("chardata/compatibility", "mu primitive and Euler signs in {+1,-1}");
  else report.fail("chardata/compatibility", "malformed mu or Euler signs");
  add_prefixed(report, cocycle_check(cd), "cocycle/");

  bool is_cycle = false;
  try {
    EulerCycle ec = assemble_euler_cycle(cd);
    is_cycle = ec.is_cycle;
    std::string detail = ec.determines_e_uniquely ? "local data determine e" : "ambient does not pin down e";
    if (ec.is_cycle) report.pass("euler-cycle", "sigma is a cycle; " + detail);
    else report.fail("euler-cycle", "sigma has nonzero boundary");
  } catch (const Error& err) {
    report.fail("euler-cycle", err.what());
  }

  bool stars_ok = true;
  for (const auto& c : cd.sponge.complex.cells()) {
    StarResult sr = face_star(cd.sponge, c.id);
    if (!sr.isomorphic) {
      stars_ok = false;
      report.fail("stars", "star of " + c.id + ": " + sr.reason);
    }
  }
  if (stars_ok) report.pass("stars", "every star matches its local model");

  bool strict_all = !entry.fixed_points.empty();
  std::set<std::string> c_values;
  for (const auto& fp : entry.fixed_points) {
    if (!is_general_position(fp.weights)) {
      strict_all = false;
      report.fail("weights", "weights at " + fp.vertex + " are not in general position");
      continue;
    }
    if (!is_strictly_appropriate(fp.weights)) strict_all = false;
    c_values.insert(to_string(primitive(cramer_coefficients(fp.weights).c)));
  }
  for (const auto& fp : entry.charts) {
    std::string reason;
    if (chart_agrees(cd, fp, reason)) report.pass("chart", "star of " + fp.vertex + " matches its local model");
    else report.fail("chart", reason);
  }

  HomologyResult h = homology(cd.sponge);
  auto actual = [&](const std::string& key) -> std::string {
    if (key == "fixed_points") return std::to_string(cd.sponge.complex.cells_of_dim(0).size());
    if (key == "strictly_appropriate") return strict_all ? "true" : "false";
    if (key == "sponge_valid") return sponge.ok() ? "true" : "false";
    if (key == "ambient") return to_string(cd.ambient.kind);
    if (key == "cramer_c") {
      if (c_values.size() != 1) return "inconsistent across fixed points";
      return *c_values.begin();
    }
    if (key == "cells_per_dim") {
      std::vector<std::size_t> counts;
      for (int d = 0; d <= cd.sponge.complex.max_dim(); ++d) counts.push_back(cd.sponge.complex.cells_of_dim(d).size());
      return join(counts);
    }
    if (key == "betti") return join(h.betti);
    if (key == "sigma_cycle") return is_cycle ? "true" : "false";
    if (key == "stars_valid") return stars_ok ? "true" : "false";
    return "no evaluator for this key";
  };
  for (const auto& [key, exp] : entry.expected) {
    std::string got = actual(key);
    std::string detail = "expected " + exp.value + ", got " + got + " (source: " + exp.source + ")";
    if (got == exp.value) report.pass("expected/" + key, detail);
    else report.fail("expected/" + key, detail);
  }
  return report;
}

}  // namespace cx1
