#include "cx1/quasitoric.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cx1/errors.hpp"

namespace cx1 {

namespace {

std::string face_name(const SimplePolytope& P, const std::vector<std::size_t>& face) {
  std::string s = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) s += ",";
    s += P.facets[face[i]];
  }
  return s + "}";
}

const IntVector& lambda_of(const CharacteristicFunction& lambda, const std::string& facet, std::size_t n) {
  auto it = lambda.find(facet);
  if (it == lambda.end()) throw InputError("no characteristic vector for facet " + facet);
  if (it->second.size() != n)
    throw DimensionMismatch("characteristic vector of " + facet + " is not in Z^" + std::to_string(n));
  return it->second;
}

std::vector<IntVector> lambda_rows(const SimplePolytope& P, const CharacteristicFunction& lambda,
                                   const std::vector<std::size_t>& facets) {
  std::vector<IntVector> rows;
  for (auto f : facets) rows.push_back(lambda_of(lambda, P.facets[f], P.n));
  return rows;
}

void require_valid(const SimplePolytope& P) {
  Report r = validate_polytope(P);
  if (!r.ok())
    for (const auto& f : r.findings())
      if (!f.passed) throw ValidationError("polytope: " + f.detail);
}

void require_strict(const std::vector<IntVector>& lambdas, const SubtorusChoice& st) {
  for (const auto& l : lambdas) {
    Integer p = dot(st.alpha_t, l);
    if (p != 1 && p != -1)
      throw PreconditionError("subtorus " + to_string(st.alpha_t) + " pairs to " + p.get_str() + " with " + to_string(l));
  }
}

}  // namespace

std::size_t SimplePolytope::facet_index(const std::string& id) const {
  auto it = std::find(facets.begin(), facets.end(), id);
  if (it == facets.end()) throw InputError("unknown facet " + id);
  return static_cast<std::size_t>(it - facets.begin());
}

std::vector<std::size_t> SimplePolytope::vertex_facets(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& f : vertices.at(v)) out.push_back(facet_index(f));
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplePolytope::adjacent(const std::string& a, const std::string& b) const {
  if (a == b) return false;
  for (const auto& v : vertices)
    if (std::find(v.begin(), v.end(), a) != v.end() && std::find(v.begin(), v.end(), b) != v.end()) return true;
  return false;
}

Report validate_polytope(const SimplePolytope& P) {
  Report report;
  if (P.n < 2) {
    report.fail("polytope-shape", "dimension must be at least 2");
    return report;
  }
  std::set<std::string> ids(P.facets.begin(), P.facets.end());
  if (ids.size() != P.facets.size()) {
    report.fail("polytope-shape", "duplicate facet ids");
    return report;
  }
  std::set<std::vector<std::string>> seen;
  std::set<std::string> used;
  bool shape_ok = true;
  for (std::size_t v = 0; v < P.vertices.size(); ++v) {
    std::set<std::string> vs(P.vertices[v].begin(), P.vertices[v].end());
    if (vs.size() != P.n || P.vertices[v].size() != P.n) {
      shape_ok = false;
      report.fail("simplicity", "vertex " + std::to_string(v) + " does not lie on exactly " + std::to_string(P.n) +
                                    " distinct facets");
      continue;
    }
    for (const auto& f : vs)
      if (!ids.count(f)) {
        shape_ok = false;
        report.fail("polytope-shape", "vertex " + std::to_string(v) + " names unknown facet " + f);
      }
    used.insert(vs.begin(), vs.end());
    if (!seen.insert({vs.begin(), vs.end()}).second) {
      shape_ok = false;
      report.fail("polytope-shape", "vertex " + std::to_string(v) + " repeats an earlier vertex");
    }
  }
  for (const auto& f : P.facets)
    if (!used.count(f)) {
      shape_ok = false;
      report.fail("polytope-shape", "facet " + f + " contains no vertex");
    }
  if (!shape_ok) return report;
  report.pass("simplicity", "every vertex lies on exactly " + std::to_string(P.n) + " facets");

  // Edges: (n-1)-subsets of a vertex. Each must lie in exactly two vertices.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> edges;
  for (std::size_t v = 0; v < P.vertices.size(); ++v) {
    auto fs = P.vertex_facets(v);
    for (std::size_t drop = 0; drop < fs.size(); ++drop) {
      auto e = fs;
      e.erase(e.begin() + static_cast<std::ptrdiff_t>(drop));
      edges[e].push_back(v);
    }
  }
  bool edges_ok = true;
  for (const auto& [e, vs] : edges)
    if (vs.size() != 2) {
      edges_ok = false;
      report.fail("edges", "edge " + face_name(P, e) + " has " + std::to_string(vs.size()) + " endpoints");
    }
  if (edges_ok) report.pass("edges", "every edge has two endpoints");

  std::vector<std::vector<std::size_t>> graph(P.vertices.size());
  for (const auto& [e, vs] : edges)
    if (vs.size() == 2) {
      graph[vs[0]].push_back(vs[1]);
      graph[vs[1]].push_back(vs[0]);
    }
  std::vector<bool> reached(P.vertices.size(), false);
  std::deque<std::size_t> queue;
  if (!P.vertices.empty()) {
    reached[0] = true;
    queue.push_back(0);
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto w : graph[v])
      if (!reached[w]) {
        reached[w] = true;
        queue.push_back(w);
      }
  }
  if (P.vertices.empty() || std::find(reached.begin(), reached.end(), false) != reached.end())
    report.fail("connected", "vertex graph is not connected");
  else
    report.pass("connected", "vertex graph is connected");
  return report;
}

std::vector<std::vector<std::size_t>> proper_faces(const SimplePolytope& P, std::size_t min_facets) {
  std::set<std::vector<std::size_t>> faces;
  for (std::size_t v = 0; v < P.vertices.size(); ++v) {
    auto fs = P.vertex_facets(v);
    for (std::size_t mask = 0; mask < (std::size_t{1} << fs.size()); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < fs.size(); ++i)
        if ((mask >> i) & 1) face.push_back(fs[i]);
      if (face.size() >= min_facets) faces.insert(face);
    }
  }
  std::vector<std::vector<std::size_t>> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

SubtorusChoice make_subtorus(const IntVector& alpha) {
  if (alpha.size() < 2) throw DimensionMismatch("subtorus character needs n >= 2");
  if (!is_primitive(alpha)) throw DegenerateInput("subtorus character " + to_string(alpha) + " is not primitive");
  KernelSplit split = split_along(alpha);
  return {alpha, split.projection, split.kernel_basis};
}

Report validate_star(const SimplePolytope& P, const CharacteristicFunction& lambda) {
  Report report;
  for (const auto& f : P.facets) {
    auto it = lambda.find(f);
    if (it == lambda.end()) {
      report.fail("lambda-shape", "no characteristic vector for facet " + f);
    } else if (it->second.size() != P.n) {
      report.fail("lambda-shape", "lambda(" + f + ") is not in Z^" + std::to_string(P.n));
    } else if (!is_primitive(it->second)) {
      report.fail("lambda-shape", "lambda(" + f + ") = " + to_string(it->second) + " is not primitive");
    }
  }
  if (!report.ok()) return report;
  report.pass("lambda-shape", "every facet carries a primitive vector");

  bool vertices_ok = true;
  for (std::size_t v = 0; v < P.vertices.size(); ++v) {
    auto fs = P.vertex_facets(v);
    Integer det = determinant(IntMatrix::from_rows(lambda_rows(P, lambda, fs), P.n));
    if (det != 1 && det != -1) {
      vertices_ok = false;
      report.fail("star-vertex", "vertex " + face_name(P, fs) + " has determinant " + det.get_str());
    }
  }
  if (vertices_ok) report.pass("star-vertex", "determinant +-1 at every vertex");

  bool faces_ok = true;
  for (const auto& face : proper_faces(P, 1))
    if (!is_unimodular_extension(lambda_rows(P, lambda, face), P.n)) {
      faces_ok = false;
      report.fail("star-face", "characteristic vectors on face " + face_name(P, face) + " do not extend to a basis");
    }
  if (faces_ok) report.pass("star-face", "characteristic vectors extend to a basis on every face");
  return report;
}

std::vector<IntVector> vertex_weights(const SimplePolytope& P, const CharacteristicFunction& lambda, std::size_t v) {
  if (v >= P.vertices.size()) throw IndexError("vertex index out of range");
  IntMatrix m = IntMatrix::from_rows(lambda_rows(P, lambda, P.vertex_facets(v)), P.n);
  Integer det = determinant(m);
  if (det != 1 && det != -1)
    throw StarConditionError("vertex " + std::to_string(v) + " has determinant " + det.get_str());
  return unimodular_inverse(m).transposed().row_vectors();
}

std::vector<SubtorusChoice> find_strict_subtorus(const SimplePolytope& P, const CharacteristicFunction& lambda,
                                                 long bound) {
  std::vector<IntVector> ls;
  for (const auto& f : P.facets) ls.push_back(lambda_of(lambda, f, P.n));
  std::vector<SubtorusChoice> out;
  if (bound < 1) return out;
  std::vector<long> a(P.n, -bound);
  while (true) {
    IntVector alpha(a.begin(), a.end());
    auto first = std::find_if(a.begin(), a.end(), [](long x) { return x != 0; });
    if (first != a.end() && *first > 0 && is_primitive(alpha)) {
      bool strict = std::all_of(ls.begin(), ls.end(), [&](const IntVector& l) {
        Integer p = dot(alpha, l);
        return p == 1 || p == -1;
      });
      if (strict) out.push_back(make_subtorus(alpha));
    }
    std::size_t i = 0;
    while (i < P.n && a[i] == bound) a[i++] = -bound;
    if (i == P.n) break;
    ++a[i];
  }
  return out;
}

IntVector induced_mu(const IntVector& lambda1, const IntVector& lambda2, const SubtorusChoice& st) {
  Integer p1 = dot(st.alpha_t, lambda1);
  Integer p2 = dot(st.alpha_t, lambda2);
  if (p1 == 0 && p2 == 0) throw DegenerateInput("induced_mu: both characteristic vectors lie in the subtorus");
  IntVector w = added(scaled(lambda1, p2), scaled(lambda2, Integer(-p1)));
  if (is_zero(w)) throw DegenerateInput("induced_mu: characteristic vectors are proportional");
  return primitive_keep_sign(st.complement * primitive_keep_sign(w));
}

CharacteristicData reduce(const SimplePolytope& P, const CharacteristicFunction& lambda, const SubtorusChoice& st) {
  require_valid(P);
  Report star = validate_star(P, lambda);
  if (!star.ok())
    for (const auto& f : star.findings())
      if (!f.passed) throw StarConditionError("reduce: " + f.detail);
  if (st.alpha_t.size() != P.n) throw DimensionMismatch("reduce: subtorus character has wrong dimension");
  std::vector<IntVector> all;
  for (const auto& f : P.facets) all.push_back(lambda_of(lambda, f, P.n));
  require_strict(all, st);

  CharacteristicData cd;
  cd.n = P.n;
  cd.sponge.n = P.n;
  cd.ambient.kind = AmbientKind::sphere;
  cd.ambient.note = "S^" + std::to_string(P.n + 1);

  // Sponge cells are faces with at least two facets; face S has dim n - |S|.
  // Boundary of S: faces S + {f}, sign (-1)^{position of f in S + {f}}.
  const auto faces = proper_faces(P, 2);
  std::set<std::vector<std::size_t>> face_set(faces.begin(), faces.end());
  for (const auto& face : faces)
    cd.sponge.complex.add_cell(face_name(P, face), static_cast<int>(P.n - face.size()));
  for (const auto& face : faces) {
    Incidence boundary;
    for (std::size_t f = 0; f < P.facets.size(); ++f) {
      if (std::binary_search(face.begin(), face.end(), f)) continue;
      auto bigger = face;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), f), f);
      if (!face_set.count(bigger)) continue;
      auto pos = static_cast<std::size_t>(std::find(bigger.begin(), bigger.end(), f) - bigger.begin());
      boundary.emplace_back(face_name(P, bigger), pos % 2 ? -1 : 1);
    }
    cd.sponge.complex.set_boundary(face_name(P, face), std::move(boundary));
  }

  for (const auto& face : faces) {
    if (face.size() != 2) continue;
    const std::string id = face_name(P, face);
    const IntVector& la = all[face[0]];
    const IntVector& lb = all[face[1]];
    cd.mu[id] = induced_mu(la, lb, st);
    const int sign = (dot(st.alpha_t, la) * dot(st.alpha_t, lb) > 0) ? 1 : -1;
    cd.euler_sign[id] = sign;

    // Both endpoints of the dual edge must see the same Hopf type.
    for (std::size_t v = 0; v < P.vertices.size(); ++v) {
      auto fs = P.vertex_facets(v);
      if (!std::includes(fs.begin(), fs.end(), face.begin(), face.end())) continue;
      WeightSystem ws = induced_weights(lambda_rows(P, lambda, fs), st.alpha_t);
      auto ia = static_cast<std::size_t>(std::find(fs.begin(), fs.end(), face[0]) - fs.begin());
      auto ib = static_cast<std::size_t>(std::find(fs.begin(), fs.end(), face[1]) - fs.begin());
      if (hopf_type(ws, ia, ib) != sign)
        throw ConsistencyError("reduce: Euler sign of " + id + " disagrees with the Hopf type at vertex " +
                               face_name(P, fs));
    }
  }
  return cd;
}

CharacteristicFunction coloring_pullback(const SimplePolytope& P, const std::map<std::string, int>& coloring) {
  CharacteristicFunction lambda;
  for (const auto& f : P.facets) {
    auto it = coloring.find(f);
    if (it == coloring.end()) throw InputError("coloring: facet " + f + " has no color");
    if (it->second < 1 || static_cast<std::size_t>(it->second) > P.n)
      throw InputError("coloring: color " + std::to_string(it->second) + " of facet " + f + " is outside 1.." +
                       std::to_string(P.n));
  }
  for (std::size_t a = 0; a < P.facets.size(); ++a)
    for (std::size_t b = a + 1; b < P.facets.size(); ++b)
      if (coloring.at(P.facets[a]) == coloring.at(P.facets[b]) && P.adjacent(P.facets[a], P.facets[b]))
        throw ColoringError("coloring: adjacent facets " + P.facets[a] + " and " + P.facets[b] + " share color " +
                            std::to_string(coloring.at(P.facets[a])));
  for (const auto& f : P.facets) {
    IntVector e(P.n, Integer(0));
    e[static_cast<std::size_t>(coloring.at(f) - 1)] = 1;
    lambda[f] = e;
  }
  if (!validate_star(P, lambda).ok()) throw ConsistencyError("coloring: pullback violates the star condition");
  return lambda;
}

CharacteristicData cell_manifold_data(const CellComplex& M, std::size_t n, const CharacteristicFunction& lambda,
                                      const SubtorusChoice& st) {
  if (n < 2) throw DimensionMismatch("cell_manifold_data: n must be at least 2");
  const int top = static_cast<int>(n) - 1;
  if (M.max_dim() != top)
    throw ValidationError("cell_manifold_data: expected a complex of dimension " + std::to_string(top) + ", got " +
                          std::to_string(M.max_dim()));
  if (st.alpha_t.size() != n) throw DimensionMismatch("cell_manifold_data: subtorus character has wrong dimension");

  const auto tops = M.cells_of_dim(top);
  std::map<std::string, std::vector<std::string>> above;
  for (const auto& c : M.cells()) above[c.id];
  for (const auto& t : tops)
    for (const auto& g : M.closure(t)) above[g].push_back(t);
  for (auto& [id, ts] : above) std::sort(ts.begin(), ts.end());

  for (const auto& c : M.cells()) {
    const std::size_t want = n - static_cast<std::size_t>(c.dim);
    if (above[c.id].size() != want)
      throw ValidationError("cell_manifold_data: " + std::to_string(c.dim) + "-cell " + c.id + " lies in " +
                            std::to_string(above[c.id].size()) + " top cells, expected " + std::to_string(want));
  }
  std::vector<IntVector> all;
  for (const auto& t : tops) all.push_back(lambda_of(lambda, t, n));
  require_strict(all, st);
  for (const auto& v : M.cells_of_dim(0)) {
    std::vector<IntVector> rows;
    for (const auto& t : above[v]) rows.push_back(lambda.at(t));
    Integer det = determinant(IntMatrix::from_rows(rows, n));
    if (det != 1 && det != -1)
      throw StarConditionError("cell_manifold_data: vertex " + v + " has determinant " + det.get_str());
  }

  CharacteristicData cd;
  cd.n = n;
  cd.sponge.n = n;
  cd.ambient.kind = AmbientKind::product;
  cd.ambient.boundary_trivial = true;
  cd.ambient.note = "M x D^2";
  for (const auto& c : M.cells())
    if (c.dim < top) cd.sponge.complex.add_cell(c.id, c.dim, c.label);
  for (const auto& c : M.cells())
    if (c.dim < top) cd.sponge.complex.set_boundary(c.id, M.boundary(c.id));

  std::map<std::string, IntVector> weighted;
  for (const auto& f : cd.sponge.facets()) {
    const auto& ts = above[f];
    const IntVector& la = lambda.at(ts[0]);
    const IntVector& lb = lambda.at(ts[1]);
    cd.mu[f] = induced_mu(la, lb, st);
    cd.euler_sign[f] = (dot(st.alpha_t, la) * dot(st.alpha_t, lb) > 0) ? 1 : -1;
    weighted[f] = scaled(cd.mu[f], Integer(cd.euler_sign[f]));
  }
  auto t = solve_facet_signs(cd.sponge, weighted);
  if (!t) throw ConsistencyError("cell_manifold_data: no orientation of mu makes the Euler chain a cycle");
  for (auto& [f, v] : cd.mu) v = scaled(v, Integer(t->at(f)));
  return cd;
}

SimplePolytope simplex_polytope(std::size_t n) {
  if (n < 2) throw DimensionMismatch("simplex_polytope: n must be at least 2");
  SimplePolytope P;
  P.n = n;
  for (std::size_t i = 1; i <= n + 1; ++i) P.facets.push_back(std::to_string(i));
  for (std::size_t skip = n + 1; skip-- > 0;) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) v.push_back(P.facets[i]);
    P.vertices.push_back(v);
  }
  return P;
}

SimplePolytope cube_polytope(std::size_t n) {
  if (n < 2) throw DimensionMismatch("cube_polytope: n must be at least 2");
  SimplePolytope P;
  P.n = n;
  for (std::size_t i = 1; i <= 2 * n; ++i) P.facets.push_back(std::to_string(i));
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(P.facets[((mask >> i) & 1) ? i + n : i]);
    P.vertices.push_back(v);
  }
  return P;
}

SimplePolytope prism_polytope(std::size_t m) {
  if (m < 3) throw DimensionMismatch("prism_polytope: base needs at least 3 sides");
  SimplePolytope P;
  P.n = 3;
  for (std::size_t i = 1; i <= m + 2; ++i) P.facets.push_back(std::to_string(i));
  for (std::size_t cap : {m, m + 1})
    for (std::size_t i = 0; i < m; ++i) P.vertices.push_back({P.facets[i], P.facets[(i + 1) % m], P.facets[cap]});
  return P;
}

}  // namespace cx1
