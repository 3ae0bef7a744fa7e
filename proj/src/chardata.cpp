#include "cx1/chardata.hpp"

#include <algorithm>
#include <deque>

#include "cx1/errors.hpp"

namespace cx1 {

namespace {

// cell id -> sorted facets whose closure contains it.
std::map<std::string, std::vector<std::string>> facet_map(const SpongeComplex& s) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& c : s.complex.cells()) out[c.id];
  for (const auto& f : s.facets())
    for (const auto& g : s.complex.closure(f)) out[g].push_back(f);
  for (auto& [id, fs] : out) std::sort(fs.begin(), fs.end());
  return out;
}

std::size_t span_rank(const std::vector<IntVector>& vs, std::size_t width) {
  if (vs.empty()) return 0;
  return rank(IntMatrix::from_rows(vs, width));
}

struct FaceRelation {
  std::string face;
  std::vector<std::string> facets;  // the three facets through the face, sorted
  std::vector<int> incidence;  // coefficient of the face in the boundary of each facet
  std::vector<int> eps;  // empty when no +-1 relation exists
};

// Relations at every (n-3)-face; faces with a facet count other than 3 or a
// missing mu get an empty eps.
std::vector<FaceRelation> face_relations(const SpongeComplex& s, const std::map<std::string, IntVector>& mu) {
  std::vector<FaceRelation> out;
  if (s.n < 3) return out;
  const auto& cx = s.complex;
  for (const auto& g : cx.cells_of_dim(static_cast<int>(s.n) - 3)) {
    FaceRelation rel;
    rel.face = g;
    rel.facets = cx.cofaces(g);
    std::vector<IntVector> vs;
    for (const auto& f : rel.facets) {
      rel.incidence.push_back(cx.incidence(f, g));
      auto it = mu.find(f);
      if (it != mu.end()) vs.push_back(it->second);
    }
    if (rel.facets.size() == 3 && vs.size() == 3) {
      auto patterns = vanishing_sign_patterns(vs);
      if (patterns.size() == 1) rel.eps = patterns.front();
    }
    out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace

std::string to_string(AmbientKind kind) {
  switch (kind) {
    case AmbientKind::sphere:
      return "sphere";
    case AmbientKind::product:
      return "product";
    case AmbientKind::abstract:
      return "abstract";
  }
  return "abstract";
}

AmbientKind ambient_from_string(const std::string& s) {
  if (s == "sphere") return AmbientKind::sphere;
  if (s == "product") return AmbientKind::product;
  if (s == "abstract") return AmbientKind::abstract;
  throw InputError("unknown ambient kind '" + s + "'");
}

std::vector<std::string> facets_containing(const SpongeComplex& s, const std::string& face) {
  std::vector<std::string> out;
  const int top = static_cast<int>(s.n) - 2;
  for (const auto& u : s.complex.upper_set(face))
    if (s.complex.cell(u).dim == top) out.push_back(u);
  return out;
}

Report validate_mu(const CharacteristicData& cd) {
  Report report;
  const auto& s = cd.sponge;
  const std::size_t width = cd.n - 1;
  if (cd.n != s.n) {
    report.fail("mu-shape", "characteristic data has n = " + std::to_string(cd.n) + " but sponge has n = " +
                                std::to_string(s.n));
    return report;
  }

  bool shape_ok = true;
  const auto facets = s.facets();
  for (const auto& f : facets) {
    auto it = cd.mu.find(f);
    if (it == cd.mu.end()) {
      shape_ok = false;
      report.fail("mu-shape", "facet " + f + " has no mu");
      continue;
    }
    if (it->second.size() != width) {
      shape_ok = false;
      report.fail("mu-shape", "mu(" + f + ") = " + to_string(it->second) + " is not in Z^" + std::to_string(width));
      continue;
    }
    if (is_zero(it->second) || !is_primitive(it->second)) {
      shape_ok = false;
      report.fail("mu-shape", "mu(" + f + ") = " + to_string(it->second) + " is not primitive");
    }
  }
  for (const auto& [f, v] : cd.mu)
    if (!std::binary_search(facets.begin(), facets.end(), f)) {
      shape_ok = false;
      report.fail("mu-shape", "mu assigned to " + f + ", which is not a facet");
    }
  if (!shape_ok) return report;
  report.pass("mu-shape", "every facet carries a primitive vector in Z^" + std::to_string(width));

  const auto fmap = facet_map(s);
  bool rank_ok = true;
  for (const auto& c : s.complex.cells()) {
    std::vector<IntVector> vs;
    for (const auto& f : fmap.at(c.id)) vs.push_back(cd.mu.at(f));
    const std::size_t want = cd.n - 1 - static_cast<std::size_t>(c.dim);
    const std::size_t got = span_rank(vs, width);
    if (got != want) {
      rank_ok = false;
      report.fail("mu-rank", "face " + c.id + " of dim " + std::to_string(c.dim) + ": mu span has rank " +
                                 std::to_string(got) + ", expected " + std::to_string(want));
    }
  }
  if (rank_ok) report.pass("mu-rank", "rank of the mu span is n-1-k at every k-face");

  bool pair_ok = true;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& c : s.complex.cells()) {
    const auto& fs = fmap.at(c.id);
    for (std::size_t a = 0; a < fs.size(); ++a)
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        if (!seen.insert({fs[a], fs[b]}).second) continue;
        if (span_rank({cd.mu.at(fs[a]), cd.mu.at(fs[b])}, width) != 2) {
          pair_ok = false;
          report.fail("mu-pairs", "facets " + fs[a] + " and " + fs[b] + " meet at " + c.id +
                                      " but have dependent mu");
        }
      }
  }
  if (pair_ok) report.pass("mu-pairs", "facets sharing a face have independent mu");
  return report;
}

bool compatibility_check(const CharacteristicData& cd) {
  for (const auto& f : cd.sponge.facets()) {
    auto m = cd.mu.find(f);
    auto k = cd.euler_sign.find(f);
    if (m == cd.mu.end() || k == cd.euler_sign.end()) return false;
    if (m->second.size() + 1 != cd.n || is_zero(m->second) || !is_primitive(m->second)) return false;
    if (k->second != 1 && k->second != -1) return false;
  }
  return true;
}

std::vector<std::vector<int>> vanishing_sign_patterns(const std::vector<IntVector>& vs) {
  std::vector<std::vector<int>> out;
  if (vs.empty()) return out;
  const std::size_t m = vs.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << (m - 1)); ++mask) {
    std::vector<int> eps{1};
    for (std::size_t i = 1; i < m; ++i) eps.push_back((mask >> (i - 1)) & 1 ? -1 : 1);
    IntVector sum(vs.front().size(), Integer(0));
    for (std::size_t i = 0; i < m; ++i) sum = added(sum, scaled(vs[i], Integer(eps[i])));
    if (is_zero(sum)) out.push_back(eps);
  }
  return out;
}

Report cocycle_check(const CharacteristicData& cd) {
  Report report;
  const auto& s = cd.sponge;
  if (s.n < 3) {
    report.pass("relation", "no (n-3)-faces");
    report.pass("sign", "no (n-3)-faces");
    return report;
  }
  bool relations_ok = true;
  bool signs_ok = true;
  for (const auto& rel : face_relations(s, cd.mu)) {
    if (rel.facets.size() != 3) {
      relations_ok = false;
      report.fail("relation", "face " + rel.face + " lies in " + std::to_string(rel.facets.size()) + " facets");
      continue;
    }
    if (rel.eps.empty()) {
      relations_ok = false;
      report.fail("relation", "no +-1 combination of mu(" + rel.facets[0] + "), mu(" + rel.facets[1] + "), mu(" +
                                  rel.facets[2] + ") vanishes at face " + rel.face);
      continue;
    }
    // inc * k must equal +-eps.
    int global = 0;
    bool face_ok = true;
    for (std::size_t i = 0; i < 3; ++i) {
      auto k = cd.euler_sign.find(rel.facets[i]);
      int value = (k == cd.euler_sign.end()) ? 0 : k->second * rel.incidence[i];
      int ratio = value * rel.eps[i];
      if (ratio != 1 && ratio != -1) face_ok = false;
      else if (global == 0) global = ratio;
      else if (ratio != global) face_ok = false;
    }
    if (!face_ok) {
      signs_ok = false;
      report.fail("sign", "Euler signs at face " + rel.face + " do not match the relation among " + rel.facets[0] +
                              ", " + rel.facets[1] + ", " + rel.facets[2]);
    }
  }
  if (relations_ok) report.pass("relation", "every (n-3)-face carries a +-1 relation among its three mu values");
  if (signs_ok) report.pass("sign", "Euler signs agree with the relations up to a sign per face");
  return report;
}

std::vector<OrbitType> orbit_types(const CharacteristicData& cd) {
  std::vector<OrbitType> out;
  const std::size_t width = cd.n - 1;
  const auto fmap = facet_map(cd.sponge);
  std::vector<std::string> ids;
  for (const auto& c : cd.sponge.complex.cells()) ids.push_back(c.id);
  std::sort(ids.begin(), ids.end());
  for (const auto& id : ids) {
    OrbitType t;
    t.face = id;
    std::vector<IntVector> vs;
    for (const auto& f : fmap.at(id)) {
      auto it = cd.mu.find(f);
      if (it != cd.mu.end()) vs.push_back(it->second);
    }
    if (!vs.empty()) t.stabilizer_span = hermite_normal_form(IntMatrix::from_rows(vs, width)).row_vectors();
    t.orbit_dim = width - t.stabilizer_span.size();
    t.quotient_rank = t.orbit_dim;
    out.push_back(std::move(t));
  }
  OrbitType free_type;
  free_type.face = kFreeStratum;
  free_type.orbit_dim = width;
  free_type.quotient_rank = width;
  out.push_back(free_type);
  return out;
}

EulerCycle assemble_euler_cycle(const CharacteristicData& cd) {
  Report cocycle = cocycle_check(cd);
  for (const auto& f : cocycle.findings())
    if (!f.passed && f.check == "relation") throw ValidationError("assemble_euler_cycle: " + f.detail);
  if (!compatibility_check(cd)) throw ValidationError("assemble_euler_cycle: malformed mu or Euler signs");

  EulerCycle out;
  for (const auto& f : cd.sponge.facets()) out.sigma[f] = scaled(cd.mu.at(f), Integer(cd.euler_sign.at(f)));
  out.is_cycle = weighted_cycle_check(cd.sponge, out.sigma);
  out.determines_e_uniquely = cd.ambient.kind == AmbientKind::sphere ||
                              (cd.ambient.kind == AmbientKind::product && cd.ambient.boundary_trivial);
  return out;
}

LocalEuler local_euler_from_weights(const WeightSystem& ws, std::size_t i, std::size_t j) {
  if (i >= ws.n || j >= ws.n) throw IndexError("local_euler_from_weights: index out of range");
  if (i == j) throw IndexError("local_euler_from_weights: indices must differ");
  if (!is_strictly_appropriate(ws)) throw PreconditionError("local_euler_from_weights: weights not strictly appropriate");
  if (i > j) std::swap(i, j);

  const WeightSystem lw = in_weight_lattice(ws);
  const auto cc = cramer_coefficients(lw);

  // The circle fixing every coordinate except i and j: the kernel of the other
  // weights, oriented so that its image in Z^n is c_j e_i - c_i e_j.
  std::vector<IntVector> others;
  for (std::size_t k = 0; k < ws.n; ++k)
    if (k != i && k != j) others.push_back(lw.weights[k]);
  IntVector direction;
  if (others.empty()) {
    direction = make_vector({1});
  } else {
    auto kernel = integer_kernel(IntMatrix::from_rows(others, ws.n - 1));
    if (kernel.size() != 1) throw ConsistencyError("local_euler_from_weights: circle stabilizer is not rank one");
    direction = kernel.front();
  }
  Integer image_i = dot(lw.weights[i], direction);
  if (image_i == 0) throw ConsistencyError("local_euler_from_weights: degenerate circle");
  if (sgn(image_i) != sgn(cc.c[j])) direction = negated(direction);

  LocalEuler out;
  out.mu = direction;
  out.sign = (cc.c[i] * cc.c[j] > 0) ? 1 : -1;
  return out;
}

CharacteristicData local_characteristic_data(const WeightSystem& ws) {
  CharacteristicData cd;
  cd.n = ws.n;
  const LocalModel model = local_model(ws.n);
  cd.sponge = model.as_sponge();
  cd.ambient.kind = AmbientKind::abstract;
  cd.ambient.note = "local model";
  for (const auto& face : model.faces) {
    if (face.size() + 2 != ws.n) continue;
    std::vector<std::size_t> zero;
    for (std::size_t x = 0; x < ws.n; ++x)
      if (!std::binary_search(face.begin(), face.end(), x)) zero.push_back(x);
    auto le = local_euler_from_weights(ws, zero[0], zero[1]);
    cd.mu[LocalModel::face_id(face)] = le.mu;
    cd.euler_sign[LocalModel::face_id(face)] = le.sign;
  }
  return cd;
}

std::optional<std::map<std::string, int>> solve_facet_signs(const SpongeComplex& s,
                                                            const std::map<std::string, IntVector>& mu) {
  const auto facets = s.facets();
  const auto relations = face_relations(s, mu);

  // t(F) t(F') = inc(F) inc(F') eps(F) eps(F') for facets through a common face.
  std::map<std::string, std::vector<std::pair<std::string, int>>> edges;
  for (const auto& rel : relations) {
    if (rel.eps.empty()) return std::nullopt;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b)
          edges[rel.facets[a]].emplace_back(rel.facets[b],
                                            rel.incidence[a] * rel.incidence[b] * rel.eps[a] * rel.eps[b]);
  }
  std::map<std::string, int> t;
  for (const auto& start : facets) {
    if (t.count(start)) continue;
    t[start] = 1;
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop_front();
      for (const auto& [next, rel] : edges[cur]) {
        int want = t[cur] * rel;
        auto it = t.find(next);
        if (it == t.end()) {
          t[next] = want;
          queue.push_back(next);
        } else if (it->second != want) {
          return std::nullopt;
        }
      }
    }
  }
  return t;
}

}  // namespace cx1
