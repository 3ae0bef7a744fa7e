#include "cx1/classify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "cx1/errors.hpp"

namespace cx1 {

namespace {

// Hasse diagram of a sponge with integer cell indices.
struct Hasse {
  std::vector<std::string> ids;
  std::map<std::string, std::size_t> index;
  std::vector<int> dim;
  std::vector<std::vector<std::pair<std::size_t, int>>> faces;  // boundary entries
  std::vector<std::vector<std::size_t>> neighbours;  // faces and cofaces
  std::vector<std::size_t> face_count;
  std::vector<std::size_t> coface_count;

  explicit Hasse(const SpongeComplex& s) {
    for (const auto& c : s.complex.cells()) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
    dim.resize(ids.size());
    faces.resize(ids.size());
    neighbours.resize(ids.size());
    face_count.assign(ids.size(), 0);
    coface_count.assign(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      dim[i] = s.complex.cell(ids[i]).dim;
      for (const auto& [f, k] : s.complex.boundary(ids[i])) {
        std::size_t j = index.at(f);
        faces[i].emplace_back(j, k);
        neighbours[i].push_back(j);
        neighbours[j].push_back(i);
        ++face_count[i];
        ++coface_count[j];
      }
    }
  }

  int incidence(std::size_t cell, std::size_t face) const {
    for (const auto& [j, k] : faces[cell])
      if (j == face) return k;
    return 0;
  }
  bool adjacent(std::size_t a, std::size_t b) const {
    return std::find(neighbours[a].begin(), neighbours[a].end(), b) != neighbours[a].end();
  }
};

// cell id -> sorted facets containing it.
std::map<std::string, std::vector<std::string>> facets_at(const SpongeComplex& s) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& c : s.complex.cells()) out[c.id];
  for (const auto& f : s.facets())
    for (const auto& g : s.complex.closure(f)) out[g].push_back(f);
  for (auto& [id, fs] : out) std::sort(fs.begin(), fs.end());
  return out;
}

std::map<std::string, IntVector> sigma_of(const CharacteristicData& cd) {
  std::map<std::string, IntVector> out;
  for (const auto& [f, v] : cd.mu) out[f] = scaled(v, Integer(cd.euler_sign.at(f)));
  return out;
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t k = m.rows();
  IntMatrix adj(k, k);
  if (k == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      IntMatrix minor(k - 1, k - 1);
      for (std::size_t r = 0, rr = 0; r < k; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < k; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Integer d = determinant(minor);
      adj(i, j) = ((i + j) % 2) ? Integer(-d) : d;
    }
  return adj;
}

class WitnessSearch {
 public:
  WitnessSearch(const CharacteristicData& cd1, const CharacteristicData& cd2)
      : cd1_(cd1), cd2_(cd2), h1_(cd1.sponge), h2_(cd2.sponge), sigma1_(sigma_of(cd1)), sigma2_(sigma_of(cd2)) {
    facets1_ = cd1.sponge.facets();
    choose_basis();
    build_order();
  }

  std::optional<EquivalenceWitness> run() {
    phi_.assign(h1_.ids.size(), kUnset);
    used_.assign(h2_.ids.size(), false);
    extend(0);
    return found_;
  }

  std::size_t tried() const { return tried_; }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  void choose_basis() {
    std::vector<IntVector> chosen;
    for (const auto& f : facets1_) {
      auto trial = chosen;
      trial.push_back(sigma1_.at(f));
      if (rank(IntMatrix::from_rows(trial, cd1_.n - 1)) == trial.size()) {
        chosen = trial;
        basis_.push_back(f);
      }
      if (chosen.size() == cd1_.n - 1) break;
    }
  }

  // Breadth-first order so every cell after the first of its component has an
  // already-placed neighbour.
  void build_order() {
    std::vector<bool> seen(h1_.ids.size(), false);
    parent_.assign(h1_.ids.size(), kUnset);
    for (std::size_t s = 0; s < h1_.ids.size(); ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::deque<std::size_t> queue{s};
      while (!queue.empty()) {
        auto c = queue.front();
        queue.pop_front();
        order_.push_back(c);
        for (auto d : h1_.neighbours[c])
          if (!seen[d]) {
            seen[d] = true;
            parent_[d] = c;
            queue.push_back(d);
          }
      }
    }
  }

  bool compatible(std::size_t c, std::size_t target) const {
    if (used_[target]) return false;
    if (h1_.dim[c] != h2_.dim[target]) return false;
    if (h1_.face_count[c] != h2_.face_count[target] || h1_.coface_count[c] != h2_.coface_count[target]) return false;
    std::size_t mapped = 0;
    for (auto d : h1_.neighbours[c])
      if (phi_[d] != kUnset) {
        if (!h2_.adjacent(target, phi_[d])) return false;
        ++mapped;
      }
    std::size_t mapped2 = 0;
    for (auto e : h2_.neighbours[target])
      if (used_[e]) ++mapped2;
    return mapped == mapped2;
  }

  void extend(std::size_t pos) {
    if (found_) return;
    if (pos == order_.size()) {
      ++tried_;
      found_ = try_bijection();
      return;
    }
    const std::size_t c = order_[pos];
    std::vector<std::size_t> candidates;
    if (parent_[c] == kUnset) {
      for (std::size_t t = 0; t < h2_.ids.size(); ++t) candidates.push_back(t);
    } else {
      candidates = h2_.neighbours[phi_[parent_[c]]];
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    for (auto t : candidates) {
      if (!compatible(c, t)) continue;
      phi_[c] = t;
      used_[t] = true;
      extend(pos + 1);
      phi_[c] = kUnset;
      used_[t] = false;
      if (found_) return;
    }
  }

  std::optional<EquivalenceWitness> try_bijection() const {
    // Orientation signs from the incidence numbers, one free sign per component.
    const std::size_t N = h1_.ids.size();
    std::vector<int> o(N, 0);
    std::vector<std::size_t> component(N, 0);
    std::size_t components = 0;
    for (auto start : order_) {
      if (o[start] != 0) continue;
      o[start] = 1;
      component[start] = components;
      std::deque<std::size_t> queue{start};
      while (!queue.empty()) {
        auto c = queue.front();
        queue.pop_front();
        for (const auto& [d, k1] : h1_.faces[c]) {
          int k2 = h2_.incidence(phi_[c], phi_[d]);
          int want = k2 * o[c] * k1;
          if (o[d] == 0) {
            o[d] = want;
            component[d] = components;
            queue.push_back(d);
          } else if (o[d] != want) {
            return std::nullopt;
          }
        }
        // Walk up as well so the whole component is reached.
        for (auto d : h1_.neighbours[c])
          if (o[d] == 0) {
            int k1 = h1_.incidence(d, c);
            int k2 = h2_.incidence(phi_[d], phi_[c]);
            o[d] = k2 * o[c] * k1;
            component[d] = components;
            queue.push_back(d);
          }
      }
      ++components;
    }
    // Recheck every incidence after the walk.
    for (std::size_t c = 0; c < N; ++c)
      for (const auto& [d, k1] : h1_.faces[c])
        if (h2_.incidence(phi_[c], phi_[d]) != o[c] * o[d] * k1) return std::nullopt;

    const std::size_t width = cd1_.n - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << components); ++mask) {
      std::vector<int> flip(components);
      for (std::size_t k = 0; k < components; ++k) flip[k] = ((mask >> k) & 1) ? -1 : 1;
      auto target = [&](const std::string& f) {
        std::size_t c = h1_.index.at(f);
        int s = flip[component[c]] * o[c];
        return scaled(sigma2_.at(h2_.ids[phi_[c]]), Integer(s));
      };
      std::vector<IntVector> cols1, cols2;
      for (const auto& f : basis_) {
        cols1.push_back(sigma1_.at(f));
        cols2.push_back(target(f));
      }
      IntMatrix M1 = IntMatrix::from_columns(cols1, width);
      IntMatrix M2 = IntMatrix::from_columns(cols2, width);
      Integer det = determinant(M1);
      if (det == 0) continue;
      IntMatrix A = M2 * adjugate(M1);
      bool divisible = true;
      for (std::size_t r = 0; r < width && divisible; ++r)
        for (std::size_t c = 0; c < width; ++c) {
          if (A(r, c) % det != 0) {
            divisible = false;
            break;
          }
          A(r, c) /= det;
        }
      if (!divisible) continue;
      Integer dA = determinant(A);
      if (dA != 1 && dA != -1) continue;
      bool all = std::all_of(facets1_.begin(), facets1_.end(),
                             [&](const std::string& f) { return A * sigma1_.at(f) == target(f); });
      if (!all) continue;

      EquivalenceWitness w;
      w.A = A;
      w.global_sign = flip[0];
      for (std::size_t c = 0; c < N; ++c) {
        w.bijection[h1_.ids[c]] = h2_.ids[phi_[c]];
        // Fold the component flips into the orientation, relative to the first.
        w.orientation[h1_.ids[c]] = o[c] * flip[component[c]] * flip[0];
      }
      return w;
    }
    return std::nullopt;
  }

  const CharacteristicData& cd1_;
  const CharacteristicData& cd2_;
  Hasse h1_;
  Hasse h2_;
  std::map<std::string, IntVector> sigma1_;
  std::map<std::string, IntVector> sigma2_;
  std::vector<std::string> facets1_;
  std::vector<std::string> basis_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> phi_;
  std::vector<bool> used_;
  std::optional<EquivalenceWitness> found_;
  std::size_t tried_ = 0;
};

void require_valid(const CharacteristicData& cd, const char* which) {
  Report r = validate_sponge(cd.sponge);
  if (r.ok()) r.append(validate_mu(cd));
  if (!r.ok() || !compatibility_check(cd)) {
    std::string detail = "malformed mu or Euler signs";
    for (const auto& f : r.findings())
      if (!f.passed) {
        detail = f.detail;
        break;
      }
    throw PreconditionError(std::string("compare: ") + which + " input is not valid: " + detail);
  }
}

bool same_ambient(const Ambient& a, const Ambient& b) {
  if (a.kind != b.kind) return false;
  return a.kind != AmbientKind::product || a.boundary_trivial == b.boundary_trivial;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equivalent:
      return "Equivalent";
    case Verdict::inequivalent:
      return "Inequivalent";
    case Verdict::incomparable:
      return "Incomparable";
  }
  return "Incomparable";
}

Fingerprint canonical_invariants(const CharacteristicData& cd) {
  Fingerprint fp;
  fp.n = cd.n;
  const auto& cx = cd.sponge.complex;
  const int top = static_cast<int>(cd.n) - 2;
  for (int d = 0; d <= top; ++d) fp.cells_per_dim.push_back(cx.cells_of_dim(d).size());
  HomologyResult h = homology(cd.sponge);
  fp.betti = h.betti;
  for (const auto& t : h.torsion) {
    std::vector<std::string> ts;
    for (const auto& x : t) ts.push_back(x.get_str());
    fp.torsion.push_back(ts);
  }

  const auto fmap = facets_at(cd.sponge);
  const std::size_t width = cd.n - 1;
  fp.mu_ranks.assign(static_cast<std::size_t>(std::max(top, -1) + 1), {});
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& c : cx.cells()) {
    const auto& fs = fmap.at(c.id);
    std::vector<IntVector> vs;
    for (const auto& f : fs) vs.push_back(cd.mu.at(f));
    fp.mu_ranks[static_cast<std::size_t>(c.dim)].push_back(vs.empty() ? 0 : rank(IntMatrix::from_rows(vs, width)));
    for (std::size_t a = 0; a < fs.size(); ++a)
      for (std::size_t b = a + 1; b < fs.size(); ++b) pairs.insert({fs[a], fs[b]});
  }
  for (auto& r : fp.mu_ranks) std::sort(r.begin(), r.end());
  for (const auto& [a, b] : pairs) {
    SmithDecomposition snf = smith_normal_form(IntMatrix::from_rows({cd.mu.at(a), cd.mu.at(b)}, width));
    Integer index = 1;
    if (snf.rank < 2) index = 0;
    else
      for (const auto& d : snf.diagonal()) index *= d;
    fp.pair_indices.push_back(index.get_str());
  }
  std::sort(fp.pair_indices.begin(), fp.pair_indices.end());
  return fp;
}

std::string fingerprint_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.n != b.n) return "n";
  if (a.cells_per_dim != b.cells_per_dim) return "cells per dimension";
  if (a.betti != b.betti || a.torsion != b.torsion) return "sponge homology";
  if (a.mu_ranks != b.mu_ranks) return "mu rank profile";
  if (a.pair_indices != b.pair_indices) return "pair saturation indices";
  return "";
}

Comparison compare(const CharacteristicData& cd1, const CharacteristicData& cd2) {
  Comparison out;
  if (cd1.n != cd2.n) {
    out.verdict = Verdict::incomparable;
    out.certificate = "different n: " + std::to_string(cd1.n) + " vs " + std::to_string(cd2.n);
    return out;
  }
  if (!same_ambient(cd1.ambient, cd2.ambient)) {
    out.verdict = Verdict::incomparable;
    out.certificate = "different ambient: " + to_string(cd1.ambient.kind) + " vs " + to_string(cd2.ambient.kind);
    return out;
  }
  require_valid(cd1, "first");
  require_valid(cd2, "second");

  std::string diff = fingerprint_difference(canonical_invariants(cd1), canonical_invariants(cd2));
  if (!diff.empty()) {
    out.verdict = Verdict::inequivalent;
    out.certificate = "invariant mismatch: " + diff;
    return out;
  }

  WitnessSearch search(cd1, cd2);
  out.witness = search.run();
  out.isomorphisms_tried = search.tried();
  if (out.witness) {
    out.verdict = Verdict::equivalent;
    return out;
  }
  out.verdict = Verdict::inequivalent;
  out.certificate = out.isomorphisms_tried == 0
                        ? "no cellular isomorphism of the sponges"
                        : "no sign-consistent witness among " + std::to_string(out.isomorphisms_tried) +
                              " cellular isomorphisms";
  return out;
}

Report verify_witness(const CharacteristicData& cd1, const CharacteristicData& cd2, const EquivalenceWitness& w) {
  Report report;
  const auto& c1 = cd1.sponge.complex;
  const auto& c2 = cd2.sponge.complex;

  std::set<std::string> image;
  bool bijective = c1.size() == c2.size() && w.bijection.size() == c1.size();
  for (const auto& cell : c1.cells()) {
    auto it = w.bijection.find(cell.id);
    if (it == w.bijection.end() || !c2.contains(it->second) || c2.cell(it->second).dim != cell.dim) {
      bijective = false;
      break;
    }
    image.insert(it->second);
  }
  if (!bijective || image.size() != c2.size()) {
    report.fail("bijection", "cell map is not a dimension-preserving bijection");
    return report;
  }
  report.pass("bijection", "dimension-preserving bijection on " + std::to_string(c1.size()) + " cells");

  bool signs_ok = true;
  for (const auto& cell : c1.cells()) {
    auto oc = w.orientation.find(cell.id);
    if (oc == w.orientation.end() || (oc->second != 1 && oc->second != -1)) {
      signs_ok = false;
      continue;
    }
    std::map<std::string, int> pushed;
    for (const auto& [f, k] : c1.boundary(cell.id)) {
      auto of = w.orientation.find(f);
      int sf = of == w.orientation.end() ? 0 : of->second;
      pushed[w.bijection.at(f)] += oc->second * sf * k;
    }
    std::map<std::string, int> actual;
    for (const auto& [f, k] : c2.boundary(w.bijection.at(cell.id))) actual[f] += k;
    if (pushed != actual) signs_ok = false;
  }
  if (signs_ok) report.pass("incidence", "oriented incidence carried onto the second sponge");
  else report.fail("incidence", "incidence numbers do not match under the orientation signs");

  const std::size_t width = cd1.n - 1;
  if (w.A.rows() != width || w.A.cols() != width) {
    report.fail("automorphism", "A is not " + std::to_string(width) + " x " + std::to_string(width));
    return report;
  }
  Integer d = determinant(w.A);
  if (d != 1 && d != -1) report.fail("automorphism", "det A = " + d.get_str());
  else report.pass("automorphism", "A is unimodular");

  bool euler_ok = w.global_sign == 1 || w.global_sign == -1;
  for (const auto& f : cd1.sponge.facets()) {
    const std::string& g = w.bijection.at(f);
    auto lhs = w.A * scaled(cd1.mu.at(f), Integer(cd1.euler_sign.at(f)));
    int s = w.global_sign * w.orientation.at(f) * cd2.euler_sign.at(g);
    if (lhs != scaled(cd2.mu.at(g), Integer(s))) euler_ok = false;
  }
  if (euler_ok) report.pass("euler-data", "A carries every local Euler datum onto its image");
  else report.fail("euler-data", "some facet's local Euler datum is not carried onto its image");
  return report;
}

}  // namespace cx1
