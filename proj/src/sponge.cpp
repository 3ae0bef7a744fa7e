#include "cx1/sponge.hpp"

#include <algorithm>
#include <functional>

#include "cx1/errors.hpp"

namespace cx1 {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------------------
// CellComplex

void CellComplex::add_cell(const std::string& id, int dim, const std::string& label) {
  if (dim < 0) throw InputError("cell " + id + " has negative dimension");
  if (index_.count(id)) throw InputError("duplicate cell id " + id);
  index_[id] = cells_.size();
  cells_.push_back({id, dim, label});
  boundaries_.emplace_back();
}

void CellComplex::set_boundary(const std::string& id, Incidence boundary) {
  boundaries_[at(id)] = std::move(boundary);
}

std::size_t CellComplex::at(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("unknown cell id " + id);
  return it->second;
}

const Cell& CellComplex::cell(const std::string& id) const { return cells_[at(id)]; }

const Incidence& CellComplex::boundary(const std::string& id) const { return boundaries_[at(id)]; }

int CellComplex::incidence(const std::string& cell, const std::string& face) const {
  int total = 0;
  for (const auto& [f, k] : boundary(cell))
    if (f == face) total += k;
  return total;
}

int CellComplex::max_dim() const {
  int d = -1;
  for (const auto& c : cells_) d = std::max(d, c.dim);
  return d;
}

std::vector<std::string> CellComplex::cells_of_dim(int d) const {
  std::vector<std::string> out;
  for (const auto& c : cells_)
    if (c.dim == d) out.push_back(c.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> CellComplex::cofaces(const std::string& id) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (const auto& [f, k] : boundaries_[i])
      if (f == id) {
        out.push_back(cells_[i].id);
        break;
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::string> CellComplex::closure(const std::string& id) const {
  std::set<std::string> seen;
  std::vector<std::string> stack{id};
  while (!stack.empty()) {
    std::string cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    if (!contains(cur)) continue;
    for (const auto& [f, k] : boundary(cur))
      if (contains(f) && !seen.count(f)) stack.push_back(f);
  }
  std::erase_if(seen, [&](const std::string& s) { return !contains(s); });
  return seen;
}

std::set<std::string> CellComplex::upper_set(const std::string& id) const {
  std::set<std::string> out;
  for (const auto& c : cells_)
    if (closure(c.id).count(id)) out.insert(c.id);
  return out;
}

IntMatrix CellComplex::boundary_matrix(int d) const {
  auto rows = cells_of_dim(d - 1);
  auto cols = cells_of_dim(d);
  std::map<std::string, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [f, k] : boundary(cols[c])) {
      auto it = row_index.find(f);
      if (it == row_index.end())
        throw ValidationError("cell " + cols[c] + " lists " + f + " which is not a " + std::to_string(d - 1) + "-cell");
      m(it->second, c) += k;
    }
  return m;
}

// ---------------------------------------------------------------------------
// Local model

std::string LocalModel::face_id(const std::vector<std::size_t>& face) {
  std::string s = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(face[i] + 1);
  }
  return s + "}";
}

SpongeComplex LocalModel::as_sponge() const {
  SpongeComplex s;
  s.n = n;
  for (const auto& face : faces) {
    std::string label;
    if (face.size() + 2 == n) {
      // Facet F_{a,b}: the two coordinates that vanish.
      std::vector<std::size_t> zero;
      for (std::size_t x = 0; x < n; ++x)
        if (!std::binary_search(face.begin(), face.end(), x)) zero.push_back(x);
      label = "F" + face_id(zero);
    }
    s.complex.add_cell(face_id(face), static_cast<int>(face.size()), label);
  }
  for (const auto& face : faces) {
    Incidence boundary;
    for (std::size_t p = 0; p < face.size(); ++p) {
      std::size_t removed = face[p];
      std::size_t zeros_below = 0;
      for (std::size_t x = 0; x < removed; ++x)
        if (!std::binary_search(face.begin(), face.end(), x)) ++zeros_below;
      std::vector<std::size_t> smaller(face);
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(p));
      boundary.emplace_back(face_id(smaller), zeros_below % 2 ? -1 : 1);
    }
    s.complex.set_boundary(face_id(face), std::move(boundary));
  }
  return s;
}

LocalModel local_model(std::size_t n) {
  if (n < 2) throw DegenerateInput("local_model: n must be at least 2");
  LocalModel m;
  m.n = n;
  for (std::size_t size = 0; size + 2 <= n; ++size) {
    // All size-subsets of {0..n-1} in lexicographic order.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    std::vector<std::vector<std::size_t>> batch;
    do {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) face.push_back(i);
      batch.push_back(face);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(batch.begin(), batch.end());
    m.faces.insert(m.faces.end(), batch.begin(), batch.end());
  }
  return m;
}

// ---------------------------------------------------------------------------
// Validation

Report validate_sponge(const SpongeComplex& s) {
  Report report;
  const auto& cx = s.complex;
  if (s.n < 2) {
    report.fail("dimension", "n must be at least 2, got " + std::to_string(s.n));
    return report;
  }
  const int top = static_cast<int>(s.n) - 2;

  bool dims_ok = true;
  for (const auto& c : cx.cells())
    if (c.dim > top) {
      dims_ok = false;
      report.fail("dimension", "cell " + c.id + " has dim " + std::to_string(c.dim) + " > n-2 = " + std::to_string(top));
    }
  if (dims_ok) report.pass("dimension", "all cells in dims 0.." + std::to_string(top));

  bool incidence_ok = true;
  for (const auto& c : cx.cells()) {
    const auto& b = cx.boundary(c.id);
    if (c.dim == 0 && !b.empty()) {
      incidence_ok = false;
      report.fail("incidence", "0-cell " + c.id + " has a nonempty boundary");
    }
    if (c.dim > 0 && b.empty()) {
      incidence_ok = false;
      report.fail("incidence", "cell " + c.id + " has an empty boundary");
    }
    std::set<std::string> seen;
    for (const auto& [f, k] : b) {
      if (!cx.contains(f)) {
        incidence_ok = false;
        report.fail("incidence", "cell " + c.id + " references unknown cell " + f);
        continue;
      }
      if (cx.cell(f).dim != c.dim - 1) {
        incidence_ok = false;
        report.fail("incidence", "cell " + c.id + " references " + f + " of wrong dimension");
      }
      if (k != 1 && k != -1) {
        incidence_ok = false;
        report.fail("incidence", "cell " + c.id + " has coefficient " + std::to_string(k) + " on " + f);
      }
      if (!seen.insert(f).second) {
        incidence_ok = false;
        report.fail("incidence", "cell " + c.id + " lists " + f + " twice");
      }
    }
  }
  if (incidence_ok) report.pass("incidence", "signed incidence well-formed");
  else return report;

  bool dd_ok = true;
  for (const auto& c : cx.cells()) {
    if (c.dim < 2) continue;
    std::map<std::string, int> dd;
    for (const auto& [f, k] : cx.boundary(c.id))
      for (const auto& [g, l] : cx.boundary(f)) dd[g] += k * l;
    for (const auto& [g, v] : dd)
      if (v != 0) {
        dd_ok = false;
        report.fail("boundary-squared", "dd(" + c.id + ") has coefficient " + std::to_string(v) + " on " + g);
      }
  }
  if (dd_ok) report.pass("boundary-squared", "dd = 0 on every cell");

  // Upper-set counts C(n-i, d-i) for every i-cell and every d in i+1..n-2.
  std::map<std::string, std::set<std::string>> closures;
  for (const auto& c : cx.cells()) closures[c.id] = cx.closure(c.id);
  bool counts_ok = true;
  for (const auto& c : cx.cells()) {
    for (int d = c.dim + 1; d <= top; ++d) {
      std::size_t count = 0;
      for (const auto& other : cx.cells())
        if (other.dim == d && closures[other.id].count(c.id)) ++count;
      std::size_t want = binomial(s.n - static_cast<std::size_t>(c.dim), static_cast<std::size_t>(d - c.dim));
      if (count != want) {
        counts_ok = false;
        report.fail("upper-set-counts", std::to_string(c.dim) + "-cell " + c.id + " lies in " + std::to_string(count) +
                                            " cells of dim " + std::to_string(d) + ", expected " + std::to_string(want));
      }
    }
  }
  if (counts_ok) report.pass("upper-set-counts", "every i-cell lies in C(n-i,d-i) d-cells");
  return report;
}

std::vector<std::vector<std::string>> filtration(const SpongeComplex& s) {
  std::vector<std::vector<std::string>> out;
  for (int k = 0; k + 2 <= static_cast<int>(s.n); ++k) {
    std::vector<std::string> level;
    for (const auto& c : s.complex.cells())
      if (c.dim <= k) level.push_back(c.id);
    std::sort(level.begin(), level.end());
    out.push_back(std::move(level));
  }
  return out;
}

HomologyResult homology(const CellComplex& c) {
  HomologyResult out;
  const int top = c.max_dim();
  if (top < 0) return out;

  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  std::vector<std::vector<Integer>> torsion_of(static_cast<std::size_t>(top) + 2);
  IntMatrix previous;
  for (int d = 1; d <= top; ++d) {
    IntMatrix m = c.boundary_matrix(d);
    if (d >= 2 && previous.rows() > 0 && m.cols() > 0 && !((previous * m) == IntMatrix(previous.rows(), m.cols())))
      throw ValidationError("homology: boundary of boundary is nonzero in degree " + std::to_string(d));
    SmithDecomposition snf = smith_normal_form(m);
    ranks[static_cast<std::size_t>(d)] = snf.rank;
    torsion_of[static_cast<std::size_t>(d)] = snf.torsion();
    previous = std::move(m);
  }
  for (int d = 0; d <= top; ++d) {
    auto ud = static_cast<std::size_t>(d);
    std::size_t cells = c.cells_of_dim(d).size();
    out.betti.push_back(cells - ranks[ud] - ranks[ud + 1]);
    out.torsion.push_back(torsion_of[ud + 1]);
  }
  return out;
}

bool weighted_cycle_check(const SpongeComplex& s, const std::map<std::string, IntVector>& coeffs) {
  const auto facets = s.facets();
  const std::size_t width = s.n - 1;
  for (const auto& [id, v] : coeffs) {
    if (!s.complex.contains(id) || s.complex.cell(id).dim != static_cast<int>(s.n) - 2)
      throw InputError("weighted_cycle_check: " + id + " is not a facet");
    if (v.size() != width) throw InputError("weighted_cycle_check: coefficient of " + id + " is not in Z^" + std::to_string(width));
  }
  std::map<std::string, IntVector> boundary;
  for (const auto& f : facets) {
    auto it = coeffs.find(f);
    if (it == coeffs.end()) throw InputError("weighted_cycle_check: no coefficient for facet " + f);
    for (const auto& [g, k] : s.complex.boundary(f)) {
      auto& acc = boundary.try_emplace(g, IntVector(width, Integer(0))).first->second;
      acc = added(acc, scaled(it->second, Integer(k)));
    }
  }
  return std::all_of(boundary.begin(), boundary.end(), [](const auto& kv) { return is_zero(kv.second); });
}

StarResult face_star(const SpongeComplex& s, const std::string& id) {
  StarResult out;
  const auto& cx = s.complex;
  const std::set<std::string> upper = cx.upper_set(id);
  out.cells.assign(upper.begin(), upper.end());
  const int k = cx.cell(id).dim;
  if (static_cast<std::size_t>(k) + 2 > s.n) {
    out.reason = "cell dimension exceeds n-2";
    return out;
  }
  const std::size_t m = s.n - static_cast<std::size_t>(k);

  std::map<std::string, std::set<std::string>> closures;
  for (const auto& u : upper) closures[u] = cx.closure(u);

  // Rays of the model are the (k+1)-cells above the base; every other element
  // is labelled by the rays below it.
  std::vector<std::string> rays;
  for (const auto& u : upper)
    if (cx.cell(u).dim == k + 1) rays.push_back(u);
  const std::size_t expected_rays = (m >= 3) ? m : 0;
  if (rays.size() != expected_rays) {
    out.reason = std::to_string(rays.size()) + " cells of dim " + std::to_string(k + 1) + " above the base, expected " +
                 std::to_string(expected_rays);
    return out;
  }

  std::map<std::vector<std::size_t>, std::string> by_label;
  for (const auto& u : upper) {
    std::vector<std::size_t> label;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (closures[u].count(rays[r])) label.push_back(r);
    const auto j = static_cast<std::size_t>(cx.cell(u).dim - k);
    if (label.size() != j) {
      out.reason = "cell " + u + " has " + std::to_string(label.size()) + " rays below it, expected " + std::to_string(j);
      return out;
    }
    if (!by_label.emplace(label, u).second) {
      out.reason = "cells " + by_label[label] + " and " + u + " share the same ray set";
      return out;
    }
    out.labeling[u] = label;
  }
  for (std::size_t j = 0; j + 2 <= m; ++j) {
    std::size_t count = 0;
    for (const auto& [u, label] : out.labeling) count += (label.size() == j) ? 1 : 0;
    if (count != binomial(m, j)) {
      out.reason = std::to_string(count) + " cells of relative dim " + std::to_string(j) + ", expected " +
                   std::to_string(binomial(m, j));
      return out;
    }
  }
  for (const auto& [u, lu] : out.labeling)
    for (const auto& [w, lw] : out.labeling) {
      bool below = closures[w].count(u) > 0;
      bool subset = std::includes(lw.begin(), lw.end(), lu.begin(), lu.end());
      if (below != subset) {
        out.reason = "order between " + u + " and " + w + " does not match subset inclusion";
        return out;
      }
    }
  out.isomorphic = true;
  return out;
}

// ---------------------------------------------------------------------------
// Builders

CellComplex complex_from_graph(const std::vector<std::string>& vertices,
                               const std::vector<std::pair<std::string, std::string>>& edges,
                               const std::vector<std::string>& edge_ids) {
  if (edges.size() != edge_ids.size()) throw InputError("complex_from_graph: edge ids do not match edges");
  CellComplex cx;
  for (const auto& v : vertices) cx.add_cell(v, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    cx.add_cell(edge_ids[e], 1);
    cx.set_boundary(edge_ids[e], {{edges[e].second, 1}, {edges[e].first, -1}});
  }
  return cx;
}

CellComplex complex_from_polygons(const std::vector<std::string>& vertices,
                                  const std::vector<std::pair<std::string, std::vector<std::string>>>& polygons) {
  CellComplex cx;
  for (const auto& v : vertices) cx.add_cell(v, 0);
  for (const auto& [pid, cycle] : polygons) {
    Incidence boundary;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::string& a = cycle[i];
      const std::string& b = cycle[(i + 1) % cycle.size()];
      const bool forward = a < b;
      const std::string eid = forward ? a + "-" + b : b + "-" + a;
      if (!cx.contains(eid)) {
        cx.add_cell(eid, 1);
        cx.set_boundary(eid, {{forward ? b : a, 1}, {forward ? a : b, -1}});
      }
      boundary.emplace_back(eid, forward ? 1 : -1);
    }
    cx.add_cell(pid, 2);
    cx.set_boundary(pid, std::move(boundary));
  }
  return cx;
}

}  // namespace cx1
