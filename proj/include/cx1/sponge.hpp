#pragma once

// Sponge complexes: regular cell complexes of dimension n-2 locally modelled on
// the (n-2)-skeleton of the A_{n-1} fan, with signed incidence.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cx1/lattice.hpp"
#include "cx1/report.hpp"

namespace cx1 {

struct Cell {
  std::string id;
  int dim = 0;
  std::string label;
};

// (face id, coefficient) pairs for the codimension-one faces of a cell.
using Incidence = std::vector<std::pair<std::string, int>>;

class CellComplex {
 public:
  // Throws InputError on duplicate ids or negative dimension.
  void add_cell(const std::string& id, int dim, const std::string& label = {});
  // Throws InputError if `id` is unknown. Face ids are checked by validation.
  void set_boundary(const std::string& id, Incidence boundary);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(const std::string& id) const { return index_.count(id) > 0; }
  const Cell& cell(const std::string& id) const;
  const Incidence& boundary(const std::string& id) const;
  // Coefficient of `face` in the boundary of `cell`; 0 if absent.
  int incidence(const std::string& cell, const std::string& face) const;

  int max_dim() const;
  std::vector<std::string> cells_of_dim(int d) const;  // sorted ids
  std::vector<std::string> cofaces(const std::string& id) const;  // sorted ids
  // All faces of the closed cell, including itself. Unknown face ids are skipped.
  std::set<std::string> closure(const std::string& id) const;
  // All cells whose closure contains `id`, including itself.
  std::set<std::string> upper_set(const std::string& id) const;

  // Rows: (d-1)-cells, columns: d-cells, both in sorted id order.
  IntMatrix boundary_matrix(int d) const;

 private:
  std::size_t at(const std::string& id) const;

  std::vector<Cell> cells_;
  std::vector<Incidence> boundaries_;
  std::map<std::string, std::size_t> index_;
};

struct SpongeComplex {
  std::size_t n = 0;  // the sponge has dimension n - 2
  CellComplex complex;

  std::vector<std::string> facets() const { return complex.cells_of_dim(static_cast<int>(n) - 2); }
};

// Faces of the local model: subsets I of {0..n-1} with |I| <= n-2; face I has
// dimension |I| and corresponds to the points whose nonzero coordinates are I.
struct LocalModel {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> faces;

  static std::string face_id(const std::vector<std::size_t>& face);
  // Incidence [I : I - {i}] = (-1)^{#{x not in I : x < i}}, the transposed
  // simplicial boundary on complements.
  SpongeComplex as_sponge() const;
};

struct HomologyResult {
  std::vector<std::size_t> betti;
  std::vector<std::vector<Integer>> torsion;  // per degree
};

LocalModel local_model(std::size_t n);

Report validate_sponge(const SpongeComplex& s);

// Z_0 c Z_1 c ... c Z_{n-2}; each entry is a sorted list of cell ids.
std::vector<std::vector<std::string>> filtration(const SpongeComplex& s);

// Integral cellular homology. Throws ValidationError on inconsistent incidence.
HomologyResult homology(const CellComplex& c);
inline HomologyResult homology(const SpongeComplex& s) { return homology(s.complex); }

// True iff the facet chain sum coeffs(F) [F] has zero boundary. Throws
// InputError when a facet lacks a coefficient or a coefficient is misshapen.
bool weighted_cycle_check(const SpongeComplex& s, const std::map<std::string, IntVector>& coeffs);

struct StarResult {
  std::vector<std::string> cells;  // the upper set, sorted
  bool isomorphic = false;
  // For an isomorphic star: each cell's subset of {0..n-k-1}.
  std::map<std::string, std::vector<std::size_t>> labeling;
  std::string reason;
};

// Compares the upper set of a k-cell with the faces of local_model(n-k).
StarResult face_star(const SpongeComplex& s, const std::string& id);

std::size_t binomial(std::size_t n, std::size_t k);

// 1-dimensional complex; edge e = (tail, head) gets boundary head - tail.
CellComplex complex_from_graph(const std::vector<std::string>& vertices,
                               const std::vector<std::pair<std::string, std::string>>& edges,
                               const std::vector<std::string>& edge_ids);

// 2-dimensional complex from polygons given as closed vertex cycles. Edges are
// created as "tail-head" with tail < head; a polygon's coefficient on an edge is
// +1 when its cycle runs along the edge orientation.
CellComplex complex_from_polygons(const std::vector<std::string>& vertices,
                                  const std::vector<std::pair<std::string, std::vector<std::string>>>& polygons);

}  // namespace cx1
