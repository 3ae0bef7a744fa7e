#pragma once

// Locally standard torus actions over simple polytopes and their restriction
// to a codimension-one subtorus, plus the M x D^2 construction over a cell
// manifold M.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cx1/chardata.hpp"
#include "cx1/lattice.hpp"
#include "cx1/report.hpp"
#include "cx1/sponge.hpp"
#include "cx1/weights.hpp"

namespace cx1 {

// Combinatorial simple polytope: each vertex is the set of n facets through it.
struct SimplePolytope {
  std::size_t n = 0;
  std::vector<std::string> facets;
  std::vector<std::vector<std::string>> vertices;

  std::size_t facet_index(const std::string& id) const;  // throws InputError
  // Facet indices at vertex v, sorted.
  std::vector<std::size_t> vertex_facets(std::size_t v) const;
  bool adjacent(const std::string& a, const std::string& b) const;
};

// n >= 2, distinct facet ids, each vertex an n-set of known facets, vertices
// distinct, every facet used, every edge (n-1 facets) in exactly two vertices,
// connected vertex graph.
Report validate_polytope(const SimplePolytope& P);

// Faces of dimension <= n-2 as sorted facet-index sets, ordered by size then
// lexicographically.
std::vector<std::vector<std::size_t>> proper_faces(const SimplePolytope& P, std::size_t min_facets);

using CharacteristicFunction = std::map<std::string, IntVector>;

struct SubtorusChoice {
  IntVector alpha_t;  // the character G -> G/T
  IntMatrix complement;  // rows with complement * kernel_basis^T = I
  IntMatrix kernel_basis;  // rows span ker alpha_t
};

// Throws DegenerateInput unless alpha is primitive.
SubtorusChoice make_subtorus(const IntVector& alpha);

// Determinant +-1 at every vertex, and unimodular extension on every face.
Report validate_star(const SimplePolytope& P, const CharacteristicFunction& lambda);

// Dual basis to the characteristic vectors at vertex v (facets in sorted order).
// Throws StarConditionError unless the determinant is +-1.
std::vector<IntVector> vertex_weights(const SimplePolytope& P, const CharacteristicFunction& lambda, std::size_t v);

// All primitive alpha (first nonzero entry positive) with |entries| <= bound and
// <alpha, lambda(F)> = +-1 for every facet.
std::vector<SubtorusChoice> find_strict_subtorus(const SimplePolytope& P, const CharacteristicFunction& lambda,
                                                 long bound = 3);

// Primitive <a,l2> l1 - <a,l1> l2, in complement coordinates. Throws
// DegenerateInput when both pairings vanish or the result is zero.
IntVector induced_mu(const IntVector& lambda1, const IntVector& lambda2, const SubtorusChoice& st);

// Characteristic data of the restricted action on the sphere X/T. Throws
// StarConditionError, PreconditionError (alpha not strict), ValidationError
// (bad polytope) or ConsistencyError (Euler signs disagree between vertices).
CharacteristicData reduce(const SimplePolytope& P, const CharacteristicFunction& lambda, const SubtorusChoice& st);

// lambda(F) = e_{coloring(F)} with colors 1..n. Throws ColoringError naming an
// adjacent pair with equal colors, InputError for colors out of range.
CharacteristicFunction coloring_pullback(const SimplePolytope& P, const std::map<std::string, int>& coloring);

// Characteristic data on the (n-2)-skeleton of an (n-1)-dimensional cell
// manifold M whose top cells carry lambda. Every k-cell must lie in exactly
// n-k top cells (ValidationError otherwise). mu is oriented so the Euler chain
// is a cycle; the Euler signs are the pairing products.
CharacteristicData cell_manifold_data(const CellComplex& M, std::size_t n, const CharacteristicFunction& lambda,
                                      const SubtorusChoice& st);

SimplePolytope simplex_polytope(std::size_t n);
// Facets "1".."2n"; facet i and i+n are opposite. cube(2) is the square with
// facets in cyclic order.
SimplePolytope cube_polytope(std::size_t n);
// Prism over an m-gon: sides "1".."m", bottom "m+1", top "m+2".
SimplePolytope prism_polytope(std::size_t m);

}  // namespace cx1
