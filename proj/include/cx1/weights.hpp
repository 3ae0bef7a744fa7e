#pragma once

// Weight systems of tangent representations at isolated fixed points of a
// T^{n-1}-action on a 2n-manifold.
//
// A WeightSystem holds n characters alpha_1..alpha_n in Z^{n-1}, each stored
// with a chosen sign (an omniorientation). The signed cofactors
//
//     c~_i = (-1)^i det(alpha_1, ..., alpha_i omitted, ..., alpha_n)
//
// give the linear relation sum c~_i alpha_i = 0; dividing by their gcd gives
// the coefficients c_i that define the subtorus {t_1^c_1 ... t_n^c_n = 1}.
// Indices in this API are zero-based; the sign (-1)^i uses the one-based index.

#include <cstddef>
#include <optional>
#include <vector>

#include "cx1/lattice.hpp"

namespace cx1 {

struct WeightSystem {
  std::size_t n = 0;
  std::vector<IntVector> weights;
  std::optional<std::vector<int>> sign_choice;

  // Throws DimensionMismatch unless there are n >= 2 weights of length n-1.
  void check_shape() const;
  IntMatrix as_matrix() const;  // rows are the weights
};

WeightSystem make_weight_system(std::vector<IntVector> weights);

struct CramerCoefficients {
  std::vector<Integer> c_tilde;
  Integer c_gcd;
  std::vector<Integer> c;
};

struct StabilizerStructure {
  std::size_t torus_rank = 0;
  std::vector<Integer> finite_orders;
};

// Signed maximal minors, without the gcd step. Never throws for well-shaped input.
std::vector<Integer> cofactor_coefficients(const WeightSystem& ws);

// Throws DegenerateInput if every cofactor vanishes (weights of rank < n-1),
// ConsistencyError if the Cramer identity fails.
CramerCoefficients cramer_coefficients(const WeightSystem& ws);

bool is_general_position(const WeightSystem& ws);

// Throws PreconditionError if ws is not in general position.
bool is_strictly_appropriate(const WeightSystem& ws);

// Structure of T' intersected with the coordinate subtorus G_I, read off the
// Smith form of the character matrix restricted to I.
StabilizerStructure stabilizer_structure(const WeightSystem& ws, const std::vector<std::size_t>& subset);

// c_i / c_j in {+1, -1}: +1 is Hopf type, -1 anti-Hopf.
int hopf_type(const WeightSystem& ws, std::size_t i, std::size_t j);

// Tangent weights at a vertex of a locally standard T^n-action (dual basis to
// the characteristic vectors), restricted to the subtorus ker(alpha_T).
WeightSystem induced_weights(const std::vector<IntVector>& lambda_basis, const IntVector& alpha_t);

// The same weights written in a basis of the lattice they generate. Needed when
// the given coordinates describe a finite-index overlattice of the effective
// character lattice.
WeightSystem in_weight_lattice(const WeightSystem& ws);

// Applies g (rows act on column vectors) to every weight.
WeightSystem transformed(const WeightSystem& ws, const IntMatrix& g);

}  // namespace cx1
