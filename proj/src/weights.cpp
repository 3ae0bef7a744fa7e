#include "cx1/weights.hpp"

#include <algorithm>
#include <string>

#include "cx1/errors.hpp"

namespace cx1 {

void WeightSystem::check_shape() const {
  if (n < 2) throw DimensionMismatch("weight system needs n >= 2");
  if (weights.size() != n)
    throw DimensionMismatch("weight system: expected " + std::to_string(n) + " weights, got " +
                            std::to_string(weights.size()));
  for (const auto& w : weights)
    if (w.size() != n - 1)
      throw DimensionMismatch("weight system: weight " + to_string(w) + " is not in Z^" + std::to_string(n - 1));
  if (sign_choice && sign_choice->size() != n)
    throw DimensionMismatch("weight system: sign choice has wrong length");
}

IntMatrix WeightSystem::as_matrix() const { return IntMatrix::from_rows(weights, n - 1); }

WeightSystem make_weight_system(std::vector<IntVector> weights) {
  WeightSystem ws;
  ws.n = weights.size();
  ws.weights = std::move(weights);
  ws.check_shape();
  return ws;
}

std::vector<Integer> cofactor_coefficients(const WeightSystem& ws) {
  ws.check_shape();
  const std::size_t n = ws.n;
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t j = 0, r = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t c = 0; c + 1 < n; ++c) minor(r, c) = ws.weights[j][c];
      ++r;
    }
    Integer d = determinant(minor);
    // (-1)^i with one-based i.
    out[i] = (i % 2 == 0) ? Integer(-d) : d;
  }
  return out;
}

CramerCoefficients cramer_coefficients(const WeightSystem& ws) {
  CramerCoefficients cc;
  cc.c_tilde = cofactor_coefficients(ws);
  cc.c_gcd = content(cc.c_tilde);
  if (cc.c_gcd == 0) throw DegenerateInput("cramer_coefficients: weights span a sublattice of rank < n-1");
  cc.c.reserve(ws.n);
  for (const auto& x : cc.c_tilde) cc.c.push_back(x / cc.c_gcd);

  IntVector sum(ws.n - 1, Integer(0));
  for (std::size_t i = 0; i < ws.n; ++i) sum = added(sum, scaled(ws.weights[i], cc.c_tilde[i]));
  if (!is_zero(sum)) throw ConsistencyError("Cramer identity violated: residual " + to_string(sum));
  return cc;
}

bool is_general_position(const WeightSystem& ws) {
  auto ct = cofactor_coefficients(ws);
  return std::none_of(ct.begin(), ct.end(), [](const Integer& x) { return x == 0; });
}

bool is_strictly_appropriate(const WeightSystem& ws) {
  if (!is_general_position(ws)) throw PreconditionError("is_strictly_appropriate: weights not in general position");
  auto cc = cramer_coefficients(ws);
  return std::all_of(cc.c.begin(), cc.c.end(), [](const Integer& x) { return abs(x) == 1; });
}

StabilizerStructure stabilizer_structure(const WeightSystem& ws, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw DegenerateInput("stabilizer_structure: empty index set");
  if (!is_general_position(ws)) throw PreconditionError("stabilizer_structure: weights not in general position");
  auto cc = cramer_coefficients(ws);

  std::vector<std::size_t> I(subset);
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  for (auto i : I)
    if (i >= ws.n) throw IndexError("stabilizer_structure: index " + std::to_string(i) + " out of range");

  // T' cap G_I = kernel of the character t -> prod_{i in I} t_i^{c_i} on T^|I|.
  // Its dual is coker of the transposed character matrix: rank |I| - r torus,
  // finite part from the Smith invariants.
  IntMatrix character(1, I.size());
  for (std::size_t k = 0; k < I.size(); ++k) character(0, k) = cc.c[I[k]];
  SmithDecomposition snf = smith_normal_form(character);

  StabilizerStructure out;
  out.torus_rank = I.size() - snf.rank;
  out.finite_orders = snf.torsion();
  return out;
}

int hopf_type(const WeightSystem& ws, std::size_t i, std::size_t j) {
  if (i >= ws.n || j >= ws.n) throw IndexError("hopf_type: index out of range");
  if (i == j) throw IndexError("hopf_type: indices must differ");
  if (!is_strictly_appropriate(ws)) throw PreconditionError("hopf_type: weight system is not strictly appropriate");
  auto cc = cramer_coefficients(ws);
  return (cc.c[i] * cc.c[j] > 0) ? 1 : -1;
}

WeightSystem induced_weights(const std::vector<IntVector>& lambda_basis, const IntVector& alpha_t) {
  const std::size_t n = lambda_basis.size();
  if (n < 2) throw DimensionMismatch("induced_weights: need at least two characteristic vectors");
  if (alpha_t.size() != n) throw DimensionMismatch("induced_weights: alpha_T has wrong dimension");
  IntMatrix lambda = IntMatrix::from_rows(lambda_basis, n);
  Integer det = determinant(lambda);
  if (det != 1 && det != -1)
    throw StarConditionError("induced_weights: characteristic vectors have determinant " + det.get_str());
  if (!is_primitive(alpha_t)) throw DegenerateInput("induced_weights: alpha_T " + to_string(alpha_t) + " is not primitive");

  // Rows of (lambda^{-1})^T are the dual basis.
  IntMatrix dual = unimodular_inverse(lambda).transposed();
  KernelSplit split = split_along(alpha_t);

  WeightSystem ws;
  ws.n = n;
  for (std::size_t i = 0; i < n; ++i) ws.weights.push_back(split.kernel_basis * dual.row(i));
  return ws;
}

WeightSystem in_weight_lattice(const WeightSystem& ws) {
  ws.check_shape();
  IntMatrix basis = hermite_normal_form(ws.as_matrix());
  if (basis.rows() != ws.n - 1) throw DegenerateInput("in_weight_lattice: weights do not span a full-rank lattice");
  WeightSystem out;
  out.n = ws.n;
  out.sign_choice = ws.sign_choice;
  for (const auto& w : ws.weights) {
    IntVector coords;
    if (!coordinates_in_lattice(basis, w, coords))
      throw ConsistencyError("in_weight_lattice: weight outside its own span");
    out.weights.push_back(coords);
  }
  return out;
}

WeightSystem transformed(const WeightSystem& ws, const IntMatrix& g) {
  WeightSystem out = ws;
  for (auto& w : out.weights) w = g * w;
  return out;
}

}  // namespace cx1
