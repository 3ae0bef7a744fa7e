#pragma once

// Characteristic data on a sponge: the stabilizer circle mu(F) of each facet,
// the local Euler sign k_F with e_x = k_F mu(F), and the ambient manifold type.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cx1/lattice.hpp"
#include "cx1/report.hpp"
#include "cx1/sponge.hpp"
#include "cx1/weights.hpp"

namespace cx1 {

enum class AmbientKind { sphere, product, abstract };

std::string to_string(AmbientKind kind);
// Throws InputError for anything other than "sphere", "product", "abstract".
AmbientKind ambient_from_string(const std::string& s);

struct Ambient {
  AmbientKind kind = AmbientKind::abstract;
  // Only meaningful for products M x D^2: the restriction of the bundle to the
  // boundary is trivial.
  bool boundary_trivial = false;
  std::string note;
};

struct CharacteristicData {
  std::size_t n = 0;
  SpongeComplex sponge;
  std::map<std::string, IntVector> mu;  // facet id -> primitive vector in Z^{n-1}
  std::map<std::string, int> euler_sign;  // facet id -> +-1
  Ambient ambient;
};

struct OrbitType {
  std::string face;  // "free" for the open stratum
  std::vector<IntVector> stabilizer_span;  // HNF rows
  std::size_t orbit_dim = 0;
  std::size_t quotient_rank = 0;
};

inline const std::string kFreeStratum = "free";

// Facets of the sponge that contain `face` (including the face itself if it is one).
std::vector<std::string> facets_containing(const SpongeComplex& s, const std::string& face);

// Shape, primitivity, the rank condition n-1-k at every k-face, and pairwise
// independence of mu on facets that share a face.
Report validate_mu(const CharacteristicData& cd);

// Every facet carries a nonzero primitive mu and a sign in {+1,-1}.
bool compatibility_check(const CharacteristicData& cd);

// Sign patterns eps in {+1,-1}^3, first entry +1, with sum eps_i v_i = 0.
std::vector<std::vector<int>> vanishing_sign_patterns(const std::vector<IntVector>& vs);

// At each (n-3)-face: a +-1 relation among the three mu values must exist
// ("relation" findings), and the incidence-weighted Euler signs must match it
// up to one global sign ("sign" findings).
Report cocycle_check(const CharacteristicData& cd);

std::vector<OrbitType> orbit_types(const CharacteristicData& cd);

struct EulerCycle {
  std::map<std::string, IntVector> sigma;  // facet -> euler_sign * mu
  bool is_cycle = false;
  bool determines_e_uniquely = false;
};

// Throws ValidationError when the mu data admit no +-1 relation at some
// (n-3)-face. Wrong Euler signs are reported through is_cycle.
EulerCycle assemble_euler_cycle(const CharacteristicData& cd);

struct LocalEuler {
  IntVector mu;  // in coordinates of the lattice spanned by the weights
  int sign = 0;
};

// mu(F_ij) for the facet where coordinates i and j vanish, with the sign
// c_i / c_j. Throws PreconditionError unless ws is strictly appropriate.
LocalEuler local_euler_from_weights(const WeightSystem& ws, std::size_t i, std::size_t j);

// Characteristic data on local_model(n) assembled from local_euler_from_weights.
CharacteristicData local_characteristic_data(const WeightSystem& ws);

// Signs t(F) in {+1,-1} such that sum t(F) inc(F,G) mu(F) = 0 at every
// (n-3)-face G. The first facet of every connected piece gets +1. Returns
// nullopt if no such signs exist or some face has no +-1 relation.
std::optional<std::map<std::string, int>> solve_facet_signs(const SpongeComplex& s,
                                                            const std::map<std::string, IntVector>& mu);

}  // namespace cx1
