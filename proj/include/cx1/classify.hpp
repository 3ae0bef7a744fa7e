#pragma once

// Equivalence of characteristic data: a cellular isomorphism of sponges and one
// lattice automorphism A carrying every local Euler datum onto its image.
//
// Verdicts are relative to cellular equivalence. Inequivalent means no
// cell-structure-preserving equivalence exists; it says nothing about
// homeomorphisms of pairs that are not cellular.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cx1/chardata.hpp"
#include "cx1/lattice.hpp"
#include "cx1/report.hpp"

namespace cx1 {

struct Fingerprint {
  std::size_t n = 0;
  std::vector<std::size_t> cells_per_dim;
  std::vector<std::size_t> betti;
  std::vector<std::vector<std::string>> torsion;
  // Per dimension, the sorted ranks of the mu span over the facets at each cell.
  std::vector<std::vector<std::size_t>> mu_ranks;
  // For each pair of facets sharing a face, the index of span(mu_a, mu_b) in its
  // saturation; sorted.
  std::vector<std::string> pair_indices;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint canonical_invariants(const CharacteristicData& cd);

// Name of the first component where two fingerprints differ, or "" if equal.
std::string fingerprint_difference(const Fingerprint& a, const Fingerprint& b);

// A cell bijection phi with orientation signs o such that
//   inc2(phi c, phi d) = o(c) o(d) inc1(c, d)            for every incidence,
//   A sigma1(F)        = global_sign o(F) sigma2(phi F)   for every facet,
// where sigma = euler_sign * mu.
struct EquivalenceWitness {
  std::map<std::string, std::string> bijection;
  std::map<std::string, int> orientation;
  IntMatrix A;
  int global_sign = 1;
};

enum class Verdict { equivalent, inequivalent, incomparable };
std::string to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::incomparable;
  std::optional<EquivalenceWitness> witness;
  std::string certificate;  // reason for an inequivalent or incomparable verdict
  std::size_t isomorphisms_tried = 0;
};

// Throws PreconditionError unless both inputs pass validate_sponge, validate_mu
// and compatibility_check. Cocycle signs are not required: data with a wrong
// Euler sign are valid inputs and compare as inequivalent.
Comparison compare(const CharacteristicData& cd1, const CharacteristicData& cd2);

// Checks a witness by direct substitution, without using the search code.
Report verify_witness(const CharacteristicData& cd1, const CharacteristicData& cd2, const EquivalenceWitness& w);

}  // namespace cx1
