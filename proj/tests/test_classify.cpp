#include <random>

#include "cx1/catalog.hpp"
#include "cx1/classify.hpp"
#include "cx1/errors.hpp"
#include "cx1/quasitoric.hpp"
#include "doctest.h"
#include "transforms.hpp"

using namespace cx1;

TEST_CASE("self comparison yields a verified witness") {
  for (const auto& entry : {g42_entry(), f3_entry(), cp3_reduction_entry(), local_model_entry(4)}) {
    Comparison c = compare(entry.data, entry.data);
    REQUIRE_MESSAGE(c.verdict == Verdict::equivalent, entry.name << ": " << c.certificate);
    REQUIRE(c.witness.has_value());
    CHECK(verify_witness(entry.data, entry.data, *c.witness).ok());
  }
}

TEST_CASE("scrambled copies are equivalent") {
  std::mt19937 rng(41);
  for (const auto& entry : {g42_entry(), f3_entry(), cp3_reduction_entry(), local_model_entry(5)}) {
    for (int trial = 0; trial < 3; ++trial) {
      IntMatrix g = fixture::random_unimodular(rng, entry.data.n - 1);
      CharacteristicData other = fixture::scrambled(entry.data, rng, g);
      CHECK(canonical_invariants(other) == canonical_invariants(entry.data));
      Comparison c = compare(entry.data, other);
      REQUIRE_MESSAGE(c.verdict == Verdict::equivalent, entry.name << ": " << c.certificate);
      CHECK(verify_witness(entry.data, other, *c.witness).ok());
    }
  }
}

TEST_CASE("a single Hopf flip is inequivalent") {
  CatalogEntry e = g42_entry();
  CharacteristicData flipped = e.data;
  flipped.euler_sign.begin()->second *= -1;
  Comparison c = compare(e.data, flipped);
  CHECK(c.verdict == Verdict::inequivalent);
  CHECK_FALSE(c.witness.has_value());
  CHECK_FALSE(c.certificate.empty());
  CHECK(to_string(c.verdict) == "Inequivalent");
}

TEST_CASE("different dimensions are incomparable") {
  Comparison c = compare(g42_entry().data, f3_entry().data);
  CHECK(c.verdict == Verdict::incomparable);
  CHECK(to_string(c.verdict) == "Incomparable");
}

TEST_CASE("fingerprints") {
  Fingerprint g = canonical_invariants(g42_entry().data);
  CHECK(g.cells_per_dim == std::vector<std::size_t>{6, 12, 11});
  CHECK(g.betti == std::vector<std::size_t>{1, 0, 4});
  Fingerprint f = canonical_invariants(f3_entry().data);
  Fingerprint p = canonical_invariants(cp3_reduction_entry().data);
  CHECK(fingerprint_difference(f, p) == "cells per dimension");
  CHECK(fingerprint_difference(g, f) == "n");
  CHECK(fingerprint_difference(g, g).empty());
}

TEST_CASE("different ambients are incomparable") {
  CHECK(compare(f3_entry().data, cp3_reduction_entry().data).verdict == Verdict::incomparable);
}

TEST_CASE("different cell structures are inequivalent") {
  SimplePolytope cube = cube_polytope(3);
  auto lambda = coloring_pullback(cube, {{"1", 1}, {"2", 2}, {"3", 3}, {"4", 1}, {"5", 2}, {"6", 3}});
  CharacteristicData cd = reduce(cube, lambda, make_subtorus(make_vector({1, 1, -1})));
  Comparison c = compare(cd, cp3_reduction_entry().data);
  CHECK(c.verdict == Verdict::inequivalent);
  CHECK(c.certificate.find("cells per dimension") != std::string::npos);
}

TEST_CASE("invalid inputs are refused") {
  CharacteristicData broken = g42_entry().data;
  broken.mu.erase(broken.mu.begin());
  CHECK_THROWS_AS(compare(broken, g42_entry().data), PreconditionError);
}

TEST_CASE("tampered witnesses fail verification") {
  CatalogEntry e = g42_entry();
  Comparison c = compare(e.data, e.data);
  REQUIRE(c.witness.has_value());
  EquivalenceWitness w = *c.witness;
  w.A = w.A * IntMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK_FALSE(verify_witness(e.data, e.data, w).ok());
  EquivalenceWitness v = *c.witness;
  auto it = v.bijection.begin();
  auto jt = std::next(it);
  std::swap(it->second, jt->second);
  CHECK_FALSE(verify_witness(e.data, e.data, v).ok());
}
