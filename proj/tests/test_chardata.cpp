#include "cx1/catalog.hpp"
#include "cx1/chardata.hpp"
#include "cx1/errors.hpp"
#include "doctest.h"

using namespace cx1;

namespace {

CharacteristicData model3(const IntVector& m1, const IntVector& m2, const IntVector& m3) {
  CharacteristicData cd;
  cd.n = 3;
  cd.sponge = local_model(3).as_sponge();
  auto f = cd.sponge.facets();
  REQUIRE(f.size() == 3);
  cd.mu = {{f[0], m1}, {f[1], m2}, {f[2], m3}};
  for (const auto& id : f) cd.euler_sign[id] = 1;
  return cd;
}

bool has_failure(const Report& r, const std::string& check) {
  for (const auto& f : r.findings())
    if (f.check == check && !f.passed) return true;
  return false;
}

WeightSystem g42() {
  return make_weight_system(
      {make_vector({1, 0, -1}), make_vector({0, 1, -1}), make_vector({-1, 0, -1}), make_vector({0, -1, -1})});
}

WeightSystem standard(std::size_t n) {
  std::vector<IntVector> w;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector e(n - 1, 0);
    e[i] = 1;
    w.push_back(e);
  }
  w.push_back(IntVector(n - 1, -1));
  return make_weight_system(w);
}

}  // namespace

TEST_CASE("validate_mu examples") {
  CHECK(validate_mu(model3(make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1}))).ok());
  Report r = validate_mu(model3(make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 0})));
  CHECK(has_failure(r, "mu-pairs"));
  CHECK_FALSE(has_failure(r, "mu-rank"));
  CHECK_FALSE(validate_mu(model3(make_vector({1, 0}), make_vector({1, 0}), make_vector({1, 0}))).ok());
  CHECK(has_failure(validate_mu(model3(make_vector({2, 0}), make_vector({0, 1}), make_vector({1, 1}))), "mu-shape"));
  CHECK(has_failure(validate_mu(model3(make_vector({1, 0, 0}), make_vector({0, 1}), make_vector({1, 1}))),
                    "mu-shape"));
}

TEST_CASE("compatibility") {
  CharacteristicData cd = model3(make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1}));
  CHECK(compatibility_check(cd));
  auto zero = cd;
  zero.euler_sign.begin()->second = 0;
  CHECK_FALSE(compatibility_check(zero));
  auto wide = cd;
  wide.mu.begin()->second = make_vector({2, 2});
  CHECK_FALSE(compatibility_check(wide));
}

TEST_CASE("cocycle relation") {
  CHECK(vanishing_sign_patterns({make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1})}) ==
        std::vector<std::vector<int>>{{1, 1, -1}});
  CHECK(vanishing_sign_patterns({make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 2})}).empty());
  CHECK_FALSE(has_failure(cocycle_check(model3(make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1}))),
                          "relation"));
  CharacteristicData bad = model3(make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 2}));
  CHECK(has_failure(cocycle_check(bad), "relation"));
  CHECK_THROWS_AS(assemble_euler_cycle(bad), ValidationError);
}

TEST_CASE("orbit types") {
  CharacteristicData cd = model3(make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1}));
  auto types = orbit_types(cd);
  bool saw_free = false, saw_fixed = false, saw_facet = false;
  for (const auto& t : types) {
    if (t.face == kFreeStratum) {
      saw_free = true;
      CHECK(t.stabilizer_span.empty());
      CHECK(t.orbit_dim == 2);
    } else if (cd.sponge.complex.cell(t.face).dim == 0) {
      saw_fixed = true;
      CHECK(t.stabilizer_span.size() == 2);
      CHECK(t.orbit_dim == 0);
    } else {
      saw_facet = true;
      CHECK(t.stabilizer_span.size() == 1);
      CHECK(t.orbit_dim == 1);
    }
    CHECK(t.quotient_rank == t.orbit_dim);
  }
  CHECK((saw_free && saw_fixed && saw_facet));
}

TEST_CASE("local Euler data from weights") {
  CHECK(local_euler_from_weights(g42(), 0, 1).sign == -1);
  CHECK(local_euler_from_weights(g42(), 2, 3).sign == -1);
  CHECK(local_euler_from_weights(g42(), 0, 2).sign == 1);
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) CHECK(local_euler_from_weights(standard(n), i, j).sign == 1);
  WeightSystem loose = make_weight_system({make_vector({2, 0}), make_vector({0, 2}), make_vector({-1, -1})});
  CHECK_THROWS_AS(local_euler_from_weights(loose, 0, 1), PreconditionError);
}

TEST_CASE("local characteristic data are valid cycles") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CharacteristicData cd = local_characteristic_data(standard(n));
    CHECK(validate_mu(cd).ok());
    CHECK(cocycle_check(cd).ok());
    CHECK(assemble_euler_cycle(cd).is_cycle);
  }
  CharacteristicData g = local_characteristic_data(g42());
  CHECK(validate_mu(g).ok());
  CHECK(cocycle_check(g).ok());
  CHECK(assemble_euler_cycle(g).is_cycle);
}

TEST_CASE("euler cycle on the Grassmannian example") {
  CatalogEntry e = g42_entry();
  EulerCycle ec = assemble_euler_cycle(e.data);
  CHECK(ec.is_cycle);
  CHECK(ec.determines_e_uniquely);
  CHECK(weighted_cycle_check(e.data.sponge, ec.sigma));

  // Flipping one sign breaks the cycle and is reported by the sign check.
  CharacteristicData flipped = e.data;
  flipped.euler_sign.begin()->second *= -1;
  CHECK_FALSE(assemble_euler_cycle(flipped).is_cycle);
  Report r = cocycle_check(flipped);
  CHECK(has_failure(r, "sign"));
  CHECK_FALSE(has_failure(r, "relation"));
}

TEST_CASE("euler cycle is invariant under a lattice automorphism") {
  CatalogEntry e = g42_entry();
  EulerCycle ec = assemble_euler_cycle(e.data);
  IntMatrix g{{1, 2, 0}, {0, 1, 0}, {1, 1, 1}};
  std::map<std::string, IntVector> moved;
  for (const auto& [f, v] : ec.sigma) moved[f] = g * v;
  CHECK(weighted_cycle_check(e.data.sponge, moved));
}

TEST_CASE("facet signs solver") {
  CatalogEntry e = g42_entry();
  auto signs = solve_facet_signs(e.data.sponge, e.data.mu);
  REQUIRE(signs.has_value());
  std::map<std::string, IntVector> sigma;
  for (const auto& [f, v] : e.data.mu) sigma[f] = scaled(v, signs->at(f));
  CHECK(weighted_cycle_check(e.data.sponge, sigma));
}

TEST_CASE("ambient names") {
  CHECK(ambient_from_string("sphere") == AmbientKind::sphere);
  CHECK(to_string(AmbientKind::product) == "product");
  CHECK_THROWS_AS(ambient_from_string("torus"), InputError);
}
