#include <random>

#include "cx1/errors.hpp"
#include "cx1/lattice.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cx1;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

oracle::Matrix to_oracle(const IntMatrix& m) {
  oracle::Matrix out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(determinant(IntMatrix::identity(3)) == 1);
  CHECK(determinant(IntMatrix{{1, 0, -1}, {0, 1, -1}, {-1, 0, -1}}) == -2);
  CHECK(determinant(IntMatrix{{0, 1, -1}, {-1, 0, -1}, {0, -1, -1}}) == -2);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 4;
    IntMatrix m = random_matrix(rng, n, n, 6);
    CHECK(determinant(m) == oracle::det(to_oracle(m)));
  }
}

TEST_CASE("smith normal form examples") {
  SmithDecomposition z = smith_normal_form(IntMatrix(2, 2));
  CHECK(z.rank == 0);
  CHECK(z.D == IntMatrix(2, 2));

  SmithDecomposition d = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(d.D == IntMatrix{{1, 0}, {0, 6}});
  CHECK(d.torsion() == std::vector<Integer>{6});

  SmithDecomposition id = smith_normal_form(IntMatrix::identity(4));
  CHECK(id.rank == 4);
  CHECK(id.D == IntMatrix::identity(4));
}

TEST_CASE("smith normal form invariants on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix a = random_matrix(rng, r, c, 5);
    SmithDecomposition s = smith_normal_form(a);
    REQUIRE(s.U * a * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
      CHECK(diag[i] >= 0);
      if (i + 1 < diag.size() && diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    if (r <= 4 && c <= 4) {
      auto [rk, factors] = oracle::invariant_factors(to_oracle(a));
      CHECK(s.rank == rk);
      CHECK(s.torsion() == factors);
    }
  }
}

TEST_CASE("hermite normal form") {
  IntMatrix h = hermite_normal_form(IntMatrix{{2, 4}, {1, 3}, {3, 7}});
  CHECK(h == IntMatrix{{1, 1}, {0, 2}});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 4, 4);
    IntMatrix hn = hermite_normal_form(a);
    CHECK(hn.rows() == rank(a));
    // Same row lattice: each row of one is an integer combination of the other.
    IntVector coords;
    for (const auto& row : a.row_vectors())
      if (!is_zero(row)) CHECK(coordinates_in_lattice(hn, row, coords));
  }
}

TEST_CASE("integer kernel examples") {
  auto k = integer_kernel(IntMatrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(primitive(k[0]) == make_vector({1, -1}));

  // Columns are the G(2,4) weights.
  IntMatrix w = IntMatrix::from_columns(
      {make_vector({1, 0, -1}), make_vector({0, 1, -1}), make_vector({-1, 0, -1}), make_vector({0, -1, -1})}, 3);
  auto kw = integer_kernel(w);
  REQUIRE(kw.size() == 1);
  CHECK(primitive(kw[0]) == make_vector({1, -1, 1, -1}));

  CHECK(integer_kernel(IntMatrix::identity(3)).empty());
}

TEST_CASE("integer kernel is saturated") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + rng() % 3, c = r + 1 + rng() % 3;
    IntMatrix a = random_matrix(rng, r, c, 4);
    auto basis = integer_kernel(a);
    CHECK(basis.size() == c - rank(a));
    for (const auto& v : basis) CHECK(is_zero(a * v));
    if (!basis.empty()) CHECK(is_unimodular_extension(basis, c));
  }
}

TEST_CASE("primitive") {
  CHECK(primitive(make_vector({2, -2, 2, -2})) == make_vector({1, -1, 1, -1}));
  CHECK(primitive(make_vector({0, 0, 5})) == make_vector({0, 0, 1}));
  CHECK(primitive(make_vector({3, 6, 9})) == make_vector({1, 2, 3}));
  CHECK(primitive(make_vector({-3, 6})) == make_vector({1, -2}));
  CHECK(primitive_keep_sign(make_vector({-3, 6})) == make_vector({-1, 2}));
  CHECK_THROWS_AS(primitive(make_vector({0, 0})), DegenerateInput);

  std::mt19937 rng(9);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector v = make_vector({d(rng), d(rng), d(rng)});
    if (is_zero(v)) continue;
    IntVector p = primitive(v);
    CHECK(content(p) == 1);
    Integer g = content(v);
    CHECK((v == scaled(p, g) || v == scaled(p, -g)));
  }
}

TEST_CASE("unimodular extension") {
  CHECK(is_unimodular_extension({make_vector({1, 0, 0}), make_vector({0, 1, 0})}, 3));
  CHECK_FALSE(is_unimodular_extension({make_vector({2, 0}), make_vector({0, 1})}, 2));
  CHECK(is_unimodular_extension({make_vector({1, 0}), make_vector({0, 1})}, 2));
  CHECK(is_unimodular_extension({make_vector({2, 3})}, 2));
}

TEST_CASE("unimodular inverse") {
  IntMatrix a{{2, 1}, {1, 1}};
  CHECK(a * unimodular_inverse(a) == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), DegenerateInput);
}

TEST_CASE("split along a character") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    IntVector alpha = make_vector({d(rng), d(rng), d(rng), d(rng)});
    if (is_zero(alpha)) continue;
    alpha = primitive_keep_sign(alpha);
    KernelSplit s = split_along(alpha);
    CHECK(s.kernel_basis.rows() == 3);
    CHECK(is_zero(s.kernel_basis * alpha));
    CHECK(s.projection * s.kernel_basis.transposed() == IntMatrix::identity(3));
    auto rows = s.projection.row_vectors();
    rows.push_back(alpha);
    CHECK(abs(determinant(IntMatrix::from_rows(rows))) == 1);
  }
}
