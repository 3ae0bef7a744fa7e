// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cx1/catalog.hpp"
#include "cx1/chardata.hpp"
#include "cx1/classify.hpp"
#include "cx1/errors.hpp"
#include "cx1/quasitoric.hpp"
#include "cx1/sponge.hpp"
#include "cx1/weights.hpp"
#include "oracles.hpp"
#include "transforms.hpp"

using namespace cx1;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitG42 = 1.0;
constexpr double kLimitF3 = 1.0;
constexpr double kLimitReduce = 5.0;
constexpr double kLimitClassify = 10.0;

constexpr int kWeightSystems = 500;
constexpr int kCovarianceTrials = 200;
constexpr int kInvarianceTrials = 200;
constexpr int kSmithTrials = 1000;
constexpr int kSmithOracleTrials = 300;
constexpr int kSelfPairs = 50;

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void require(bool condition, const std::string& what) {
    if (!condition && ok) why << what;
    ok = ok && condition;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool run(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
  const std::string why = o.why.str();
  if (!why.empty()) std::cout << " (" << why << ")";
  std::cout << "\n";
  return o.ok;
}

bool up_to_sign(const std::vector<Integer>& a, const IntVector& b) { return a == b || a == negated(b); }

WeightSystem random_weights(std::mt19937& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    std::vector<IntVector> ws;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector v(n - 1);
      for (auto& x : v) x = d(rng);
      ws.push_back(v);
    }
    WeightSystem w = make_weight_system(ws);
    if (is_general_position(w)) return w;
  }
}

oracle::Matrix longs(const std::vector<IntVector>& rows) {
  oracle::Matrix m;
  for (const auto& r : rows) {
    std::vector<long> row;
    for (const auto& x : r) row.push_back(x.get_si());
    m.push_back(row);
  }
  return m;
}

bool data_fully_valid(const CharacteristicData& cd, std::string& why) {
  Report r = validate_sponge(cd.sponge);
  r.append(validate_mu(cd));
  r.append(cocycle_check(cd));
  for (const auto& c : cd.sponge.complex.cells())
    if (!face_star(cd.sponge, c.id).isomorphic) r.fail("stars", c.id);
  if (!compatibility_check(cd)) r.fail("compatibility", "");
  if (r.ok() && !assemble_euler_cycle(cd).is_cycle) r.fail("euler-cycle", "");
  for (const auto& f : r.findings())
    if (!f.passed) {
      why = f.check + ": " + f.detail;
      return false;
    }
  return true;
}

// Pipeline outputs shared by criteria 3 and 8.
std::vector<std::pair<std::string, CharacteristicData>> pipeline_data;

}  // namespace

int main() {
  bool all = true;

  all &= run(1, "G(2,4): c = +-(1,-1,1,-1), strictly appropriate, sponge valid, sigma a cycle", [](Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    WeightSystem w = make_weight_system(
        {make_vector({1, 0, -1}), make_vector({0, 1, -1}), make_vector({-1, 0, -1}), make_vector({0, -1, -1})});
    o.require(up_to_sign(cramer_coefficients(w).c, make_vector({1, -1, 1, -1})), "c");
    o.require(is_strictly_appropriate(w), "strictness");
    CatalogEntry e = load("g42");
    o.require(validate_sponge(e.data.sponge).ok(), "sponge");
    o.require(assemble_euler_cycle(e.data).is_cycle, "sigma");
    Report r = verify(e);
    o.require(r.ok(), "catalog verification");
    double t = seconds_since(start);
    o.require(t < kLimitG42, "took " + std::to_string(t) + " s");
  });

  all &= run(2, "F_3: c = +-(1,-1,1), strict, K33 sponge valid, betti [1,4] matches oracle", [](Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    WeightSystem w = make_weight_system({make_vector({1, 0}), make_vector({1, 1}), make_vector({0, 1})});
    o.require(up_to_sign(cramer_coefficients(w).c, make_vector({1, -1, 1})), "c");
    o.require(is_strictly_appropriate(w), "strictness");
    CatalogEntry e = load("f3");
    o.require(e.data.n == 3, "n");
    o.require(validate_sponge(e.data.sponge).ok(), "sponge");
    HomologyResult h = homology(e.data.sponge);
    // Simplicial oracle on the same graph, vertices numbered by sorted id.
    auto vertices = e.data.sponge.complex.cells_of_dim(0);
    std::vector<std::vector<int>> edges;
    for (const auto& id : e.data.sponge.complex.cells_of_dim(1)) {
      std::vector<int> edge;
      for (const auto& [v, k] : e.data.sponge.complex.boundary(id)) {
        (void)k;
        edge.push_back(static_cast<int>(std::find(vertices.begin(), vertices.end(), v) - vertices.begin()));
      }
      edges.push_back(edge);
    }
    auto expected = oracle::simplicial_betti(edges);
    o.require(h.betti == expected, "homology vs oracle");
    o.require(h.betti == std::vector<std::size_t>{1, 4}, "betti");
    o.require(verify(e).ok(), "catalog verification");
    double t = seconds_since(start);
    o.require(t < kLimitF3, "took " + std::to_string(t) + " s");
  });

  all &= run(3, "reduce: simplex, colored cube and prism give valid characteristic data", [](Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    struct Case {
      std::string name;
      SimplePolytope P;
      CharacteristicFunction lambda;
      long bound;
    };
    std::vector<Case> cases;
    cases.push_back({"simplex",
                     simplex_polytope(3),
                     {{"1", make_vector({1, 0, 0})},
                      {"2", make_vector({0, 1, 0})},
                      {"3", make_vector({0, 0, 1})},
                      {"4", make_vector({-1, -1, -1})}},
                     1});
    SimplePolytope cube = cube_polytope(3);
    cases.push_back(
        {"cube", cube, coloring_pullback(cube, {{"1", 1}, {"2", 2}, {"3", 3}, {"4", 1}, {"5", 2}, {"6", 3}}), 1});
    cases.push_back({"prism",
                     prism_polytope(3),
                     {{"1", make_vector({1, 0, 0})},
                      {"2", make_vector({0, 1, 0})},
                      {"3", make_vector({-1, -1, 1})},
                      {"4", make_vector({0, 0, 1})},
                      {"5", make_vector({0, 0, 1})}},
                     2});
    bool simplex_has_expected = false;
    for (const auto& c : cases) {
      o.require(validate_polytope(c.P).ok(), c.name + " polytope");
      o.require(validate_star(c.P, c.lambda).ok(), c.name + " star condition");
      auto found = find_strict_subtorus(c.P, c.lambda, c.bound);
      o.require(!found.empty(), c.name + ": no strict subtorus");
      for (const auto& st : found) {
        if (c.name == "simplex" && st.alpha_t == make_vector({1, 1, -1})) simplex_has_expected = true;
        CharacteristicData cd = reduce(c.P, c.lambda, st);
        std::string why;
        o.require(data_fully_valid(cd, why), c.name + " alpha " + to_string(st.alpha_t) + ": " + why);
        pipeline_data.emplace_back(c.name + " " + to_string(st.alpha_t), cd);
      }
    }
    o.require(simplex_has_expected, "simplex: (1,1,-1) not found");
    double t = seconds_since(start);
    o.require(t < kLimitReduce, "took " + std::to_string(t) + " s");
  });

  all &= run(4, "strictness equals trivial singleton stabilizers on random weight systems", [](Outcome& o) {
    std::mt19937 rng(1001);
    int strict_count = 0;
    for (int trial = 0; trial < kWeightSystems; ++trial) {
      WeightSystem w = random_weights(rng, 3 + static_cast<std::size_t>(trial % 4), 4);
      auto c = cramer_coefficients(w).c;
      bool trivial = true;
      for (std::size_t i = 0; i < w.n; ++i) {
        StabilizerStructure s = stabilizer_structure(w, {i});
        std::vector<Integer> expected;
        if (abs(c[i]) > 1) expected.push_back(abs(c[i]));
        o.require(s.finite_orders == expected && s.torus_rank == 0, "singleton order differs from |c_i|");
        if (!s.finite_orders.empty()) trivial = false;
      }
      bool strict = is_strictly_appropriate(w);
      strict_count += strict ? 1 : 0;
      o.require(strict == trivial, "strictness disagrees with stabilizers");
    }
    o.require(strict_count > 0, "no strict samples drawn");
  });

  all &= run(5, "Cramer identity, sign covariance and GL invariance", [](Outcome& o) {
    std::mt19937 rng(2002);
    for (int trial = 0; trial < kCovarianceTrials; ++trial) {
      std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
      WeightSystem w = random_weights(rng, n, 4);
      auto ct = cofactor_coefficients(w);
      o.require(ct == oracle::cofactors(longs(w.weights)), "cofactors differ from the Laplace oracle");
      IntVector sum(n - 1, 0);
      for (std::size_t i = 0; i < n; ++i) sum = added(sum, scaled(w.weights[i], ct[i]));
      o.require(is_zero(sum), "sum c~_i alpha_i != 0");
      bool strict = is_strictly_appropriate(w);
      std::size_t i = rng() % n;
      WeightSystem f = w;
      f.weights[i] = negated(f.weights[i]);
      auto cf = cofactor_coefficients(f);
      for (std::size_t j = 0; j < n; ++j) o.require(cf[j] == (j == i ? ct[j] : Integer(-ct[j])), "sign covariance");
      o.require(is_general_position(f) && is_strictly_appropriate(f) == strict, "sign invariance of predicates");
    }
    for (int trial = 0; trial < kInvarianceTrials; ++trial) {
      std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
      WeightSystem w = random_weights(rng, n, 4);
      IntMatrix g = fixture::random_unimodular(rng, n - 1);
      WeightSystem m = transformed(w, g);
      auto a = cramer_coefficients(w).c, b = cramer_coefficients(m).c;
      o.require(up_to_sign(a, b), "c changes under GL");
      o.require(is_general_position(m) && is_strictly_appropriate(m) == is_strictly_appropriate(w),
                "predicates change under GL");
    }
  });

  all &= run(6, "Smith normal form: invariants and subgroup-enumeration oracle", [](Outcome& o) {
    std::mt19937 rng(3003);
    std::uniform_int_distribution<long> d5(-5, 5), d2(-2, 2);
    for (int trial = 0; trial < kSmithTrials; ++trial) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      IntMatrix a(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = d5(rng);
      SmithDecomposition s = smith_normal_form(a);
      o.require(s.U * a * s.V == s.D, "U A V != D");
      o.require(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "U or V not unimodular");
      auto diag = s.diagonal();
      for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        o.require(diag[i] >= 0 && (diag[i] == 0 ? diag[i + 1] == 0 : diag[i + 1] % diag[i] == 0),
                  "divisibility chain");
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (i != j) o.require(s.D(i, j) == 0, "D not diagonal");
    }
    int compared = 0;
    while (compared < kSmithOracleTrials) {
      std::size_t m = 1 + rng() % 3;
      std::size_t n = m + rng() % (4 - m);
      IntMatrix a(m, n);
      oracle::Matrix b(m, std::vector<long>(n));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = b[i][j] = d2(rng);
      SmithDecomposition s = smith_normal_form(a);
      if (s.rank < m) continue;
      ++compared;
      auto counts = oracle::torsion_counts(b);
      auto diag = s.diagonal();
      for (std::size_t k = 1; k <= counts.size(); ++k) {
        Integer predicted = 1;
        for (const auto& x : diag) {
          Integer g;
          Integer kk(static_cast<unsigned long>(k));
          mpz_gcd(g.get_mpz_t(), kk.get_mpz_t(), x.get_mpz_t());
          predicted *= g;
        }
        o.require(predicted == static_cast<unsigned long>(counts[k - 1]), "k-torsion count differs from oracle");
      }
    }
  });

  all &= run(7, "classification: scrambled self-pairs equivalent, single Hopf flip inequivalent", [](Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(4004);
    std::vector<CatalogEntry> entries{load("g42"), load("f3"), load("cp3-reduction"), load("local-model-3"),
                                      load("local-model-4"), load("local-model-5")};
    for (int trial = 0; trial < kSelfPairs; ++trial) {
      const CatalogEntry& e = entries[static_cast<std::size_t>(trial) % entries.size()];
      IntMatrix g = fixture::random_unimodular(rng, e.data.n - 1);
      CharacteristicData other = fixture::scrambled(e.data, rng, g);
      Comparison c = compare(e.data, other);
      o.require(c.verdict == Verdict::equivalent, e.name + ": " + c.certificate);
      if (c.witness) o.require(verify_witness(e.data, other, *c.witness).ok(), e.name + ": witness rejected");
    }
    CharacteristicData flipped = entries[0].data;
    flipped.euler_sign.begin()->second *= -1;
    o.require(compare(entries[0].data, flipped).verdict == Verdict::inequivalent, "flip not detected");
    double t = seconds_since(start);
    o.require(t < kLimitClassify, "took " + std::to_string(t) + " s");
  });

  all &= run(8, "cocycle relation holds on every catalog entry and pipeline output", [](Outcome& o) {
    std::vector<std::pair<std::string, CharacteristicData>> data = pipeline_data;
    for (const auto& name : catalog_names()) data.emplace_back(name, load(name).data);
    o.require(!pipeline_data.empty(), "no pipeline outputs");
    for (const auto& [name, cd] : data) {
      o.require(cocycle_check(cd).ok(), name + ": cocycle check");
      o.require(assemble_euler_cycle(cd).is_cycle, name + ": sigma not a cycle");
    }
  });

  return all ? 0 : 1;
}
