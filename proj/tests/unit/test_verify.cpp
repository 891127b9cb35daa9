#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cylspec/dense.hpp"
#include "cylspec/errors.hpp"
#include "cylspec/generators.hpp"
#include "cylspec/verify.hpp"
#include "helpers.hpp"

using namespace cylspec;

TEST_CASE("dense matrix construction") {
  DenseSymmetricMatrix a = DenseSymmetricMatrix::adjacency_of(generate_cycle(3));
  CHECK(a.dim() == 3);
  CHECK(a(0, 1) == 1.0);
  CHECK(a(0, 0) == 0.0);
  // raw constructor insists on bit-exact symmetry
  CHECK_THROWS_AS(DenseSymmetricMatrix(2, {0.0, 1.0, 0.5, 0.0}), CylError);
  CHECK_THROWS_AS(DenseSymmetricMatrix(2, {0.0, 1.0}), CylError);
}

TEST_CASE("explicit block iterate") {
  DenseSymmetricMatrix a = DenseSymmetricMatrix::adjacency_of(generate_cycle(3));
  CHECK(explicit_block_iterate(a, 0) == a);

  DenseSymmetricMatrix c = explicit_block_iterate(a, 1);
  REQUIRE(c.dim() == 6);
  std::vector<double> expected = {
      0, 1, 1, 1, 0, 0,
      1, 0, 1, 0, 1, 0,
      1, 1, 0, 0, 0, 1,
      1, 0, 0, 0, 1, 1,
      0, 1, 0, 1, 0, 1,
      0, 0, 1, 1, 1, 0,
  };
  CHECK(c.entries() == expected);

  DenseSymmetricMatrix q2_2 =
      explicit_block_iterate(DenseSymmetricMatrix::adjacency_of(generate_hypercube(2)), 2);
  REQUIRE(q2_2.dim() == 16);
  for (int i = 0; i < 16; ++i) {
    double row_sum = 0;
    for (int j = 0; j < 16; ++j) row_sum += q2_2(i, j);
    CHECK(row_sum == 4.0);
  }

  CHECK_THROWS_AS(explicit_block_iterate(a, 30), CylError);
}

TEST_CASE("block iterate commutes with the graph-side construction") {
  for (const auto& name : {"cycle-5", "hypercube-2", "petersen"}) {
    Graph g = named_graph(name);
    for (int n = 0; n <= 3; ++n) {
      CHECK(DenseSymmetricMatrix::adjacency_of(iterate_cylinder(g, n)) ==
            explicit_block_iterate(DenseSymmetricMatrix::adjacency_of(g), n));
    }
  }
}

TEST_CASE("dense spectrum goldens") {
  DenseSymmetricMatrix zero(3);
  CHECK(dense_spectrum(zero) == std::vector<double>{0.0, 0.0, 0.0});

  auto q2 = dense_spectrum(DenseSymmetricMatrix::adjacency_of(generate_hypercube(2)));
  REQUIRE(q2.size() == 4);
  std::vector<double> expected_q2 = {-2, 0, 0, 2};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(q2[i] == doctest::Approx(expected_q2[i]).epsilon(1e-12));
  }

  // the 6x6 cylinder of the triangle: eigenvalues -2,-2,0,0,1,3
  auto cyl = dense_spectrum(
      explicit_block_iterate(DenseSymmetricMatrix::adjacency_of(generate_cycle(3)), 1));
  std::vector<double> expected_cyl = {-2, -2, 0, 0, 1, 3};
  REQUIRE(cyl.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(cyl[i] == doctest::Approx(expected_cyl[i]).epsilon(1e-10));
  }

  CHECK_THROWS_AS(dense_spectrum(DenseSymmetricMatrix(64), /*dense_cap=*/32), CylError);
}

TEST_CASE("dense spectrum is invariant under vertex permutation") {
  std::mt19937 rng(99);
  Graph pet = generate_petersen();
  DenseSymmetricMatrix a = DenseSymmetricMatrix::adjacency_of(pet);
  auto reference = dense_spectrum(a);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> perm(pet.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    DenseSymmetricMatrix b(pet.vertex_count());
    for (auto [u, v] : pet.edges()) b.set(perm[u], perm[v], 1.0);
    auto shuffled = dense_spectrum(b);
    for (std::size_t i = 0; i < reference.size(); ++i) {
      CHECK(shuffled[i] == doctest::Approx(reference[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("verify_shift_theorem holds for every fixture up to N=6") {
  for (const auto& name :
       {"cycle-3", "cycle-4", "cycle-5", "cycle-6", "complete-4", "complete-5",
        "hypercube-2", "hypercube-3", "petersen"}) {
    Graph g = named_graph(name);
    for (int n = 0; n <= 6; ++n) {
      VerificationReport r = verify_shift_theorem(g, name, n);
      CAPTURE(name);
      CAPTURE(n);
      CHECK(r.passed);
      CHECK(r.max_residual <= 1e-8);
    }
  }
}

TEST_CASE("verify_shift_theorem on the named examples") {
  VerificationReport c3 = verify_shift_theorem(generate_cycle(3), "cycle-3", 1);
  CHECK(c3.passed);
  CHECK(c3.eigenvalue_count == 6);
  CHECK(c3.max_residual <= 1e-8);

  VerificationReport q2 = verify_shift_theorem(generate_hypercube(2), "hypercube-2", 3);
  CHECK(q2.passed);
  CHECK(q2.eigenvalue_count == 32);

  VerificationReport pet = verify_shift_theorem(generate_petersen(), "petersen", 2);
  CHECK(pet.passed);
  CHECK(pet.eigenvalue_count == 40);
  CHECK(pet.mismatches.empty());
}

TEST_CASE("verify_shift_theorem respects the size guard") {
  CHECK_THROWS_AS(verify_shift_theorem(generate_hypercube(2), "hypercube-2", 30), CylError);
  try {
    verify_shift_theorem(generate_hypercube(2), "hypercube-2", 30);
  } catch (const CylError& e) {
    CHECK(e.exit_code() == 2);
  }
}

TEST_CASE("verify_shift_theorem notices a wrong spectrum") {
  // feed it an impossible tolerance so legitimate numeric noise trips it
  VerificationReport r = verify_shift_theorem(generate_petersen(), "petersen", 3, 1e-18);
  CHECK_FALSE(r.passed);
}
