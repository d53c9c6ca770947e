#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cockcroft/intlin.hpp"
#include "oracles.hpp"

using namespace cockcroft;

namespace {

void check_decomposition(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  IntMatrix d = snf.U * m * snf.V;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i == j && i < snf.rank) {
        CHECK(d(i, j) == snf.invariant_factors[i]);
      } else {
        CHECK(d(i, j) == 0);
      }
    }
  }
  for (std::size_t i = 0; i < snf.invariant_factors.size(); ++i) {
    CHECK(snf.invariant_factors[i] > 0);
    if (i + 1 < snf.invariant_factors.size()) {
      CHECK(mpz_divisible_p(snf.invariant_factors[i + 1].get_mpz_t(), snf.invariant_factors[i].get_mpz_t()));
    }
  }
  CHECK(abs(oracle::determinant(snf.U)) == 1);
  CHECK(abs(oracle::determinant(snf.V)) == 1);
  CHECK(snf.rank == oracle::rational_rank(m));
}

}  // namespace

TEST_CASE("smith_normal_form examples") {
  auto id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.invariant_factors == std::vector<Integer>{1, 1});
  auto zero = smith_normal_form(IntMatrix(3, 2));
  CHECK(zero.invariant_factors.empty());
  CHECK(zero.rank == 0);
  // diag(2,3): gcd 1 and lcm 6, as elementary operations give
  // [[2,0],[0,3]] -> [[2,3],[0,3]] -> [[2,1],[0,3]] -> ... -> diag(1,6).
  auto d = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(d.invariant_factors == std::vector<Integer>{1, 6});
  auto e = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(e.invariant_factors == std::vector<Integer>{2, 6, 12});
  check_decomposition(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  check_decomposition(IntMatrix(0, 3));
  check_decomposition(IntMatrix(2, 0));
}

TEST_CASE("rank and independence") {
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(IntMatrix::identity(4)) == 4);
  CHECK(rank(IntMatrix(3, 3)) == 0);
  CHECK(rows_independent(IntMatrix{{1, 0}, {0, 2}}));
  CHECK_FALSE(rows_independent(IntMatrix{{1, 0}, {2, 0}}));
  CHECK(rows_independent(IntMatrix(0, 3)));
}

TEST_CASE("row_dependency") {
  CHECK_FALSE(row_dependency(IntMatrix{{1, 0}, {0, 2}}).has_value());
  IntMatrix m{{1}, {2}};
  auto dep = row_dependency(m);
  REQUIRE(dep.has_value());
  CHECK((*dep)[0] * 1 + (*dep)[1] * 2 == 0);
  CHECK(((*dep)[0] != 0 || (*dep)[1] != 0));
}

TEST_CASE("in_row_lattice") {
  IntMatrix m{{2, 0}, {0, 3}};
  CHECK(in_row_lattice(m, {4, 9}));
  CHECK_FALSE(in_row_lattice(m, {1, 0}));
  CHECK(in_row_lattice(IntMatrix(1, 2), {0, 0}));
  CHECK_FALSE(in_row_lattice(IntMatrix(1, 2), {0, 1}));
  CHECK(in_row_lattice(IntMatrix{{1, 1}, {1, -1}}, {2, 0}));
  CHECK_FALSE(in_row_lattice(IntMatrix{{1, 1}, {1, -1}}, {1, 0}));
}

TEST_CASE("random matrices decompose exactly") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) check_decomposition(oracle::random_matrix(rng, 6, 20));
}

TEST_CASE("random lattice membership agrees with explicit combinations") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = oracle::random_matrix(rng, 4, 6);
    std::vector<Integer> target(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      long c = coef(rng);
      for (std::size_t j = 0; j < m.cols(); ++j) target[j] += c * m(i, j);
    }
    CHECK(in_row_lattice(m, target));
  }
}
