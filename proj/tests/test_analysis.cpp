#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "test_util.hpp"

using namespace srm;

TEST_CASE("off-diagonal Gram mass bounds the singular value spread") {
  StateSet ortho = make_state_set(Matrix::Identity(3, 3));
  SvBoundResult none = sv_perturbation_bound(ortho);
  CHECK(none.bound <= 1e-15);
  CHECK(none.worst_actual <= 1e-12);

  SvBoundResult two = sv_perturbation_bound(testutil::two_state_set());
  CHECK(two.worst_actual == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(two.bound == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  SvBoundResult four = sv_perturbation_bound(testutil::four_state_set());
  CHECK(four.worst_actual == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(four.bound == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  StateSet loose = make_state_set(Matrix(2.0 * Matrix::Identity(2, 2)), false);
  CHECK_THROWS_AS(sv_perturbation_bound(loose), PreconditionError);
}

TEST_CASE("singular value bound holds on random ensembles") {
  auto gen = testutil::rng(61);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(gen() % 6);
    int m = 2 + static_cast<int>(gen() % 6);
    StateSet s = t % 4 == 0
                     ? testutil::random_state_set_with_rank(gen, n, m,
                                                            1 + static_cast<int>(gen() % m))
                     : testutil::random_state_set(gen, n, m);
    SvBoundResult r = sv_perturbation_bound(s);
    CHECK(r.worst_actual <= r.bound + 1e-10);
  }
}

TEST_CASE("unitary mixing leaves the residual unchanged") {
  StateSet two = testutil::two_state_set();
  MixingBoundsResult r = mixing_bounds(two, Matrix(Matrix::Identity(2, 2)));
  CHECK(std::abs(r.actual) <= 1e-12);

  auto gen = testutil::rng(62);
  Matrix q = testutil::random_unitary(gen, 2);
  MixingBoundsResult u = mixing_bounds(two, q);
  CHECK(std::abs(u.actual) <= 1e-10);
  CHECK(u.lower <= 1e-9);
  CHECK(u.upper >= -1e-9);
  CHECK(u.lambda_max == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(u.lambda_min == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("scalar mixing makes both bounds tight") {
  StateSet two = testutil::two_state_set();
  double c = 0.7;
  MixingBoundsResult r = mixing_bounds(two, Matrix(c * Matrix::Identity(2, 2)));
  double sigma_sum = std::sqrt(1.5) + std::sqrt(0.5);
  double expected = 2.0 * (1.0 - c) * sigma_sum;
  CHECK(r.actual == doctest::Approx(expected).epsilon(1e-9));
  CHECK(r.lower == doctest::Approx(expected).epsilon(1e-9));
  CHECK(r.upper == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("mixing bounds hold for random invertible mixings") {
  auto gen = testutil::rng(63);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(gen() % 5);
    int m = 2 + static_cast<int>(gen() % 5);
    StateSet s = testutil::random_state_set(gen, n, m);
    Matrix a = testutil::random_matrix(gen, m, m);
    SvdFactors fa = svd(a);
    if (fa.sigma(m - 1) < 1e-3) {
      continue;
    }
    MixingBoundsResult r = mixing_bounds(s, a);
    CHECK(r.lower - 1e-8 <= r.actual);
    CHECK(r.actual <= r.upper + 1e-8);
  }
}

TEST_CASE("mixing spectra on one side of unity push the residual one way") {
  auto gen = testutil::rng(64);
  for (int t = 0; t < 20; ++t) {
    int m = 2 + static_cast<int>(gen() % 4);
    StateSet s = testutil::random_state_set(gen, m + 1, m);
    Matrix q1 = testutil::random_unitary(gen, m);
    Matrix q2 = testutil::random_unitary(gen, m);
    std::uniform_real_distribution<double> hi(1.0, 2.5);
    std::uniform_real_distribution<double> lo(0.3, 1.0);
    RealVector up(m);
    RealVector down(m);
    for (int i = 0; i < m; ++i) {
      up(i) = hi(gen);
      down(i) = lo(gen);
    }
    Matrix expand = q1 * up.asDiagonal() * q2;
    Matrix shrink = q1 * down.asDiagonal() * q2;
    CHECK(mixing_bounds(s, expand).actual <= 1e-9);
    CHECK(mixing_bounds(s, shrink).actual >= -1e-9);
  }
}

TEST_CASE("mixing rejects singular matrices") {
  StateSet two = testutil::two_state_set();
  Matrix singular = Matrix::Zero(2, 2);
  singular(0, 0) = 1.0;
  singular(1, 1) = 1e-15;
  CHECK_THROWS_AS(mixing_bounds(two, singular), PreconditionError);
  CHECK_THROWS_AS(mixing_bounds(two, Matrix(Matrix::Identity(3, 3))), PreconditionError);
}

TEST_CASE("weight sweep reproduces the prior-dependence curve") {
  StateSet two = testutil::two_state_set();
  std::vector<double> grid;
  for (int k = 1; k <= 99; ++k) {
    grid.push_back(k / 100.0);
  }
  auto rows = weight_sweep(two, grid);
  REQUIRE(rows.size() == 99);

  double center = rows[49].second;
  CHECK(rows[49].first == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(center == doctest::Approx(0.09637631717731265).epsilon(1e-12));
  for (const auto& [p, value] : rows) {
    if (std::abs(p - 0.5) > 1e-12) {
      CHECK(value <= center + 1e-12);
    }
  }
  for (std::size_t k = 0; k + 1 < 50; ++k) {
    CHECK(rows[k].second <= rows[k + 1].second + 1e-12);
  }
  for (std::size_t k = 50; k + 1 < rows.size(); ++k) {
    CHECK(rows[k].second >= rows[k + 1].second - 1e-12);
  }
  CHECK(rows[0].second == doctest::Approx(0.0244847408752).epsilon(1e-9));
}

TEST_CASE("weight sweep edge cases") {
  StateSet two = testutil::two_state_set();
  auto single = weight_sweep(two, {0.5});
  REQUIRE(single.size() == 1);
  CHECK(single[0].second == doctest::Approx(0.09637631717731265).epsilon(1e-12));

  CHECK_THROWS_AS(weight_sweep(two, {0.0, 0.5}), PreconditionError);
  CHECK_THROWS_AS(weight_sweep(two, {0.5, 1.0}), PreconditionError);
  CHECK_THROWS_AS(weight_sweep(testutil::four_state_set(), {0.5}), PreconditionError);
}

TEST_CASE("unitary mixing check stays at round-off") {
  StateSet two = testutil::two_state_set();
  CHECK(unitary_mixing_check(two, Matrix(Matrix::Identity(2, 2))) == 0.0);

  Matrix dft(2, 2);
  double r = 1.0 / std::sqrt(2.0);
  dft << r, r, r, -r;
  CHECK(unitary_mixing_check(two, dft) <= 1e-9);

  auto gen = testutil::rng(65);
  StateSet four = testutil::four_state_set();
  CHECK(unitary_mixing_check(four, testutil::random_unitary(gen, 4)) <= 1e-9);

  Matrix notu(2, 2);
  notu << 1, 1, 0, 1;
  CHECK_THROWS_AS(unitary_mixing_check(two, notu), PreconditionError);
}
