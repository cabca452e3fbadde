#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "test_util.hpp"

using namespace srm;
using testutil::entry_diff;

namespace {

double helstrom_closed_form(double p1, double p2, double overlap_mag) {
  return 0.5 * (1.0 - std::sqrt(1.0 - 4.0 * p1 * p2 * overlap_mag * overlap_mag));
}

}  // namespace

TEST_CASE("error probability of reference ensembles") {
  StateSet ortho = make_state_set(Matrix::Identity(3, 3));
  CHECK(error_probability(ortho, lsm(ortho)) <= 1e-15);

  StateSet four = testutil::four_state_set();
  CHECK(error_probability(four, gu_srm(four, testutil::four_state_group())) ==
        doctest::Approx(0.27144660940672627).epsilon(1e-12));

  StateSet two = testutil::two_state_set();
  CHECK(error_probability(two, lsm(two)) ==
        doctest::Approx(0.06698729810778081).epsilon(1e-12));
}

TEST_CASE("error probability rejects measurements missing the span") {
  StateSet two = testutil::two_state_set();
  Measurement bad = lsm(two);
  bad.matrix = two.states;
  CHECK_THROWS_AS(error_probability(two, bad), PreconditionError);
}

TEST_CASE("error probability ignores simultaneous global phases") {
  auto gen = testutil::rng(51);
  for (int t = 0; t < 10; ++t) {
    StateSet s = testutil::random_state_set(gen, 4, 3);
    Measurement m = lsm(s);
    double before = error_probability(s, m);
    StateSet rotated = s;
    Measurement rotated_m = m;
    std::uniform_real_distribution<double> dist(0.0, 2.0 * M_PI);
    for (int i = 0; i < 3; ++i) {
      Complex phase = std::polar(1.0, dist(gen));
      rotated.states.col(i) *= phase;
      rotated_m.matrix.col(i) *= phase;
    }
    CHECK(std::abs(error_probability(rotated, rotated_m) - before) <= 1e-14);
  }
}

TEST_CASE("optimality conditions verify the uniform constructions") {
  StateSet four = testutil::four_state_set();
  OptimalityReport r4 = holevo_conditions(four, gu_srm(four, testutil::four_state_group()));
  CHECK(r4.verdict == Verdict::verified_mpem);
  CHECK(r4.holevo_eq_residual <= 1e-8);
  CHECK(r4.holevo_psd_margin >= -1e-8);
  CHECK(r4.gamma_hermiticity <= 1e-9);

  StateSet two = testutil::two_state_set();
  OptimalityReport r2 = holevo_conditions(two, lsm(two));
  CHECK(r2.verdict == Verdict::verified_mpem);
  CHECK(r2.p_error == doctest::Approx(0.06698729810778081).epsilon(1e-10));
}

TEST_CASE("optimality conditions reject the naive baseline") {
  StateSet two = testutil::two_state_set();
  Measurement naive = gram_schmidt_baseline(two);
  OptimalityReport r = holevo_conditions(two, naive);
  CHECK(r.verdict != Verdict::verified_mpem);
  CHECK(r.p_error == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(r.p_error > error_probability(two, lsm(two)));
}

TEST_CASE("random uniform ensembles pass the optimality conditions") {
  auto gen = testutil::rng(52);
  const std::vector<std::vector<int>> pool = {{4}, {2, 2}, {6}, {2, 3}, {8}};
  for (int t = 0; t < 10; ++t) {
    const auto& factors = pool[t % pool.size()];
    int m = 1;
    for (int f : factors) {
      m *= f;
    }
    int n = m + static_cast<int>(gen() % 5);
    testutil::GuInstance inst = testutil::random_gu_instance(gen, factors, n);
    OptimalityReport r = holevo_conditions(inst.states, gu_srm(inst.states, inst.group));
    CHECK(r.verdict == Verdict::verified_mpem);
    CHECK(r.holevo_eq_residual <= 1e-8);
    CHECK(r.holevo_psd_margin >= -1e-8);

    if (numerical_rank(inst.states) == inst.states.size()) {
      SasakiResult sk = sasaki_criterion(inst.states, true);
      CHECK(sk.constant_diagonal);
      CHECK(sk.spread <= 1e-10);
    }
  }
}

TEST_CASE("constant-diagonal criterion on fixed ensembles") {
  CHECK(sasaki_criterion(testutil::two_state_set(), true).constant_diagonal);
  CHECK(sasaki_criterion(testutil::two_state_set(), false).constant_diagonal);

  Matrix phi(3, 3);
  phi << 1, 0.6, 0,
         0, 0.8, 0,
         0, 0, 1;
  StateSet lopsided = make_state_set(std::move(phi));
  SasakiResult flat = sasaki_criterion(lopsided, false);
  CHECK_FALSE(flat.constant_diagonal);
  CHECK(flat.spread == doctest::Approx(0.05131670194948634).epsilon(1e-10));

  RealVector skew(3);
  skew << 0.5, 0.3, 0.2;
  StateSet biased = make_state_set(Matrix(lopsided.states), std::move(skew));
  SasakiResult weighted = sasaki_criterion(biased, true);
  CHECK_FALSE(weighted.constant_diagonal);
  CHECK(weighted.spread > 1e-8);

  Matrix dep(2, 3);
  dep << 1, 0, 1, 0, 1, 0;
  CHECK_THROWS_AS(sasaki_criterion(make_state_set(std::move(dep)), false),
                  PreconditionError);
}

TEST_CASE("constant diagonal implies the conditions verify") {
  auto gen = testutil::rng(53);
  const std::vector<std::vector<int>> pool = {{3}, {2, 2}, {5}};
  for (int t = 0; t < 6; ++t) {
    const auto& factors = pool[t % pool.size()];
    int m = 1;
    for (int f : factors) {
      m *= f;
    }
    testutil::GuInstance inst = testutil::random_gu_instance(gen, factors, m + 2);
    if (numerical_rank(inst.states) < inst.states.size()) {
      continue;
    }
    SasakiResult sk = sasaki_criterion(inst.states, true);
    if (sk.constant_diagonal) {
      OptimalityReport r = holevo_conditions(inst.states, srm::srm(inst.states));
      CHECK(r.verdict == Verdict::verified_mpem);
    }
  }
}

TEST_CASE("two-state oracle agrees with the closed form") {
  StateSet two = testutil::two_state_set();
  double star = helstrom_oracle(two);
  CHECK(std::abs(star - error_probability(two, lsm(two))) <= 1e-6);
  CHECK(star == doctest::Approx(helstrom_closed_form(0.5, 0.5, 0.5)).epsilon(1e-9));

  StateSet ortho = make_state_set(Matrix::Identity(2, 2));
  CHECK(helstrom_oracle(ortho) <= 1e-9);

  Matrix same(2, 2);
  same.col(0) = Vector::Unit(2, 0);
  same.col(1) = Vector::Unit(2, 0);
  CHECK(helstrom_oracle(make_state_set(std::move(same))) ==
        doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(helstrom_oracle(testutil::four_state_set()), PreconditionError);
}

TEST_CASE("two-state oracle on random ensembles with random priors") {
  auto gen = testutil::rng(54);
  for (int t = 0; t < 15; ++t) {
    int n = 2 + static_cast<int>(gen() % 3);
    Matrix phi = testutil::random_matrix(gen, n, 2);
    phi.col(0).normalize();
    phi.col(1).normalize();
    RealVector p = testutil::random_priors(gen, 2);
    StateSet s = make_state_set(phi, p);
    double overlap = std::abs(gram(s).entries(0, 1));
    double star = helstrom_oracle(s);
    CHECK(std::abs(star - helstrom_closed_form(p(0), p(1), overlap)) <= 1e-7);
    CHECK(star <= error_probability(s, lsm(s)) + 1e-6);
    CHECK(star <= error_probability(s, gram_schmidt_baseline(s)) + 1e-6);
  }
}

TEST_CASE("descent oracle brackets the closed-form optimum") {
  StateSet two = testutil::two_state_set();
  double e2 = residual_error(two, lsm(two));
  double star2 = brute_force_lsm_oracle(two, 20000, 1);
  CHECK(star2 >= e2 - 1e-6);
  CHECK(star2 <= e2 + 1e-4);

  StateSet four = testutil::four_state_set();
  double e4 = residual_error(four, lsm(four));
  CHECK(e4 == doctest::Approx(0.17157287525381015).epsilon(1e-12));
  double star4 = brute_force_lsm_oracle(four, 20000, 1);
  CHECK(star4 >= e4 - 1e-6);
  CHECK(star4 <= e4 + 1e-4);

  StateSet ortho = make_state_set(Matrix::Identity(3, 3));
  CHECK(brute_force_lsm_oracle(ortho, 10000, 2) <= 1e-6);
}

TEST_CASE("descent oracle enforces its limits") {
  auto gen = testutil::rng(55);
  StateSet big = testutil::random_state_set(gen, 7, 3);
  CHECK_THROWS_AS(brute_force_lsm_oracle(big, 20000, 1), PreconditionError);
  CHECK_THROWS_AS(brute_force_lsm_oracle(testutil::two_state_set(), 5000, 1),
                  PreconditionError);
}

TEST_CASE("naive baseline is orthonormal and flags dependent columns") {
  StateSet two = testutil::two_state_set();
  Measurement gs = gram_schmidt_baseline(two);
  CHECK(gs.kind == MeasurementKind::custom);
  CHECK(entry_diff(Matrix(gs.matrix.adjoint() * gs.matrix), Matrix::Identity(2, 2)) <=
        1e-12);

  Matrix dep(2, 3);
  dep << 1, 0, 1, 0, 1, 0;
  Measurement flagged = gram_schmidt_baseline(make_state_set(std::move(dep)));
  CHECK(flagged.matrix.col(2).norm() <= 1e-12);
  CHECK_FALSE(flagged.note.empty());
}
