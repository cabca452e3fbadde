#pragma once

#include <utility>
#include <vector>

#include <srmkit/measurement.hpp>

namespace srm {

// How far the squared singular values of a normalized ensemble can sit
// from 1, against the Frobenius bound from the off-diagonal Gram mass.
struct SvBoundResult {
  double bound = 0.0;         // sqrt(trace(D* D)), D = Gram minus identity
  double worst_actual = 0.0;  // max_i |sigma_i^2 - 1|
};

SvBoundResult sv_perturbation_bound(const StateSet& s);

// Two-sided bound on the change of the closed-form residual when the
// ensemble is mixed by an invertible matrix A (states' = states * A†):
//   2 (1 - sqrt(lambda_max)) sum sigma_i <= E' - E <= 2 (1 - sqrt(lambda_min)) sum sigma_i
// with lambda extremes the squared extreme singular values of A.
struct MixingBoundsResult {
  double lower = 0.0;
  double upper = 0.0;
  double actual = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

MixingBoundsResult mixing_bounds(const StateSet& s, const Matrix& a);

// Weighted residual of a two-state ensemble across prior assignments:
// for each p in the grid, weights (sqrt p, sqrt(1-p)). Grid values must
// lie strictly inside (0, 1). Returns (p, residual) rows.
std::vector<std::pair<double, double>> weight_sweep(const StateSet& s,
                                                    const std::vector<double>& grid);

// |E(states Q†) - E(states)| for a unitary Q; zero in exact arithmetic
// because the singular values are unchanged.
double unitary_mixing_check(const StateSet& s, const Matrix& q);

}  // namespace srm
