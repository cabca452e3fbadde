#include <srmkit/analysis.hpp>

#include <cmath>

namespace srm {

namespace {

void require_normalized(const StateSet& s, const char* op) {
  if (!s.normalized) {
    throw PreconditionError(std::string(op) + " requires a normalized ensemble");
  }
}

// Closed-form value r + m - 2 sum sigma_i without the normalization gate;
// the mixed ensemble inside the bounds is deliberately unnormalized.
double closed_form_value(const SvdFactors& f, int m) {
  double sum = 0.0;
  for (int i = 0; i < f.rank; ++i) sum += f.sigma[i];
  return f.rank + m - 2.0 * sum;
}

}  // namespace

SvBoundResult sv_perturbation_bound(const StateSet& s) {
  require_normalized(s, "perturbation bound");
  Matrix d = s.states.adjoint() * s.states;
  d -= Matrix::Identity(s.size(), s.size());
  d.diagonal().setZero();

  const SvdFactors f = svd(s.states);
  SvBoundResult out;
  out.bound = d.norm();
  for (int i = 0; i < s.size(); ++i) {
    const double sq = i < f.sigma.size() ? f.sigma[i] * f.sigma[i] : 0.0;
    out.worst_actual = std::max(out.worst_actual, std::abs(sq - 1.0));
  }
  return out;
}

MixingBoundsResult mixing_bounds(const StateSet& s, const Matrix& a) {
  require_normalized(s, "mixing bounds");
  if (a.rows() != s.size() || a.cols() != s.size()) {
    throw PreconditionError("mixing matrix must be m x m");
  }
  if (!a.allFinite()) {
    throw PreconditionError("mixing matrix contains non-finite entries");
  }
  const SvdFactors fa = svd(a);
  const double smax = fa.sigma.size() ? fa.sigma[0] : 0.0;
  const double smin = fa.sigma.size() ? fa.sigma[fa.sigma.size() - 1] : 0.0;
  if (!(smin > 0.0) || smax / smin > 1e12) {
    throw PreconditionError("mixing matrix is numerically singular (condition number above 1e12)");
  }

  const SvdFactors f = svd(s.states);
  const SvdFactors fm = svd(Matrix(s.states * a.adjoint()));
  double sigma_sum = 0.0;
  for (int i = 0; i < f.rank; ++i) sigma_sum += f.sigma[i];

  MixingBoundsResult out;
  out.lambda_max = smax * smax;
  out.lambda_min = smin * smin;
  out.actual = closed_form_value(fm, s.size()) - closed_form_value(f, s.size());
  out.lower = 2.0 * (1.0 - smax) * sigma_sum;
  out.upper = 2.0 * (1.0 - smin) * sigma_sum;
  return out;
}

std::vector<std::pair<double, double>> weight_sweep(const StateSet& s,
                                                    const std::vector<double>& grid) {
  if (s.size() != 2) {
    throw PreconditionError("sweep is defined for two-state ensembles");
  }
  for (double p : grid) {
    if (!(p > 0.0 && p < 1.0)) {
      throw PreconditionError("sweep grid values must lie strictly inside (0, 1)");
    }
  }
  std::vector<std::pair<double, double>> rows;
  rows.reserve(grid.size());
  RealVector w(2);
  for (double p : grid) {
    w[0] = std::sqrt(p);
    w[1] = std::sqrt(1.0 - p);
    rows.emplace_back(p, weighted_residual(s, w));
  }
  return rows;
}

double unitary_mixing_check(const StateSet& s, const Matrix& q) {
  require_normalized(s, "unitary mixing check");
  if (q.rows() != s.size() || q.cols() != s.size()) {
    throw PreconditionError("mixing matrix must be m x m");
  }
  const Matrix defect = q.adjoint() * q - Matrix::Identity(q.rows(), q.cols());
  if (max_abs(defect) > kGuTol) {
    throw PreconditionError("matrix is not unitary within 1e-9");
  }
  const SvdFactors f = svd(s.states);
  const SvdFactors fm = svd(Matrix(s.states * q.adjoint()));
  return std::abs(closed_form_value(fm, s.size()) - closed_form_value(f, s.size()));
}

}  // namespace srm
