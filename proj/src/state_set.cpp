#include <srmkit/state_set.hpp>

#include <cmath>

#include <Eigen/SVD>

namespace srm {

StateSet make_state_set(Matrix states, RealVector priors, bool normalized,
                        double norm_tol) {
  const int n = static_cast<int>(states.rows());
  const int m = static_cast<int>(states.cols());
  if (n < 1 || m < 1) {
    throw ValidationError("state set needs at least one state in at least one dimension");
  }
  if (!states.allFinite()) {
    throw ValidationError("state matrix contains non-finite entries");
  }
  if (priors.size() != m) {
    throw ValidationError("priors length " + std::to_string(priors.size()) +
                          " does not match state count " + std::to_string(m));
  }
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    if (!(priors[i] >= 0.0)) {
      throw ValidationError("prior " + std::to_string(i + 1) + " is negative");
    }
    sum += priors[i];
  }
  if (std::abs(sum - 1.0) > kPriorSumTol) {
    throw ValidationError("priors sum to " + std::to_string(sum) + ", expected 1");
  }
  if (normalized) {
    for (int g = 0; g < m; ++g) {
      const double norm = states.col(g).norm();
      if (std::abs(norm - 1.0) > norm_tol) {
        throw ValidationError("column " + std::to_string(g + 1) + " has norm " +
                              std::to_string(norm) +
                              "; pass normalized=false for raw ensembles");
      }
    }
  }
  StateSet s;
  s.states = std::move(states);
  s.priors = std::move(priors);
  s.normalized = normalized;
  return s;
}

StateSet make_state_set(Matrix states, bool normalized, double norm_tol) {
  const int m = static_cast<int>(states.cols());
  RealVector priors = RealVector::Constant(m > 0 ? m : 1, 1.0 / (m > 0 ? m : 1));
  return make_state_set(std::move(states), std::move(priors), normalized, norm_tol);
}

GramMatrix gram(const StateSet& s) {
  GramMatrix g;
  g.entries = s.states.adjoint() * s.states;
  return g;
}

int numerical_rank(const StateSet& s, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw PreconditionError("rank tolerance must lie in (0, 1)");
  }
  Eigen::JacobiSVD<Matrix> svd(s.states);
  const RealVector& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > rel_tol * sv[0]) ++r;
  }
  return r;
}

StateSet phase_align_binary(const StateSet& s) {
  if (s.size() != 2) {
    throw PreconditionError("phase alignment is defined for exactly two states");
  }
  const Complex a = s.states.col(0).dot(s.states.col(1));
  StateSet out = s;
  if (std::abs(a) == 0.0) return out;
  const double theta = std::arg(a);
  out.states.col(1) *= std::polar(1.0, -theta);
  return out;
}

StateSet apply_weights(const StateSet& s, const RealVector& weights) {
  if (weights.size() != s.size()) {
    throw PreconditionError("weight count " + std::to_string(weights.size()) +
                            " does not match state count " + std::to_string(s.size()));
  }
  for (int i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
      throw PreconditionError("weight " + std::to_string(i + 1) + " must be positive");
    }
  }
  StateSet out;
  out.states = s.states * weights.asDiagonal();
  out.priors = s.priors;
  out.normalized = false;
  return out;
}

}  // namespace srm
