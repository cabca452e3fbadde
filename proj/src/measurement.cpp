#include <srmkit/measurement.hpp>

#include <cmath>

namespace srm {

std::string to_string(MeasurementKind kind) {
  switch (kind) {
    case MeasurementKind::lsm: return "lsm";
    case MeasurementKind::orthogonal_lsm: return "orthogonal_lsm";
    case MeasurementKind::wlsm: return "wlsm";
    case MeasurementKind::srm: return "srm";
    case MeasurementKind::gu_srm: return "gu_srm";
    case MeasurementKind::binary_srm: return "binary_srm";
    case MeasurementKind::cyclic_srm: return "cyclic_srm";
    case MeasurementKind::custom: return "custom";
  }
  return "custom";
}

MeasurementKind measurement_kind_from_string(const std::string& name) {
  if (name == "lsm") return MeasurementKind::lsm;
  if (name == "orthogonal_lsm") return MeasurementKind::orthogonal_lsm;
  if (name == "wlsm") return MeasurementKind::wlsm;
  if (name == "srm") return MeasurementKind::srm;
  if (name == "gu_srm") return MeasurementKind::gu_srm;
  if (name == "binary_srm") return MeasurementKind::binary_srm;
  if (name == "cyclic_srm") return MeasurementKind::cyclic_srm;
  if (name == "custom") return MeasurementKind::custom;
  throw ValidationError("unknown measurement kind \"" + name + "\"");
}

namespace {

void require_normalized(const StateSet& s, const char* op) {
  if (!s.normalized) {
    throw PreconditionError(std::string(op) + " requires a normalized ensemble");
  }
}

void require_independent(const SvdFactors& f, int m, const char* op) {
  if (f.rank < m) {
    throw PreconditionError(std::string(op) + " requires linearly independent states (rank " +
                            std::to_string(f.rank) + " of " + std::to_string(m) + ")");
  }
}

}  // namespace

Measurement lsm(const StateSet& s, double rank_rel_tol) {
  const SvdFactors f = svd(s.states, rank_rel_tol);
  Measurement m;
  m.matrix = f.u.leftCols(f.rank) * f.v.leftCols(f.rank).adjoint();
  m.kind = MeasurementKind::lsm;
  m.rank_used = f.rank;
  return m;
}

Measurement orthogonal_lsm(const StateSet& s, double rank_rel_tol) {
  const int n = s.dim();
  const int mm = s.size();
  if (mm > n) {
    throw PreconditionError("orthonormal measurement vectors need m <= n (got m = " +
                            std::to_string(mm) + ", n = " + std::to_string(n) + ")");
  }
  const SvdFactors f = svd(s.states, rank_rel_tol);
  Measurement m;
  m.matrix = f.u.leftCols(mm) * f.v.adjoint();
  m.kind = MeasurementKind::orthogonal_lsm;
  m.rank_used = f.rank;
  return m;
}

Measurement wlsm(const StateSet& s, const RealVector& weights, double rank_rel_tol) {
  require_normalized(s, "weighted construction");
  const StateSet weighted = apply_weights(s, weights);
  const SvdFactors f = svd(weighted.states, rank_rel_tol);
  require_independent(f, s.size(), "weighted construction");
  Measurement m;
  m.matrix = f.u.leftCols(f.rank) * f.v.leftCols(f.rank).adjoint();
  m.kind = MeasurementKind::wlsm;
  m.rank_used = f.rank;
  m.weights.assign(weights.data(), weights.data() + weights.size());
  return m;
}

Measurement srm(const StateSet& s, double rank_rel_tol) {
  Measurement m = lsm(s, rank_rel_tol);
  m.kind = MeasurementKind::srm;
  return m;
}

double residual_error(const StateSet& s, const Measurement& m) {
  if (m.matrix.rows() != s.dim() || m.matrix.cols() != s.size()) {
    throw PreconditionError("measurement shape does not match the ensemble");
  }
  const Matrix e = s.states - m.matrix;
  return (e.adjoint() * e).trace().real();
}

double residual_error_closed_form(const SvdFactors& f, int m) {
  if (m < 1 || f.sigma.size() > m) {
    throw PreconditionError("state count inconsistent with the factorization");
  }
  const double total = f.sigma.squaredNorm();
  if (std::abs(total - m) > 1e-6 * m) {
    throw PreconditionError("closed form requires normalized states (sum sigma^2 = " +
                            std::to_string(total) + ", expected " + std::to_string(m) + ")");
  }
  double sum = 0.0;
  for (int i = 0; i < f.rank; ++i) sum += f.sigma[i];
  return f.rank + m - 2.0 * sum;
}

double orthogonal_residual(const StateSet& s, double rank_rel_tol) {
  if (s.size() > s.dim()) {
    throw PreconditionError("orthonormal measurement vectors need m <= n");
  }
  require_normalized(s, "closed-form residual");
  const SvdFactors f = svd(s.states, rank_rel_tol);
  return residual_error_closed_form(f, s.size()) + s.size() - f.rank;
}

double weighted_residual(const StateSet& s, const RealVector& weights) {
  require_normalized(s, "weighted residual");
  const StateSet weighted = apply_weights(s, weights);
  const SvdFactors f = svd(weighted.states);
  require_independent(f, s.size(), "weighted residual");
  double sum = 0.0;
  for (int i = 0; i < weights.size(); ++i) sum += weights[i];
  return 2.0 * (sum - f.sigma.sum());
}

double verify_srm_implicit(const StateSet& s, const Measurement& m) {
  if (m.matrix.rows() != s.dim() || m.matrix.cols() != s.size()) {
    throw PreconditionError("measurement shape does not match the ensemble");
  }
  const Matrix root = psd_sqrt(s.states.adjoint() * s.states);
  return (m.matrix.adjoint() * s.states - root).norm();
}

double neumark_check(const StateSet& s, double rank_rel_tol) {
  const Measurement best = lsm(s, rank_rel_tol);
  const Measurement ortho = orthogonal_lsm(s, rank_rel_tol);
  const SvdFactors f = svd(s.states, rank_rel_tol);
  const Matrix p = projector(f);
  double worst = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    const Vector hat = best.matrix.col(i);
    const Vector tld = ortho.matrix.col(i);
    const Matrix lhs = hat * hat.adjoint();
    const Matrix rhs = p * (tld * tld.adjoint()) * p;
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

}  // namespace srm
