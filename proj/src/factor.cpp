#include <srmkit/factor.hpp>

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace srm {

namespace {

// Shared eigendecomposition front end for the Hermitian matrix functions.
void hermitian_eig(const Matrix& h, RealVector& values, Matrix& vectors) {
  if (h.rows() != h.cols()) {
    throw PreconditionError("matrix must be square");
  }
  if (!h.allFinite()) {
    throw PreconditionError("matrix contains non-finite entries");
  }
  if (hermiticity_defect(h) > kHermitianTol) {
    throw PreconditionError("matrix is not Hermitian within 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  if (eig.info() != Eigen::Success) {
    throw PreconditionError("eigendecomposition failed to converge");
  }
  values = eig.eigenvalues();
  vectors = eig.eigenvectors();
}

void require_near_psd(const RealVector& values) {
  const double lmax = values.size() ? std::max(values.maxCoeff(), 0.0) : 0.0;
  const double floor = -kSpectrumFloorRel * std::max(lmax, 1.0);
  if (values.size() && values.minCoeff() < floor) {
    throw PreconditionError("matrix has a significantly negative eigenvalue (" +
                            std::to_string(values.minCoeff()) + ")");
  }
}

}  // namespace

SvdFactors svd(const Matrix& phi, double rank_rel_tol) {
  if (!(rank_rel_tol > 0.0 && rank_rel_tol < 1.0)) {
    throw PreconditionError("rank tolerance must lie in (0, 1)");
  }
  if (phi.size() == 0 || !phi.allFinite()) {
    throw PreconditionError("matrix is empty or contains non-finite entries");
  }
  Eigen::JacobiSVD<Matrix> dec(phi, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdFactors f;
  f.u = dec.matrixU();
  f.sigma = dec.singularValues();
  f.v = dec.matrixV();
  f.rank = 0;
  if (f.sigma.size() > 0 && f.sigma[0] > 0.0) {
    for (int i = 0; i < f.sigma.size(); ++i) {
      if (f.sigma[i] > rank_rel_tol * f.sigma[0]) ++f.rank;
    }
  }
  return f;
}

Matrix pinv_sqrt(const Matrix& h, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw PreconditionError("rank tolerance must lie in (0, 1)");
  }
  RealVector values;
  Matrix vectors;
  hermitian_eig(h, values, vectors);
  require_near_psd(values);
  const double lmax = std::max(values.maxCoeff(), 0.0);
  RealVector scaled(values.size());
  for (int i = 0; i < values.size(); ++i) {
    scaled[i] = values[i] > rel_tol * lmax ? 1.0 / std::sqrt(values[i]) : 0.0;
  }
  return vectors * scaled.asDiagonal() * vectors.adjoint();
}

Matrix psd_sqrt(const Matrix& h) {
  RealVector values;
  Matrix vectors;
  hermitian_eig(h, values, vectors);
  require_near_psd(values);
  const double lmax = std::max(values.maxCoeff(), 0.0);
  const double floor = kSpectrumFloorRel * lmax;
  RealVector scaled(values.size());
  for (int i = 0; i < values.size(); ++i) {
    scaled[i] = values[i] > floor ? std::sqrt(values[i]) : 0.0;
  }
  return vectors * scaled.asDiagonal() * vectors.adjoint();
}

Matrix projector(const SvdFactors& f) {
  const auto basis = f.u.leftCols(f.rank);
  return basis * basis.adjoint();
}

}  // namespace srm
