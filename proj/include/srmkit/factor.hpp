#pragma once

#include <srmkit/common.hpp>

namespace srm {

// Full singular value decomposition phi = u * diag(sigma) * v.adjoint()
// with u (n x n) and v (m x m) unitary, sigma nonincreasing, and `rank`
// the count of singular values above the relative threshold.
struct SvdFactors {
  Matrix u;
  RealVector sigma;
  Matrix v;
  int rank = 0;
};

SvdFactors svd(const Matrix& phi, double rank_rel_tol = kRankRelTol);

// Square root of the pseudo-inverse of a Hermitian PSD matrix, computed by
// eigendecomposition: eigenvalues above rel_tol * lambda_max map to
// 1/sqrt(lambda), the rest to 0. Small negative eigenvalues from round-off
// are clamped; significant negativity or a non-Hermitian input throws.
Matrix pinv_sqrt(const Matrix& h, double rel_tol = kRankRelTol);

// PSD square root by the same eigendecomposition route (no inversion).
// Eigenvalues within round-off of zero relative to the largest one are
// flattened to zero so that exactly dependent inputs get an exact-rank root.
Matrix psd_sqrt(const Matrix& h);

// Orthogonal projector onto the span of the first `rank` left singular
// vectors.
Matrix projector(const SvdFactors& f);

}  // namespace srm
