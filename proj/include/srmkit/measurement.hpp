#pragma once

#include <string>
#include <vector>

#include <srmkit/factor.hpp>
#include <srmkit/state_set.hpp>

namespace srm {

enum class MeasurementKind {
  lsm,
  orthogonal_lsm,
  wlsm,
  srm,
  gu_srm,
  binary_srm,
  cyclic_srm,
  custom,
};

std::string to_string(MeasurementKind kind);
MeasurementKind measurement_kind_from_string(const std::string& name);

// A rank-one measurement: column i of `matrix` is the measurement vector
// |mu_i> for outcome i. For the least-squares family the columns satisfy
// M M* = P (projector onto the state span); the orthogonal variant instead
// satisfies M* M = I.
struct Measurement {
  Matrix matrix;
  MeasurementKind kind = MeasurementKind::custom;
  int rank_used = 0;
  std::vector<double> weights;  // populated by the weighted construction
  std::string note;             // conditioning warnings
};

// Measurement minimizing the summed squared error Sum_i <e_i|e_i> with
// e_i = |phi_i> - |mu_i> subject to M M* = P. Built from the SVD as
// M = sum_{i<=r} |u_i><v_i|; never via explicit inverse products.
Measurement lsm(const StateSet& s, double rank_rel_tol = kRankRelTol);

// Variant with orthonormal measurement vectors (M* M = I), optimal among
// such; the free columns beyond the rank are the matching left singular
// vectors. Requires m <= n.
Measurement orthogonal_lsm(const StateSet& s, double rank_rel_tol = kRankRelTol);

// Least-squares measurement of the column-weighted ensemble; minimizes
// Sum_i w_i^2 <e'_i|e'_i> over POVMs on the span. Requires linearly
// independent, normalized states and positive weights.
Measurement wlsm(const StateSet& s, const RealVector& weights,
                 double rank_rel_tol = kRankRelTol);

// Square-root measurement. Identical matrix to lsm; the name reflects the
// equivalent construction M = Phi (Phi* Phi)^(-1/2). Priors are never
// folded in implicitly; weight first for a prior-dependent variant.
Measurement srm(const StateSet& s, double rank_rel_tol = kRankRelTol);

// Direct residual trace((Phi - M)*(Phi - M)). Valid for any ensemble,
// normalized or not.
double residual_error(const StateSet& s, const Measurement& m);

// Closed form r + m - 2 sum_{i<=r} sigma_i for the least-squares minimum.
// Only valid for normalized ensembles; rejects factors whose singular
// values squared do not sum to m.
double residual_error_closed_form(const SvdFactors& f, int m);

// Minimal residual over orthonormal-column measurements: the closed form
// plus m - r.
double orthogonal_residual(const StateSet& s, double rank_rel_tol = kRankRelTol);

// Weighted residual 2 sum_i (w_i - sigma^w_i) where sigma^w are the
// singular values of the weighted state matrix. Same preconditions as the
// weighted construction.
double weighted_residual(const StateSet& s, const RealVector& weights);

// Frobenius distance || M* Phi - (Phi* Phi)^(1/2) ||_F, the defining
// property of the square-root measurement.
double verify_srm_implicit(const StateSet& s, const Measurement& m);

// Realization check for the orthogonal variant: the rank-one operators of
// the least-squares measurement must equal the span-projected operators of
// the orthogonal one. Returns the largest Frobenius deviation.
double neumark_check(const StateSet& s, double rank_rel_tol = kRankRelTol);

}  // namespace srm
