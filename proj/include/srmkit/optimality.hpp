#pragma once

#include <cstdint>
#include <string>

#include <srmkit/measurement.hpp>

namespace srm {

enum class Verdict { verified_mpem, inconclusive, violated };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& name);

// Numerical evidence for or against minimum-probability-of-error
// optimality of a rank-one measurement. Violations are data, not errors.
struct OptimalityReport {
  // max_{i,j} || Pi_i (W_j - W_i) Pi_j ||_F with W_i = p_i |phi_i><phi_i|.
  double holevo_eq_residual = 0.0;
  // min_i lambda_min(Gamma - W_i), Gamma = sum_j Pi_j W_j.
  double holevo_psd_margin = 0.0;
  double gamma_hermiticity = 0.0;
  double p_error = 0.0;
  // max - min of the diagonal of the weighted Gram root (weights sqrt p_i).
  double sasaki_spread = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

// Probability of a wrong outcome, 1 - sum_i p_i |<mu_i|phi_i>|^2. The
// measurement must resolve the span of the states within 1e-6.
double error_probability(const StateSet& s, const Measurement& m);

// Evaluates the necessary-and-sufficient optimality conditions for the
// given measurement. verified_mpem requires the equality residual and
// hermiticity defect within tol and the PSD margin above -tol (margin
// tolerance scales with trace(Gamma) for large ensembles); clear failures
// are reported as violated, marginal ones as inconclusive.
OptimalityReport holevo_conditions(const StateSet& s, const Measurement& m,
                                   double tol = kHolevoTol);

struct SasakiResult {
  bool constant_diagonal = false;
  double spread = 0.0;
};

// Sufficient optimality criterion for the weighted square-root measurement:
// linearly independent states whose weighted Gram root has a constant
// diagonal. Weights are sqrt p_i when priors_as_weights is set, else all 1.
SasakiResult sasaki_criterion(const StateSet& s, bool priors_as_weights = true);

// Brute-force minimum error probability for a two-state ensemble over
// orthogonal measurements in the state span: angle/phase grid followed by
// golden-section refinement well below 1e-4 rad.
double helstrom_oracle(const StateSet& s);

// Brute-force minimum of the residual trace((Phi - M)*(Phi - M)) over the
// feasible set M M* = P via random-restart Riemannian descent with
// exponential-map steps on the co-isometry factor. Reference oracle only:
// limited to n <= 6, m <= 6 and trials >= 10000.
double brute_force_lsm_oracle(const StateSet& s, int trials = 20000,
                              std::uint64_t seed = 1);

// Ordered Gram-Schmidt of the state columns; a deliberately naive
// comparison baseline, not an optimal construction.
Measurement gram_schmidt_baseline(const StateSet& s);

}  // namespace srm
