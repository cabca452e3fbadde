#pragma once

#include <srmkit/common.hpp>

namespace srm {

// An ensemble of pure states: column g of `states` is the state vector
// |phi_g> in an n-dimensional space, with prior probability priors[g].
// Columns are unit vectors unless `normalized` is false.
struct StateSet {
  Matrix states;
  RealVector priors;
  bool normalized = true;

  int dim() const { return static_cast<int>(states.rows()); }
  int size() const { return static_cast<int>(states.cols()); }
};

// Validates and builds a StateSet. Priors must be nonnegative and sum to
// one within 1e-12; with `normalized` set, every column norm must be 1
// within `norm_tol`. Throws ValidationError.
StateSet make_state_set(Matrix states, RealVector priors, bool normalized = true,
                        double norm_tol = kNormTol);

// Uniform priors.
StateSet make_state_set(Matrix states, bool normalized = true,
                        double norm_tol = kNormTol);

// Matrix of pairwise inner products S(i, j) = <phi_i | phi_j>.
struct GramMatrix {
  Matrix entries;
};

GramMatrix gram(const StateSet& s);

// Number of singular values of the state matrix above rel_tol times the
// largest one. rel_tol must lie in (0, 1).
int numerical_rank(const StateSet& s, double rel_tol = kRankRelTol);

// For a two-state ensemble, rotates the global phase of the second state
// so that <phi_1 | phi_2> becomes real nonnegative. Norms and the overlap
// magnitude are unchanged.
StateSet phase_align_binary(const StateSet& s);

// Scales column i by weights[i] > 0. The result is flagged unnormalized;
// priors carry over.
StateSet apply_weights(const StateSet& s, const RealVector& weights);

}  // namespace srm
