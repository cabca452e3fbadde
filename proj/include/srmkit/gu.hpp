#pragma once

#include <vector>

#include <srmkit/measurement.hpp>

namespace srm {

// A finite abelian group presented as Z_m1 x ... x Z_mp together with the
// assignment of state-matrix columns to group elements: column i carries
// the element tuple order[i]. Optionally, `generators` holds one unitary
// per element (indexed like `order`) forming a commuting matrix group that
// generates the ensemble from the state at the zero element.
//
// An empty factor list denotes the trivial one-element group.
struct GroupSpec {
  std::vector<int> factors;
  std::vector<std::vector<int>> order;
  std::vector<Matrix> generators;

  int size() const { return static_cast<int>(order.size()); }
  int tuple_length() const { return static_cast<int>(factors.size()); }
  bool has_generators() const { return !generators.empty(); }

  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> negate(const std::vector<int>& a) const;
  // Column index carrying the given element tuple.
  int index_of(const std::vector<int>& element) const;
  int zero_index() const;
};

// Validates factor list, element order (a bijection onto the group), and
// the generator set when present (unitary, commuting, closed under the
// product law, identity at the zero element).
GroupSpec make_group_spec(std::vector<int> factors,
                          std::vector<std::vector<int>> order,
                          std::vector<Matrix> generators = {},
                          double tol = kGuTol);

// Natural enumeration order, no generators.
GroupSpec make_group_spec(std::vector<int> factors);

// A complex-valued function on the group, stored in column order.
struct GroupFunction {
  Vector values;
};

// Character kernel matrix F(h, g) = (1/sqrt m) exp(-2 pi i sum_k h_k g_k / m_k),
// rows and columns both in column order. Unitary and symmetric; it
// diagonalizes every Gram matrix with the group's circulant structure.
Matrix ft_matrix(const GroupSpec& g);

// Verifies that the ensemble is geometrically uniform for the given group:
// the Gram entry for columns (i, j) must depend only on the element
// difference order[j] - order[i]. Requires uniform priors. When generators
// are present, also checks that they map the zero-element state onto every
// column. Returns the overlap function s(g) = <phi_0 | phi_g>.
GroupFunction check_gu(const StateSet& s, const GroupSpec& g, double tol = kGuTol);

// Singular values of a group-uniform ensemble from the transform of its
// overlap function: sigma(h) = m^(1/4) sqrt(shat(h)). The transform must be
// real and nonnegative up to round-off; values below the relative floor
// are treated as exact zeros.
GroupFunction gu_singular_values(const GroupFunction& s, const GroupSpec& g);

// Square-root measurement of a group-uniform ensemble assembled in the
// character basis: M = Phi F diag(1/sigma(h)) F* with zeros left in place.
// Equals the least-squares measurement; inherits the ensemble's symmetry.
Measurement gu_srm(const StateSet& s, const GroupSpec& g,
                   double rank_rel_tol = kRankRelTol, double tol = kGuTol);

// Closed form for any two-state ensemble (every such ensemble is uniform
// under a reflection once phases are aligned): M = Phi C where C is built
// from sigma(0), sigma(1) = sqrt(1 +- |a|), with the alignment phase
// restored so the output matches the least-squares measurement of the
// original states. Rejects coinciding states (|a| = 1); flags
// near-coincidence (sigma(1) < 1e-6) in the note.
Measurement binary_srm(const StateSet& s);

// Square-root measurement for a cyclically uniform ensemble (circulant
// Gram); `order` must equal the number of states.
Measurement cyclic_srm(const StateSet& s, int order,
                       double rank_rel_tol = kRankRelTol, double tol = kGuTol);

// Largest deviation || U_g' mu(g) - mu(g + g') || over all generator and
// column pairs; zero when the measurement inherits the group symmetry.
double symmetry_check(const Measurement& m, const GroupSpec& g);

}  // namespace srm
