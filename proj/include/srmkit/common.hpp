#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace srm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Malformed or inconsistent input data (bad schema, dimension mismatch,
// invalid priors, norm violations).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that violates an operation's requirements
// (rank deficiency, wrong ensemble size, out-of-range parameters).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Input that fails the group-structure requirements of the symmetry-based
// constructions (non-circulant Gram, bad generator set, non-uniform priors).
class GroupStructureError : public std::runtime_error {
 public:
  explicit GroupStructureError(const std::string& what) : std::runtime_error(what) {}
};

// Default column-norm tolerance for normalized ensembles.
inline constexpr double kNormTol = 1e-9;
// Relative singular-value threshold for rank decisions.
inline constexpr double kRankRelTol = 1e-10;
// Priors must sum to one within this bound.
inline constexpr double kPriorSumTol = 1e-12;
// Default tolerance for group-structure verification.
inline constexpr double kGuTol = 1e-9;
// Default tolerance for the optimality-condition checker.
inline constexpr double kHolevoTol = 1e-8;
// Hermiticity requirement on matrices fed to the eigensolver.
inline constexpr double kHermitianTol = 1e-10;
// A measurement must resolve the state span within this bound before
// outcome probabilities are trusted.
inline constexpr double kPovmCompletenessTol = 1e-6;
// Diagonal spread below this counts as constant for the sufficient
// optimality criterion on weighted ensembles.
inline constexpr double kConstantDiagonalTol = 1e-8;
// Transformed-spectrum values below this relative floor are treated as
// exact zeros; square-rooting bare round-off would otherwise manufacture
// phantom singular values above the rank threshold.
inline constexpr double kSpectrumFloorRel = 1e-10;

inline double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return max_abs(a - b);
}

inline bool all_finite(const Matrix& a) { return a.allFinite(); }

inline double hermiticity_defect(const Matrix& a) {
  return max_abs(a - a.adjoint());
}

}  // namespace srm
