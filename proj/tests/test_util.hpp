#pragma once

// Shared fixtures and random generators for the test binaries.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <srmkit/srmkit.hpp>

namespace testutil {

using srm::Complex;
using srm::Matrix;
using srm::RealVector;
using srm::Vector;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Matrix random_matrix(std::mt19937_64& gen, int n, int m) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix a(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      a(i, j) = Complex(dist(gen), dist(gen));
    }
  }
  return a;
}

inline Matrix random_unitary(std::mt19937_64& gen, int n) {
  Matrix a = random_matrix(gen, n, n);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    Complex d = r(i, i);
    q.col(i) *= std::abs(d) > 1e-300 ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

// Random skew-Hermitian matrix (tangent direction of the unitary group).
inline Matrix random_skew(std::mt19937_64& gen, int n) {
  Matrix b = random_matrix(gen, n, n);
  return 0.5 * (b - b.adjoint());
}

// exp(k) for skew-Hermitian k, via the eigendecomposition of -i k.
inline Matrix skew_exponential(const Matrix& k) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(Complex(0.0, -1.0) * k));
  Vector phases(k.rows());
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline srm::StateSet random_state_set(std::mt19937_64& gen, int n, int m) {
  Matrix a = random_matrix(gen, n, m);
  for (int j = 0; j < m; ++j) {
    a.col(j).normalize();
  }
  return srm::make_state_set(std::move(a));
}

// States drawn from a `rank`-dimensional subspace, so the set is
// linearly dependent whenever rank < m.
inline srm::StateSet random_state_set_with_rank(std::mt19937_64& gen, int n, int m,
                                                int rank) {
  Matrix basis = random_matrix(gen, n, rank);
  Matrix mix = random_matrix(gen, rank, m);
  Matrix a = basis * mix;
  for (int j = 0; j < m; ++j) {
    a.col(j).normalize();
  }
  return srm::make_state_set(std::move(a));
}

inline RealVector random_priors(std::mt19937_64& gen, int m) {
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  RealVector p(m);
  for (int i = 0; i < m; ++i) {
    p(i) = dist(gen);
  }
  p /= p.sum();
  return p;
}

// Two equiangular plane states with overlap -1/2.
inline srm::StateSet two_state_set() {
  Matrix phi(2, 2);
  phi << Complex(1.0, 0.0), Complex(-0.5, 0.0),
         Complex(0.0, 0.0), Complex(std::sqrt(3.0) / 2.0, 0.0);
  return srm::make_state_set(std::move(phi));
}

// Reflection exchanging the two equiangular states; an order-2 symmetry.
inline srm::GroupSpec two_state_group() {
  Matrix r(2, 2);
  r << Complex(-0.5, 0.0), Complex(std::sqrt(3.0) / 2.0, 0.0),
       Complex(std::sqrt(3.0) / 2.0, 0.0), Complex(0.5, 0.0);
  return srm::make_group_spec({2}, {{0}, {1}}, {Matrix::Identity(2, 2), r});
}

// Four states in dimension 4: the orbit of (1,1,1,1)/2 under diagonal
// sign flips forming a Z_2 x Z_2 group. Linearly dependent (rank 3).
inline srm::StateSet four_state_set() {
  Matrix phi(4, 4);
  phi << 1, -1, -1, 1,
         1, 1, -1, -1,
         1, -1, 1, -1,
         1, -1, -1, 1;
  phi *= 0.5;
  return srm::make_state_set(std::move(phi));
}

inline srm::GroupSpec four_state_group() {
  auto diag4 = [](double a, double b, double c, double d) {
    Matrix u = Matrix::Zero(4, 4);
    u(0, 0) = a;
    u(1, 1) = b;
    u(2, 2) = c;
    u(3, 3) = d;
    return u;
  };
  std::vector<Matrix> gens = {
      diag4(1, 1, 1, 1),
      diag4(-1, 1, -1, -1),
      diag4(-1, -1, 1, -1),
      diag4(1, -1, -1, 1),
  };
  return srm::make_group_spec({2, 2}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, gens);
}

// Tensor squares of three coplanar polarization vectors 60 degrees apart;
// a cyclic (Z_3) uniform set with constant Gram off-diagonal 1/4.
inline srm::StateSet peres_wootters_set() {
  auto tensor_sq = [](double x, double y) {
    Vector v(4);
    v << x * x, x * y, y * x, y * y;
    return v;
  };
  double s = std::sqrt(3.0) / 2.0;
  Matrix phi(4, 3);
  phi.col(0) = tensor_sq(1.0, 0.0);
  phi.col(1) = tensor_sq(0.5, s);
  phi.col(2) = tensor_sq(-0.5, s);
  return srm::make_state_set(std::move(phi));
}

inline srm::GroupSpec peres_wootters_group() {
  auto rot = [](double deg) {
    double t = deg * M_PI / 180.0;
    Matrix q(2, 2);
    q << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return q;
  };
  auto kron2 = [](const Matrix& q) {
    Matrix out(4, 4);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        out.block(2 * i, 2 * j, 2, 2) = q(i, j) * q;
      }
    }
    return out;
  };
  std::vector<Matrix> gens = {Matrix::Identity(4, 4), kron2(rot(60.0)),
                              kron2(rot(120.0))};
  return srm::make_group_spec({3}, {{0}, {1}, {2}}, gens);
}

struct GuInstance {
  srm::StateSet states;
  srm::GroupSpec group;
};

// Random group-uniform ensemble: diagonal character generators applied to
// a random seed state with amplitudes bounded away from zero. The rank
// equals the number of distinct characters drawn, so n < m forces
// dependence.
inline GuInstance random_gu_instance(std::mt19937_64& gen, const std::vector<int>& factors,
                                     int n) {
  srm::GroupSpec base = srm::make_group_spec(factors);
  const int m = base.size();
  std::uniform_int_distribution<int> pick(0, m - 1);
  std::vector<std::vector<int>> chars(n);
  for (int t = 0; t < n; ++t) {
    chars[t] = base.order[static_cast<std::size_t>(pick(gen))];
  }
  auto chi = [&](const std::vector<int>& h, const std::vector<int>& g) {
    double phase = 0.0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      phase += 2.0 * M_PI * h[k] * g[k] / factors[k];
    }
    return std::polar(1.0, phase);
  };
  std::uniform_real_distribution<double> amp(0.3, 1.0);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * M_PI);
  Vector seed(n);
  for (int t = 0; t < n; ++t) {
    seed(t) = std::polar(amp(gen), ph(gen));
  }
  seed.normalize();
  std::vector<Matrix> gens(m);
  Matrix states(n, m);
  for (int i = 0; i < m; ++i) {
    Matrix u = Matrix::Zero(n, n);
    for (int t = 0; t < n; ++t) {
      u(t, t) = chi(chars[t], base.order[static_cast<std::size_t>(i)]);
    }
    gens[static_cast<std::size_t>(i)] = u;
    states.col(i) = u * seed;
  }
  return {srm::make_state_set(std::move(states)),
          srm::make_group_spec(factors, base.order, gens)};
}

inline double entry_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testutil
