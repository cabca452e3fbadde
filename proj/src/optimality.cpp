#include <srmkit/optimality.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

namespace srm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified_mpem: return "verified_mpem";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::violated: return "violated";
  }
  return "inconclusive";
}

Verdict verdict_from_string(const std::string& name) {
  if (name == "verified_mpem") return Verdict::verified_mpem;
  if (name == "inconclusive") return Verdict::inconclusive;
  if (name == "violated") return Verdict::violated;
  throw ValidationError("unknown verdict \"" + name + "\"");
}

namespace {

void require_shape(const StateSet& s, const Measurement& m) {
  if (m.matrix.rows() != s.dim() || m.matrix.cols() != s.size()) {
    throw PreconditionError("measurement shape does not match the ensemble");
  }
}

double born_error(const StateSet& s, const Measurement& m) {
  double correct = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    correct += s.priors[i] * std::norm(m.matrix.col(i).dot(s.states.col(i)));
  }
  return 1.0 - correct;
}

double min_eigenvalue(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

const double kGoldenRatio = (std::sqrt(5.0) - 1.0) / 2.0;

double golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                       double tol) {
  double a = lo, b = hi;
  double c = b - kGoldenRatio * (b - a);
  double d = a + kGoldenRatio * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGoldenRatio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGoldenRatio * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// exp(K) for skew-Hermitian K via the Hermitian eigendecomposition of -iK.
Matrix skew_exponential(const Matrix& k) {
  const Matrix h = Complex(0.0, -1.0) * k;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  Vector phases(eig.eigenvalues().size());
  for (int i = 0; i < phases.size(); ++i) {
    phases[i] = std::polar(1.0, eig.eigenvalues()[i]);
  }
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

double error_probability(const StateSet& s, const Measurement& m) {
  require_shape(s, m);
  const Matrix p = m.matrix * m.matrix.adjoint();
  const double idem = max_abs(Matrix(p * p - p));
  const double resolves = max_abs(Matrix(p * s.states - s.states));
  if (idem > kPovmCompletenessTol || resolves > kPovmCompletenessTol) {
    throw PreconditionError("measurement does not resolve the state span (completeness residual " +
                            std::to_string(std::max(idem, resolves)) + ")");
  }
  return born_error(s, m);
}

OptimalityReport holevo_conditions(const StateSet& s, const Measurement& m, double tol) {
  require_shape(s, m);
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  const int count = s.size();
  const int n = s.dim();

  std::vector<Matrix> outcome(count), weighted(count);
  for (int i = 0; i < count; ++i) {
    outcome[i] = m.matrix.col(i) * m.matrix.col(i).adjoint();
    weighted[i] = s.priors[i] * (s.states.col(i) * s.states.col(i).adjoint());
  }
  Matrix gamma = Matrix::Zero(n, n);
  for (int j = 0; j < count; ++j) gamma += outcome[j] * weighted[j];

  OptimalityReport report;
  report.gamma_hermiticity = hermiticity_defect(gamma);

  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      const double dev = (outcome[i] * (weighted[j] - weighted[i]) * outcome[j]).norm();
      report.holevo_eq_residual = std::max(report.holevo_eq_residual, dev);
    }
  }

  const Matrix gamma_h = 0.5 * (gamma + gamma.adjoint());
  report.holevo_psd_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    report.holevo_psd_margin =
        std::min(report.holevo_psd_margin, min_eigenvalue(gamma_h - weighted[i]));
  }

  report.p_error = born_error(s, m);

  RealVector w(count);
  for (int i = 0; i < count; ++i) w[i] = std::sqrt(s.priors[i]);
  const Matrix weighted_states = s.states * w.asDiagonal();
  const Matrix root = psd_sqrt(weighted_states.adjoint() * weighted_states);
  double lo = root(0, 0).real(), hi = lo;
  for (int i = 1; i < count; ++i) {
    lo = std::min(lo, root(i, i).real());
    hi = std::max(hi, root(i, i).real());
  }
  report.sasaki_spread = hi - lo;

  const double margin_tol = tol * std::max(1.0, std::abs(gamma.trace().real()));
  const double hard = std::max(100.0 * tol, 1e-6);
  if (report.holevo_eq_residual <= tol && report.gamma_hermiticity <= tol &&
      report.holevo_psd_margin >= -margin_tol) {
    report.verdict = Verdict::verified_mpem;
  } else if (report.holevo_eq_residual > hard || report.gamma_hermiticity > hard ||
             report.holevo_psd_margin < -hard) {
    report.verdict = Verdict::violated;
  } else {
    report.verdict = Verdict::inconclusive;
  }
  return report;
}

SasakiResult sasaki_criterion(const StateSet& s, bool priors_as_weights) {
  if (!s.normalized) {
    throw PreconditionError("criterion is stated for normalized ensembles");
  }
  RealVector w(s.size());
  for (int i = 0; i < s.size(); ++i) {
    w[i] = priors_as_weights ? std::sqrt(s.priors[i]) : 1.0;
  }
  for (int i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0)) throw PreconditionError("zero prior makes the weighted Gram singular");
  }
  const Matrix weighted = s.states * w.asDiagonal();
  const SvdFactors f = svd(weighted);
  if (f.rank < s.size()) {
    throw PreconditionError("criterion requires linearly independent states");
  }
  const Matrix root = psd_sqrt(weighted.adjoint() * weighted);
  double lo = root(0, 0).real(), hi = lo;
  for (int i = 1; i < s.size(); ++i) {
    lo = std::min(lo, root(i, i).real());
    hi = std::max(hi, root(i, i).real());
  }
  SasakiResult out;
  out.spread = hi - lo;
  out.constant_diagonal = out.spread <= kConstantDiagonalTol;
  return out;
}

double helstrom_oracle(const StateSet& s) {
  if (s.size() != 2) {
    throw PreconditionError("oracle is defined for exactly two states");
  }
  if (!s.normalized) {
    throw PreconditionError("oracle requires normalized states");
  }
  const double p1 = s.priors[0], p2 = s.priors[1];
  const SvdFactors f = svd(s.states);
  if (f.rank <= 1) {
    // One span direction: assign it to the likelier outcome.
    return std::min(p1, p2);
  }
  const Matrix basis = f.u.leftCols(2);
  const Vector x = basis.adjoint() * s.states.col(0);
  const Vector y = basis.adjoint() * s.states.col(1);

  const auto pe = [&](double theta, double phase) {
    const Complex e = std::polar(1.0, phase);
    Vector m1(2), m2(2);
    m1 << std::cos(theta), e * std::sin(theta);
    m2 << -std::conj(e) * std::sin(theta), std::cos(theta);
    return 1.0 - p1 * std::norm(m1.dot(x)) - p2 * std::norm(m2.dot(y));
  };

  const int grid = 181;
  double best = std::numeric_limits<double>::infinity();
  double best_t = 0.0, best_p = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double t = std::numbers::pi * i / grid;
    for (int j = 0; j < grid; ++j) {
      const double ph = 2.0 * std::numbers::pi * j / grid;
      const double v = pe(t, ph);
      if (v < best) {
        best = v;
        best_t = t;
        best_p = ph;
      }
    }
  }
  double span_t = std::numbers::pi / grid;
  double span_p = 2.0 * std::numbers::pi / grid;
  for (int sweep = 0; sweep < 4; ++sweep) {
    best_t = golden_minimize([&](double t) { return pe(t, best_p); }, best_t - span_t,
                             best_t + span_t, 1e-8);
    best_p = golden_minimize([&](double ph) { return pe(best_t, ph); }, best_p - span_p,
                             best_p + span_p, 1e-8);
    span_t /= 40.0;
    span_p /= 40.0;
  }
  return pe(best_t, best_p);
}

double brute_force_lsm_oracle(const StateSet& s, int trials, std::uint64_t seed) {
  if (s.dim() > 6 || s.size() > 6) {
    throw PreconditionError("oracle size limit is 6 x 6");
  }
  if (trials < 10000) {
    throw PreconditionError("oracle needs at least 10000 trials");
  }
  const SvdFactors f = svd(s.states);
  const int r = f.rank;
  const int m = s.size();
  if (r == 0) return s.states.squaredNorm();
  const Matrix basis = f.u.leftCols(r);
  const Matrix target = basis.adjoint() * s.states;  // r x m

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int restarts = 12;
  const int iters = std::max(64, trials / restarts);

  const auto objective = [&](const Matrix& a) { return (target - a).squaredNorm(); };

  double best = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < restarts; ++attempt) {
    Matrix z(m, r);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < r; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
    }
    const Eigen::HouseholderQR<Matrix> qr(z);
    Matrix a = Matrix(qr.householderQ()).leftCols(r).adjoint();  // rows orthonormal

    double value = objective(a);
    double step = 1.0;
    for (int it = 0; it < iters; ++it) {
      const Matrix c = a.adjoint() * (target - a);
      const Matrix k = 0.5 * (c - c.adjoint());
      if (k.norm() < 1e-11) break;
      bool moved = false;
      while (step > 1e-12) {
        const Matrix candidate = a * skew_exponential(Matrix(step * k));
        const double v = objective(candidate);
        if (v < value - 1e-15) {
          a = candidate;
          value = v;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
      step = std::min(step * 1.5, 1.0);
    }
    best = std::min(best, value);
  }
  return best;
}

Measurement gram_schmidt_baseline(const StateSet& s) {
  Matrix q = s.states;
  Measurement m;
  for (int i = 0; i < q.cols(); ++i) {
    for (int j = 0; j < i; ++j) {
      q.col(i) -= q.col(j).dot(q.col(i)) * q.col(j);
    }
    const double norm = q.col(i).norm();
    if (norm > 1e-12) {
      q.col(i) /= norm;
    } else {
      q.col(i).setZero();
      m.note = "dependent column " + std::to_string(i + 1) + " mapped to the zero vector";
    }
  }
  m.matrix = std::move(q);
  m.kind = MeasurementKind::custom;
  m.rank_used = 0;
  for (int i = 0; i < m.matrix.cols(); ++i) {
    if (m.matrix.col(i).norm() > 0.5) ++m.rank_used;
  }
  return m;
}

}  // namespace srm
