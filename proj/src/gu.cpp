#include <srmkit/gu.hpp>

#include <cmath>
#include <numbers>
#include <unordered_map>

namespace srm {

namespace {

long element_key(const std::vector<int>& e, const std::vector<int>& factors) {
  long key = 0;
  for (size_t k = 0; k < factors.size(); ++k) key = key * factors[k] + e[k];
  return key;
}

}  // namespace

std::vector<int> GroupSpec::add(const std::vector<int>& a, const std::vector<int>& b) const {
  std::vector<int> out(factors.size());
  for (size_t k = 0; k < factors.size(); ++k) out[k] = (a[k] + b[k]) % factors[k];
  return out;
}

std::vector<int> GroupSpec::negate(const std::vector<int>& a) const {
  std::vector<int> out(factors.size());
  for (size_t k = 0; k < factors.size(); ++k) out[k] = (factors[k] - a[k]) % factors[k];
  return out;
}

int GroupSpec::index_of(const std::vector<int>& element) const {
  for (int i = 0; i < size(); ++i) {
    if (order[i] == element) return i;
  }
  throw ValidationError("element tuple not present in the group order");
}

int GroupSpec::zero_index() const {
  return index_of(std::vector<int>(factors.size(), 0));
}

GroupSpec make_group_spec(std::vector<int> factors,
                          std::vector<std::vector<int>> order,
                          std::vector<Matrix> generators, double tol) {
  long m = 1;
  for (int f : factors) {
    if (f < 2) throw ValidationError("group factors must be integers >= 2");
    m *= f;
  }
  if (static_cast<long>(order.size()) != m) {
    throw ValidationError("order lists " + std::to_string(order.size()) +
                          " elements, group has " + std::to_string(m));
  }
  std::unordered_map<long, int> seen;
  for (size_t i = 0; i < order.size(); ++i) {
    if (order[i].size() != factors.size()) {
      throw ValidationError("order entry " + std::to_string(i + 1) +
                            " has the wrong tuple length");
    }
    for (size_t k = 0; k < factors.size(); ++k) {
      if (order[i][k] < 0 || order[i][k] >= factors[k]) {
        throw ValidationError("order entry " + std::to_string(i + 1) +
                              " is outside the factor ranges");
      }
    }
    if (!seen.emplace(element_key(order[i], factors), static_cast<int>(i)).second) {
      throw ValidationError("order repeats an element tuple; it must be a bijection");
    }
  }

  GroupSpec g;
  g.factors = std::move(factors);
  g.order = std::move(order);

  if (!generators.empty()) {
    if (static_cast<long>(generators.size()) != m) {
      throw GroupStructureError("generator list must have one unitary per group element");
    }
    const auto n = generators[0].rows();
    for (const Matrix& u : generators) {
      if (u.rows() != n || u.cols() != n) {
        throw GroupStructureError("generators must be square matrices of a common size");
      }
      if (max_abs(Matrix(u.adjoint() * u - Matrix::Identity(n, n))) > tol) {
        throw GroupStructureError("generator is not unitary within tolerance");
      }
    }
    const Matrix eye = Matrix::Identity(n, n);
    if (max_abs_diff(generators[g.zero_index()], eye) > tol) {
      throw GroupStructureError("the zero-element generator must be the identity");
    }
    for (int i = 0; i < g.size(); ++i) {
      for (int j = 0; j < g.size(); ++j) {
        const int k = g.index_of(g.add(g.order[i], g.order[j]));
        if (max_abs_diff(Matrix(generators[i] * generators[j]), generators[k]) > tol) {
          throw GroupStructureError(
              "generators are not closed under the group product (elements " +
              std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
        }
      }
    }
    g.generators = std::move(generators);
  }
  return g;
}

GroupSpec make_group_spec(std::vector<int> factors) {
  long m = 1;
  for (int f : factors) {
    if (f < 2) throw ValidationError("group factors must be integers >= 2");
    m *= f;
  }
  std::vector<std::vector<int>> order;
  order.reserve(m);
  std::vector<int> tuple(factors.size(), 0);
  for (long i = 0; i < m; ++i) {
    order.push_back(tuple);
    for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
      if (++tuple[k] < factors[k]) break;
      tuple[k] = 0;
    }
  }
  return make_group_spec(std::move(factors), std::move(order));
}

Matrix ft_matrix(const GroupSpec& g) {
  const int m = g.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  Matrix f(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double angle = 0.0;
      for (int k = 0; k < g.tuple_length(); ++k) {
        const int prod = (g.order[i][k] * g.order[j][k]) % g.factors[k];
        angle -= 2.0 * std::numbers::pi * prod / g.factors[k];
      }
      f(i, j) = std::polar(scale, angle);
    }
  }
  return f;
}

GroupFunction check_gu(const StateSet& s, const GroupSpec& g, double tol) {
  if (s.size() != g.size()) {
    throw ValidationError("ensemble has " + std::to_string(s.size()) +
                          " states, group order lists " + std::to_string(g.size()));
  }
  const double uniform = 1.0 / s.size();
  for (int i = 0; i < s.size(); ++i) {
    if (std::abs(s.priors[i] - uniform) > kPriorSumTol) {
      throw PreconditionError("group-uniform constructions require uniform priors");
    }
  }
  const Matrix gramm = s.states.adjoint() * s.states;
  const int zero = g.zero_index();

  GroupFunction fn;
  fn.values = gramm.row(zero).transpose();

  double worst = 0.0;
  int worst_i = 0, worst_j = 0;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      const int d = g.index_of(g.add(g.order[j], g.negate(g.order[i])));
      const double dev = std::abs(gramm(i, j) - fn.values[d]);
      if (dev > worst) {
        worst = dev;
        worst_i = i;
        worst_j = j;
      }
    }
  }
  if (worst > tol) {
    throw GroupStructureError(
        "Gram matrix is not group-circulant: entry (" + std::to_string(worst_i + 1) +
        ", " + std::to_string(worst_j + 1) + ") deviates by " + std::to_string(worst));
  }

  if (g.has_generators()) {
    if (g.generators[0].rows() != s.dim()) {
      throw ValidationError("generator dimension does not match the states");
    }
    for (int i = 0; i < g.size(); ++i) {
      const double dev = (g.generators[i] * s.states.col(zero) - s.states.col(i)).norm();
      if (dev > tol) {
        throw GroupStructureError("generator " + std::to_string(i + 1) +
                                  " does not map the zero-element state to column " +
                                  std::to_string(i + 1) + " (deviation " +
                                  std::to_string(dev) + ")");
      }
    }
  }
  return fn;
}

GroupFunction gu_singular_values(const GroupFunction& s, const GroupSpec& g) {
  if (s.values.size() != g.size()) {
    throw ValidationError("group function length does not match the group order");
  }
  const Vector shat = ft_matrix(g) * s.values;
  double max_real = 0.0;
  for (int i = 0; i < shat.size(); ++i) {
    if (std::abs(shat[i].imag()) > 1e-10) {
      throw GroupStructureError("transformed overlap spectrum is not real (component " +
                                std::to_string(i + 1) + ")");
    }
    max_real = std::max(max_real, shat[i].real());
  }
  const double floor = kSpectrumFloorRel * std::max(max_real, 0.0);
  const double quarter_root = std::pow(static_cast<double>(g.size()), 0.25);
  GroupFunction out;
  out.values.resize(shat.size());
  for (int i = 0; i < shat.size(); ++i) {
    double v = shat[i].real();
    if (v < -1e-10) {
      throw GroupStructureError("transformed overlap spectrum has a negative component (" +
                                std::to_string(v) + "); the Gram matrix is not PSD");
    }
    if (v < floor) v = 0.0;
    out.values[i] = Complex(quarter_root * std::sqrt(v), 0.0);
  }
  return out;
}

Measurement gu_srm(const StateSet& s, const GroupSpec& g, double rank_rel_tol,
                   double tol) {
  if (!(rank_rel_tol > 0.0 && rank_rel_tol < 1.0)) {
    throw PreconditionError("rank tolerance must lie in (0, 1)");
  }
  const GroupFunction overlap = check_gu(s, g, tol);
  const GroupFunction sigma = gu_singular_values(overlap, g);
  double sig_max = 0.0;
  for (int i = 0; i < sigma.values.size(); ++i) {
    sig_max = std::max(sig_max, sigma.values[i].real());
  }
  RealVector inv = RealVector::Zero(g.size());
  int rank = 0;
  for (int i = 0; i < g.size(); ++i) {
    const double v = sigma.values[i].real();
    if (v > rank_rel_tol * sig_max) {
      inv[i] = 1.0 / v;
      ++rank;
    }
  }
  const Matrix f = ft_matrix(g);
  Measurement m;
  m.matrix = s.states * f * inv.asDiagonal() * f.adjoint();
  m.kind = MeasurementKind::gu_srm;
  m.rank_used = rank;
  return m;
}

Measurement binary_srm(const StateSet& s) {
  if (s.size() != 2) {
    throw PreconditionError("binary construction is defined for exactly two states");
  }
  if (!s.normalized) {
    throw PreconditionError("binary construction requires normalized states");
  }
  const Complex overlap = s.states.col(0).dot(s.states.col(1));
  const double a = std::abs(overlap);
  if (1.0 - a <= 1e-15) {
    throw PreconditionError("states coincide up to phase (|overlap| = 1); no measurement separates them");
  }
  const double sigma0 = std::sqrt(1.0 + a);
  const double sigma1 = std::sqrt(1.0 - a);
  const double diag = 0.5 * (1.0 / sigma0 + 1.0 / sigma1);
  const double off = 0.5 * (1.0 / sigma0 - 1.0 / sigma1);
  const Complex phase = a > 0.0 ? overlap / a : Complex(1.0, 0.0);

  Matrix coeff(2, 2);
  coeff << Complex(diag, 0.0), off * phase, off * std::conj(phase), Complex(diag, 0.0);

  Measurement m;
  m.matrix = s.states * coeff;
  m.kind = MeasurementKind::binary_srm;
  m.rank_used = 2;
  if (sigma1 < 1e-6) {
    m.note = "nearly coinciding states: sigma(1) = " + std::to_string(sigma1) +
             ", coefficients are ill-conditioned";
  }
  return m;
}

Measurement cyclic_srm(const StateSet& s, int order, double rank_rel_tol, double tol) {
  if (order != s.size()) {
    throw PreconditionError("cyclic order must equal the number of states");
  }
  const GroupSpec g = order > 1 ? make_group_spec({order}) : make_group_spec({});
  Measurement m = gu_srm(s, g, rank_rel_tol, tol);
  m.kind = MeasurementKind::cyclic_srm;
  return m;
}

double symmetry_check(const Measurement& m, const GroupSpec& g) {
  if (!g.has_generators()) {
    throw PreconditionError("symmetry check needs the group's generator matrices");
  }
  if (m.matrix.cols() != g.size()) {
    throw PreconditionError("measurement column count does not match the group order");
  }
  if (m.matrix.rows() != g.generators[0].rows()) {
    throw PreconditionError("measurement dimension does not match the generators");
  }
  double worst = 0.0;
  for (int j = 0; j < g.size(); ++j) {
    for (int i = 0; i < g.size(); ++i) {
      const int k = g.index_of(g.add(g.order[i], g.order[j]));
      const double dev = (g.generators[j] * m.matrix.col(i) - m.matrix.col(k)).norm();
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

}  // namespace srm
