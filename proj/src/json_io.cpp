#include <srmkit/json_io.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

namespace srm {

using nlohmann::json;

std::string format_sig12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

double round_sig12(double value) {
  return std::strtod(format_sig12(value).c_str(), nullptr);
}

namespace {

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError(where + ": complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(const Complex& z) {
  return json::array({round_sig12(z.real()), round_sig12(z.imag())});
}

// Columns of an n x m matrix as m arrays of n pairs.
Matrix columns_from_json(const json& j, int dim, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError(where + " must be a non-empty array");
  }
  const int m = static_cast<int>(j.size());
  Matrix out(dim, m);
  for (int g = 0; g < m; ++g) {
    const json& column = j[g];
    if (!column.is_array() || static_cast<int>(column.size()) != dim) {
      throw ValidationError(where + ": column " + std::to_string(g + 1) + " must have " +
                            std::to_string(dim) + " entries");
    }
    for (int i = 0; i < dim; ++i) {
      out(i, g) = complex_from_json(column[i], where);
    }
  }
  if (!out.allFinite()) {
    throw ValidationError(where + " contains non-finite entries");
  }
  return out;
}

json columns_to_json(const Matrix& m) {
  json cols = json::array();
  for (int g = 0; g < m.cols(); ++g) {
    json col = json::array();
    for (int i = 0; i < m.rows(); ++i) col.push_back(complex_to_json(m(i, g)));
    cols.push_back(std::move(col));
  }
  return cols;
}

// Row-major square matrix (generator layout).
Matrix rows_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError(where + " must be a non-empty array of rows");
  }
  const int n = static_cast<int>(j.size());
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) {
      throw ValidationError(where + " must be square");
    }
    for (int k = 0; k < n; ++k) out(i, k) = complex_from_json(j[i][k], where);
  }
  return out;
}

int int_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw ValidationError(std::string("missing or non-integer \"") + key + "\" field");
  }
  return doc[key].get<int>();
}

}  // namespace

StateSet load_state_set(const json& doc, double norm_tol) {
  if (!doc.is_object()) throw ValidationError("state-set document must be a JSON object");
  const int dim = int_field(doc, "dim");
  if (dim < 1) throw ValidationError("\"dim\" must be at least 1");
  if (!doc.contains("states")) throw ValidationError("missing \"states\" field");
  Matrix states = columns_from_json(doc["states"], dim, "states");
  const int m = static_cast<int>(states.cols());

  RealVector priors;
  if (doc.contains("priors")) {
    const json& p = doc["priors"];
    if (!p.is_array() || static_cast<int>(p.size()) != m) {
      throw ValidationError("\"priors\" must list one probability per state");
    }
    priors.resize(m);
    for (int i = 0; i < m; ++i) {
      if (!p[i].is_number()) throw ValidationError("priors must be numbers");
      priors[i] = p[i].get<double>();
    }
  } else {
    priors = RealVector::Constant(m, 1.0 / m);
  }

  bool normalized = true;
  if (doc.contains("normalized")) {
    if (!doc["normalized"].is_boolean()) {
      throw ValidationError("\"normalized\" must be a boolean");
    }
    normalized = doc["normalized"].get<bool>();
  }
  return make_state_set(std::move(states), std::move(priors), normalized, norm_tol);
}

json state_set_to_json(const StateSet& s) {
  json doc;
  doc["dim"] = s.dim();
  doc["states"] = columns_to_json(s.states);
  json priors = json::array();
  for (int i = 0; i < s.size(); ++i) priors.push_back(round_sig12(s.priors[i]));
  doc["priors"] = std::move(priors);
  doc["normalized"] = s.normalized;
  return doc;
}

Measurement load_measurement(const json& doc) {
  if (!doc.is_object()) throw ValidationError("measurement document must be a JSON object");
  const int dim = int_field(doc, "dim");
  if (dim < 1) throw ValidationError("\"dim\" must be at least 1");
  if (!doc.contains("states")) throw ValidationError("missing \"states\" field");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw ValidationError("missing or non-string \"kind\" field");
  }
  Measurement m;
  m.matrix = columns_from_json(doc["states"], dim, "states");
  m.kind = measurement_kind_from_string(doc["kind"].get<std::string>());
  m.rank_used = int_field(doc, "rank_used");
  if (m.rank_used < 0 || m.rank_used > m.matrix.cols()) {
    throw ValidationError("\"rank_used\" out of range");
  }
  if (doc.contains("weights")) {
    for (const json& w : doc["weights"]) {
      if (!w.is_number()) throw ValidationError("weights must be numbers");
      m.weights.push_back(w.get<double>());
    }
  }
  if (doc.contains("note") && doc["note"].is_string()) {
    m.note = doc["note"].get<std::string>();
  }
  return m;
}

json measurement_to_json(const Measurement& m) {
  json doc;
  doc["dim"] = static_cast<int>(m.matrix.rows());
  doc["states"] = columns_to_json(m.matrix);
  doc["normalized"] = false;
  doc["kind"] = to_string(m.kind);
  doc["rank_used"] = m.rank_used;
  if (!m.weights.empty()) {
    json w = json::array();
    for (double v : m.weights) w.push_back(round_sig12(v));
    doc["weights"] = std::move(w);
  }
  if (!m.note.empty()) doc["note"] = m.note;
  return doc;
}

GroupSpec load_group_spec(const json& doc, double tol) {
  if (!doc.is_object()) throw ValidationError("group document must be a JSON object");
  if (!doc.contains("factors") || !doc["factors"].is_array()) {
    throw ValidationError("missing \"factors\" array");
  }
  std::vector<int> factors;
  for (const json& f : doc["factors"]) {
    if (!f.is_number_integer()) throw ValidationError("factors must be integers");
    factors.push_back(f.get<int>());
  }

  if (!doc.contains("order")) {
    if (doc.contains("generators")) {
      throw ValidationError("\"generators\" requires an explicit \"order\"");
    }
    return make_group_spec(std::move(factors));
  }
  std::vector<std::vector<int>> order;
  if (!doc["order"].is_array()) throw ValidationError("\"order\" must be an array");
  for (const json& e : doc["order"]) {
    if (!e.is_array()) throw ValidationError("order entries must be tuples");
    std::vector<int> tuple;
    for (const json& v : e) {
      if (!v.is_number_integer()) throw ValidationError("order tuples must hold integers");
      tuple.push_back(v.get<int>());
    }
    order.push_back(std::move(tuple));
  }

  std::vector<Matrix> generators;
  if (doc.contains("generators")) {
    if (!doc["generators"].is_array()) {
      throw ValidationError("\"generators\" must be an array of matrices");
    }
    int index = 0;
    for (const json& g : doc["generators"]) {
      generators.push_back(rows_from_json(g, "generator " + std::to_string(++index)));
    }
  }
  return make_group_spec(std::move(factors), std::move(order), std::move(generators), tol);
}

json report_to_json(const OptimalityReport& report) {
  json doc;
  doc["holevo_eq_residual"] = round_sig12(report.holevo_eq_residual);
  doc["holevo_psd_margin"] = round_sig12(report.holevo_psd_margin);
  doc["gamma_hermiticity"] = round_sig12(report.gamma_hermiticity);
  doc["p_error"] = round_sig12(report.p_error);
  doc["sasaki_spread"] = round_sig12(report.sasaki_spread);
  doc["verdict"] = to_string(report.verdict);
  return doc;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace srm
