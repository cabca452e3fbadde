#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include <srmkit/gu.hpp>
#include <srmkit/optimality.hpp>

namespace srm {

// State-set document:
//   {"dim": n, "states": [[[re, im], ...n pairs], ...m arrays],
//    "priors": [p_1, ..., p_m]?, "normalized": bool?}
// Priors default to uniform; `normalized` defaults to true.
StateSet load_state_set(const nlohmann::json& doc, double norm_tol = kNormTol);
nlohmann::json state_set_to_json(const StateSet& s);

// Measurement document mirrors the state-set schema plus
// {"kind": string, "rank_used": int} and optional {"weights", "note"}.
Measurement load_measurement(const nlohmann::json& doc);
nlohmann::json measurement_to_json(const Measurement& m);

// Group document:
//   {"factors": [m_1, ..., m_p], "order": [[g_1, ..., g_p], ...]?,
//    "generators": [matrix, ...]?}
// Matrices are row-major arrays of rows of [re, im] pairs. `order`
// defaults to the natural enumeration. An empty factor list is the
// trivial group.
GroupSpec load_group_spec(const nlohmann::json& doc, double tol = kGuTol);

nlohmann::json report_to_json(const OptimalityReport& report);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& doc);

// 12-significant-digit decimal formatting (round-half-even via the
// platform's correctly rounded conversion); used for all emitted numbers
// so outputs are byte-stable.
std::string format_sig12(double value);
double round_sig12(double value);

}  // namespace srm
