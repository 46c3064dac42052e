#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kicked_top/classical.hpp"
#include "kicked_top/identities.hpp"
#include "kicked_top/observables.hpp"
#include "kicked_top/recurrence.hpp"

namespace kt::io {

// Thrown by the file writers; distinguishes I/O failures from numerical or
// argument errors so the CLI can map them to the right exit code.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest-exact decimal: 17 significant digits (printf %.17g).
std::string format17(double value);

// CSV payloads. All floating-point columns use format17; optional integers
// render as "none" when absent. Headers are part of the contract.

// "j,class,kappa,period,phase"
std::string table_csv(const std::vector<TableRow>& rows);

// "r,s,j,period,min_entropy"
std::string search_csv(const std::vector<SearchRow>& rows);

// "theta,phi,q", row-major (theta outer, phi inner)
std::string husimi_csv(const HusimiField& field);

// "kick,entropy"; values[k] is the entropy after kick k (kick 0 included)
std::string entropy_csv(const std::vector<double>& values);

// "k,error"; the identity-error series eps(U^k) of a detection run, k >= 1
std::string error_series_csv(const RecurrenceReport& report);

// "traj_id,kick,theta,phi"; kick 0 is the initial point
std::string classical_csv(const std::vector<std::vector<SphereAngles>>& trajectories);

// "theta,phi,avg_entropy", row-major
std::string landscape_csv(const EntropyLandscape& landscape);

// JSON payloads (pinned field sets).
// {"period": int|null, "phase": double|null, "tolerance": ..., "n_max": ...,
//  "error_series": [...]}
std::string recurrence_report_json(const RecurrenceReport& report);

// [{"name": ..., "j": ..., "max_deviation": ..., "tolerance": ..., "pass": ...}, ...]
std::string identity_report_json(const std::vector<IdentityResult>& results);

// Throws std::runtime_error on any stream failure (callers map it to the
// I/O-error exit code).
void write_text_file(const std::string& path, const std::string& content);

// ISO-8601 UTC, e.g. "2026-01-07T12:34:56Z". Only ever written to sidecars.
std::string timestamp_utc_now();

} // namespace kt::io
