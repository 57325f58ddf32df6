#pragma once

// One command, one JSON payload in, one JSON report out.

#include <string>

#include "fpart/json_io.hpp"

namespace fpart {

struct JobSpec {
    std::string command;
    Json payload = Json::object();  ///< group, partition, code, poset, n, factors, dual_side, suite, seed
    Limits limits;
};

/// Known command names in the order they are documented.
const std::vector<std::string>& job_commands();

/// Builds a JobSpec from {"command": ..., "max_group": ..., "max_expansion": ..., other payload keys}.
JobSpec job_from_json(const Json& j);

/// Throws invalid_input, guard_exceeded or verification_failure. The report's "ok" field
/// is false when an identity that should hold was found violated.
Json run(const JobSpec& job);

/// Aligned plain-text rendering of a report.
std::string render_table(const Json& report);

/// Process exit code for a finished report: 0, or 3 when "ok" is false.
int exit_code(const Json& report);

}  // namespace fpart
