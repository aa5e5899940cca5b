#pragma once

/**
 * @file jobs.hpp
 * @brief Request dispatcher shared by the command-line front end and the
 *        batch mode. Requests and results are JSON objects with a stable
 *        field order, so identical inputs produce byte-identical output.
 */

#include <json.hpp>

#include <string>

namespace circle7::cli {

using Json = nlohmann::ordered_json;

// Exit codes: 0 ok, 2 input error, 3 internal audit failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

struct JobOutcome {
    Json result;
    int exit_code = 0;
};

/// Runs one request {"command": ..., "params": {...}} and returns the result
/// object {"request", "status", "payload"/"error", "provenance"}.
JobOutcome run_job(const Json& request, int oracle_bound);

/// CIRCLE7_ORACLE_BOUND, or the built-in default 8.
int default_oracle_bound();

}  // namespace circle7::cli
