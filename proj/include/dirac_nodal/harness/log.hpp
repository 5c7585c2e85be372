#pragma once

#include <string>

namespace dirac_nodal::harness {

enum class LogLevel { error = 0, info = 1, debug = 2 };

/// Level from DIRAC_NODAL_LOG (error, info or debug); error when unset or unknown.
LogLevel log_level_from_env();
void set_log_level(LogLevel level);
LogLevel log_level();

/// Writes "[level] message" to stderr if the level is enabled. Thread-safe.
void log(LogLevel level, const std::string& message);

}  // namespace dirac_nodal::harness
