#include "dirac_nodal/harness/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>

namespace dirac_nodal::harness {

namespace {

std::atomic<int> g_level{-1};
std::mutex g_mutex;

const char* name(LogLevel level) {
    switch (level) {
        case LogLevel::error:
            return "error";
        case LogLevel::info:
            return "info";
        case LogLevel::debug:
            return "debug";
    }
    return "error";
}

}  // namespace

LogLevel log_level_from_env() {
    const char* env = std::getenv("DIRAC_NODAL_LOG");
    if (env == nullptr) return LogLevel::error;
    const std::string v(env);
    if (v == "debug") return LogLevel::debug;
    if (v == "info") return LogLevel::info;
    return LogLevel::error;
}

void set_log_level(LogLevel level) { g_level.store(static_cast<int>(level)); }

LogLevel log_level() {
    int v = g_level.load();
    if (v < 0) {
        v = static_cast<int>(log_level_from_env());
        g_level.store(v);
    }
    return static_cast<LogLevel>(v);
}

void log(LogLevel level, const std::string& message) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    const std::lock_guard<std::mutex> lock(g_mutex);
    std::cerr << '[' << name(level) << "] " << message << '\n';
}

}  // namespace dirac_nodal::harness
