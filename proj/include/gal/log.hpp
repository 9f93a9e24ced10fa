#pragma once

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

namespace gal {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

/// Verbosity from the GAL_LOG environment variable: "info" or "debug";
/// anything else (or unset) is quiet. Parsed once.
inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* raw = std::getenv("GAL_LOG");
        if (raw == nullptr) return LogLevel::Quiet;
        const std::string_view value(raw);
        if (value == "debug") return LogLevel::Debug;
        if (value == "info") return LogLevel::Info;
        return LogLevel::Quiet;
    }();
    return level;
}

inline void log_info(const std::string& message) {
    if (log_level() >= LogLevel::Info) std::cerr << "[gal] " << message << "\n";
}

inline void log_debug(const std::string& message) {
    if (log_level() >= LogLevel::Debug) std::cerr << "[gal:debug] " << message << "\n";
}

}  // namespace gal
