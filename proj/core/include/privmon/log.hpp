#pragma once

#include <cstdio>
#include <string>

namespace privmon {

// Log level comes from the PRIVMON_LOG environment variable:
// off | error | warn | info | debug. Default is warn.
enum class LogLevel { Off = 0, Error = 1, Warn = 2, Info = 3, Debug = 4 };

LogLevel log_level();

void log_line(LogLevel level, const std::string &msg);

inline void log_error(const std::string &msg) { log_line(LogLevel::Error, msg); }
inline void log_warn(const std::string &msg) { log_line(LogLevel::Warn, msg); }
inline void log_info(const std::string &msg) { log_line(LogLevel::Info, msg); }
inline void log_debug(const std::string &msg) { log_line(LogLevel::Debug, msg); }

} // namespace privmon
