#include "privmon/log.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>

namespace privmon {

static LogLevel parse_level() {
  const char *env = std::getenv("PRIVMON_LOG");
  if (!env) return LogLevel::Warn;
  if (!std::strcmp(env, "off")) return LogLevel::Off;
  if (!std::strcmp(env, "error")) return LogLevel::Error;
  if (!std::strcmp(env, "warn")) return LogLevel::Warn;
  if (!std::strcmp(env, "info")) return LogLevel::Info;
  if (!std::strcmp(env, "debug")) return LogLevel::Debug;
  return LogLevel::Warn;
}

LogLevel log_level() {
  static LogLevel level = parse_level();
  return level;
}

void log_line(LogLevel level, const std::string &msg) {
  if (level > log_level()) return;
  static const char *names[] = {"off", "error", "warn", "info", "debug"};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::fprintf(stderr, "[privmon %s] %s\n", names[static_cast<int>(level)],
               msg.c_str());
}

} // namespace privmon
