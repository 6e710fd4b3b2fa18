#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace cpd::cli {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Verbosity comes from CPD_LOG (error|warn|info|debug or 0..3), default info.
inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("CPD_LOG");
    if (!env) return LogLevel::Info;
    const std::string v(env);
    if (v == "error" || v == "0") return LogLevel::Error;
    if (v == "warn" || v == "1") return LogLevel::Warn;
    if (v == "info" || v == "2") return LogLevel::Info;
    if (v == "debug" || v == "3") return LogLevel::Debug;
    return LogLevel::Info;
  }();
  return level;
}

// Human-readable logs go to stderr; stdout carries structured records only.
inline void log_line(LogLevel lvl, const std::string& msg) {
  if (lvl > log_level()) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::fprintf(stderr, "cpd [%s] %s\n", names[static_cast<int>(lvl)],
               msg.c_str());
}

}  // namespace cpd::cli
