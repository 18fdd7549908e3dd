#include "hanabi_tom/logging.h"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace hanabi_tom {

LogLevel CurrentLogLevel() {
  static LogLevel level = [] {
    const char* env = std::getenv("HANABI_TOM_LOG");
    if (env == nullptr) return LogLevel::kError;
    std::string s(env);
    if (s == "debug") return LogLevel::kDebug;
    if (s == "info") return LogLevel::kInfo;
    return LogLevel::kError;
  }();
  return level;
}

void Log(LogLevel level, const std::string& message) {
  if (level > CurrentLogLevel()) return;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const char* tag = level == LogLevel::kError  ? "error"
                    : level == LogLevel::kInfo ? "info"
                                               : "debug";
  std::cerr << "[hanabi-tom " << tag << "] " << message << "\n";
}

}  // namespace hanabi_tom
