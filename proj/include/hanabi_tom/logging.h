#pragma once

#include <string>

namespace hanabi_tom {

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

// Parsed once from the HANABI_TOM_LOG environment variable
// ("error" | "info" | "debug"); defaults to error.
LogLevel CurrentLogLevel();

void Log(LogLevel level, const std::string& message);

}  // namespace hanabi_tom
