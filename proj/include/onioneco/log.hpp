#pragma once

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace onioneco {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Level comes from ONIONECO_LOG (error|warn|info|debug); defaults to warn.
inline LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("ONIONECO_LOG");
        if (env == nullptr) return LogLevel::Warn;
        if (std::strcmp(env, "error") == 0) return LogLevel::Error;
        if (std::strcmp(env, "info") == 0) return LogLevel::Info;
        if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
        return LogLevel::Warn;
    }();
    return level;
}

inline void log_msg(LogLevel level, const char* fmt, ...) {
    if (level > log_level()) return;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::fprintf(stderr, "[%s] ", names[static_cast<int>(level)]);
    va_list args;
    va_start(args, fmt);
    std::vfprintf(stderr, fmt, args);
    va_end(args);
    std::fputc('\n', stderr);
}

#define ONIONECO_LOG_ERROR(...) ::onioneco::log_msg(::onioneco::LogLevel::Error, __VA_ARGS__)
#define ONIONECO_LOG_WARN(...) ::onioneco::log_msg(::onioneco::LogLevel::Warn, __VA_ARGS__)
#define ONIONECO_LOG_INFO(...) ::onioneco::log_msg(::onioneco::LogLevel::Info, __VA_ARGS__)
#define ONIONECO_LOG_DEBUG(...) ::onioneco::log_msg(::onioneco::LogLevel::Debug, __VA_ARGS__)

}  // namespace onioneco
