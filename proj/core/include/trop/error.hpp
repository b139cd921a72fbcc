#pragma once

#include <stdexcept>
#include <string>

namespace trop {

// Error with a stable machine-readable code ("ZeroDirection", "DimMismatch", ...)
// plus a human message. Tests match on code().
class TropError : public std::runtime_error {
public:
    TropError(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw TropError(code, msg);
}

inline void require(bool cond, const std::string& code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace trop
