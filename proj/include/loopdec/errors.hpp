#pragma once
#include <stdexcept>
#include <string>
#include <utility>

namespace loopdec {

// Domain-level failure with a stable machine-readable code.  The CLI turns
// these into {"error": code, "message": ...} on stderr; library callers can
// switch on the code.
struct DomainError : std::runtime_error {
    std::string code;
    DomainError(std::string code_, const std::string& msg)
        : std::runtime_error(msg), code(std::move(code_)) {}
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
    throw DomainError(std::move(code), msg);
}

} // namespace loopdec
