#ifndef PRODPOW_ERRORS_HPP
#define PRODPOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prodpow {

enum class ErrorKind {
    InvalidArgument,   // malformed input, shape mismatch, unknown names
    Precondition,      // the input does not satisfy the operation's equation
    GuardExceeded,     // enumeration bound above the configured guard
    UnsupportedScope,  // system outside the supported sharing pattern
    Defect,            // an internal consistency check failed
    Parse,             // bad fixture / JSON text
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Returned (not thrown) when a recovery procedure cannot reach a solution
// with the parameter shape it targets.
struct CoverageGap {
    std::string reason;
};

} // namespace prodpow

#endif
