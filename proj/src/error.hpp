#pragma once

#include <stdexcept>
#include <string>

namespace ordwalk {

// Error codes shared with the C API (see include/ordwalk/ordwalk.h).
enum class ErrorCode {
    Ok = 0,
    RepeatedValue = 1,
    LengthMismatch = 2,
    SizeTooLarge = 3,
    ParseError = 4,
    InvalidArgument = 5,
    InvalidFlip = 6,
    NotABlock = 7,
    NoValidDecomposition = 8,
    SingularMatrix = 9,
    Internal = 10,
};

class OwError : public std::runtime_error {
public:
    OwError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw OwError(code, what);
}

} // namespace ordwalk
