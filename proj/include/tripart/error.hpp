#ifndef TRIPART_ERROR_HPP
#define TRIPART_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tripart {

enum class ErrorCode {
    Parse,
    NonMonotonic,
    DimMismatch,
    DdZeroViolation,
    MissingFace,
    DuplicateCell,
    IndexOutOfRange,
    SizeMismatch,
    OrderingMismatch,
    CapExceeded,
    InconsistentInputs,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every fallible operation in the library. Parser errors
/// carry the 1-based input line; zero means "no line context".
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::size_t line = 0);

    ErrorCode code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::size_t line_;
};

} // namespace tripart

#endif
