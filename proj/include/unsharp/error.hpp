#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace unsharp {

enum class ErrorCode {
    NotHermitian,
    NotPositive,
    TraceNotOne,
    NotNormalized,
    NotOrthonormal,
    EigenvalueAboveOne,
    CompletenessViolated,
    DimensionMismatch,
    WrongDimension,
    DimensionTooLarge,
    OutOfRange,
    DegenerateDraw,
    ParseError,
    ConfigError,
    UnknownSuite,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type. `index` names the
// offending effect/vector when there is one; `magnitude` is the measured
// violation (residual, eigenvalue, ...) when one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what,
          std::optional<std::size_t> index = std::nullopt,
          std::optional<double> magnitude = std::nullopt)
        : std::runtime_error(what), code_(code), index_(index), magnitude_(magnitude) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> index() const noexcept { return index_; }
    std::optional<double> magnitude() const noexcept { return magnitude_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
    std::optional<double> magnitude_;
};

}  // namespace unsharp
