#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qspin {

enum class ErrorKind {
    InvalidArgument,
    NotHermitian,
    NoConvergence,
    NegativeEigenvalue,
    ModeUnsupported,
    DegenerateGround,
    NotNormalized,
    InvalidState,
    NoTransition,
    BracketFailure,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
        case ErrorKind::ModeUnsupported: return "ModeUnsupported";
        case ErrorKind::DegenerateGround: return "DegenerateGround";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::InvalidState: return "InvalidState";
        case ErrorKind::NoTransition: return "NoTransition";
        case ErrorKind::BracketFailure: return "BracketFailure";
    }
    return "Unknown";
}

/// Numerical failures (as opposed to domain or argument errors).
constexpr bool is_numerical(ErrorKind kind) {
    return kind == ErrorKind::NotHermitian || kind == ErrorKind::NoConvergence ||
           kind == ErrorKind::NegativeEigenvalue;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qspin
