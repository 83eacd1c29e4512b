#pragma once

#include <stdexcept>
#include <string>

namespace csineq {

enum class Errc {
    NonFinite,
    DimensionMismatch,
    NotHermitian,
    NoConvergence,
    NotPSD,
    SingularForNegativePower,
    DomainViolation,
    InvalidSpec,
    BudgetExceeded,
    InvalidParams,
    KwongPreconditionFailed,
    ConfigError,
};

const char* to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace csineq
