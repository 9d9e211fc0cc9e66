#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

// Exit codes used by the command-line front end; each exception kind maps to one.
enum class ExitCode : int {
    ok = 0,
    parse = 2,
    capacity = 3,
    tolerance = 4,
    axiom = 5,
};

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
    [[nodiscard]] virtual ExitCode code() const noexcept { return ExitCode::parse; }
};

// Malformed input: wrong weight length, unknown family, weight outside P_l, ...
class DomainError : public Error {
  public:
    using Error::Error;
};

class CapacityError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] ExitCode code() const noexcept override { return ExitCode::capacity; }
};

// Exceptional types need an explicit opt-in before fusion data is produced.
class UnverifiedTypeError : public Error {
  public:
    using Error::Error;
};

// Numeric path disagrees with itself or with the exact path beyond tolerance.
class ToleranceError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] ExitCode code() const noexcept override { return ExitCode::tolerance; }
};

// Violated algebraic invariant (negative structure constant, non-associativity, ...).
class AxiomError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] ExitCode code() const noexcept override { return ExitCode::axiom; }
};

// Internal convention failure; should never fire for supported input.
class InternalError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] ExitCode code() const noexcept override { return ExitCode::tolerance; }
};

} // namespace verlinde
