#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clawfree {

/// Base for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based; 0 means end of input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A caller broke an operation's precondition (not a tree, wrong root, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// An exponential computation was refused because the input exceeds its cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
        : Error(what + " (size " + std::to_string(size) + " exceeds cap " + std::to_string(cap) + ")"),
          size_(size), cap_(cap) {}
    std::size_t size() const noexcept { return size_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

/// Argument outside the domain of a real function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The pair independence ratio is undefined because floor(delta^2 / 4) is zero.
class DegenerateDenominator : public Error {
public:
    explicit DegenerateDenominator(int delta)
        : Error("pair independence ratio undefined: max degree " + std::to_string(delta) + " <= 1"),
          delta_(delta) {}
    int delta() const noexcept { return delta_; }

private:
    int delta_;
};

/// A floating-point quotient was refused because its denominator is numerically zero.
class ConditioningError : public Error {
public:
    ConditioningError(const std::string& what, double magnitude)
        : Error(what + " (|value| = " + std::to_string(magnitude) + ")"), magnitude_(magnitude) {}
    double magnitude() const noexcept { return magnitude_; }

private:
    double magnitude_;
};

}  // namespace clawfree
