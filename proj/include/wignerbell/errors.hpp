#pragma once

#include <stdexcept>
#include <string>

namespace wignerbell {

// Argument outside the domain of an operation (bad pair-type index,
// unnormalized distribution, mismatched multinomial total, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A probability was requested from a population with total() == 0.
class EmptyPopulationError : public DomainError {
public:
    EmptyPopulationError() : DomainError("population is empty: total count is 0") {}
};

// ln N is taken for a macrostate with N == 0.
class UndefinedEntropyError : public DomainError {
public:
    explicit UndefinedEntropyError(int alpha)
        : DomainError("entropy undefined for pair type " + std::to_string(alpha) +
                      ": population count is 0"),
          alpha_(alpha) {}

    int alpha() const noexcept { return alpha_; }

private:
    int alpha_;
};

// Invalid experiment or CLI configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace wignerbell
