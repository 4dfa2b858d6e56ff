#pragma once

#include <stdexcept>
#include <string>

namespace ellgas {

/// A point or parameter lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Successive quadrature refinements did not agree to the requested tolerance.
class ToleranceNotMet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sampler density value exceeded the rejection envelope.
class EnvelopeExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The sampler hit its consecutive-rejection limit.
class RejectBudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ellgas
