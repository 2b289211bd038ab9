#pragma once

#include <stdexcept>
#include <string>

namespace zetafib {

// Argument outside an operation's documented domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation at (or numerically indistinguishable from) a pole.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// A series failed to meet its stopping rule within the term budget.
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zetafib
