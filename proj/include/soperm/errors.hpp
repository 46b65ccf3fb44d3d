#pragma once

#include <stdexcept>
#include <string>

namespace soperm {

// Domain errors. The CLI maps these to exit code 3; usage errors are 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotABijection : DomainError {
    using DomainError::DomainError;
};

struct MalformedToken : DomainError {
    using DomainError::DomainError;
};

struct DuplicateEntry : DomainError {
    using DomainError::DomainError;
};

struct EmptyPermutation : DomainError {
    using DomainError::DomainError;
};

struct NonUnitConstantTerm : DomainError {
    using DomainError::DomainError;
};

struct NegativeExponent : DomainError {
    using DomainError::DomainError;
};

struct DegenerateBasis : DomainError {
    using DomainError::DomainError;
};

struct BadRange : DomainError {
    using DomainError::DomainError;
};

struct PatternLargerThanHost : DomainError {
    using DomainError::DomainError;
};

struct IneligiblePattern : DomainError {
    using DomainError::DomainError;
};

struct SizeCapExceeded : DomainError {
    using DomainError::DomainError;
};

}  // namespace soperm
