#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lifecycle {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document (bad JSON, missing fields, unknown labels).
struct ParseError : Error {
    using Error::Error;
};

enum class IssueKind {
    RowSumError,
    NegativeProbability,
    ShapeMismatch,
    EmptyActionSet,
    NonFiniteNumber,
};

const char* to_string(IssueKind kind);

// One invariant violation, located by a human-readable coordinate such as
// "state 1, action 3" or "stage 2, state IV, control 1".
struct Issue {
    IssueKind kind;
    std::string where;
    std::string detail;

    std::string message() const;
};

// Carries every violation found, not just the first.
struct ValidationError : Error {
    explicit ValidationError(std::vector<Issue> found);
    std::vector<Issue> issues;
};

struct SingularMatrix : Error {
    using Error::Error;
};

// Value determination hit a singular system: the policy's chain appears to
// have more than one recurrent class, so a single gain does not exist.
struct MultichainSuspected : Error {
    using Error::Error;
};

struct NonUniqueStationary : Error {
    using Error::Error;
};

struct TooManyPolicies : Error {
    using Error::Error;
};

struct MaxIterationsExceeded : Error {
    using Error::Error;
};

struct NonPositiveTime : Error {
    using Error::Error;
};

}  // namespace lifecycle
