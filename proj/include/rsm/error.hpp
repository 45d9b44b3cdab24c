#pragma once

#include <stdexcept>
#include <string>

namespace rsm {

enum class ErrorKind {
    InvalidInput,     // bad agent index, asymmetric matching, empty set argument
    MalformedDocument,
    UnknownAgent,
    BadWeight,        // weight is not a "n/d" fraction in (0,1]
    WeightSum,        // weights do not sum to exactly 1
    Precondition,     // e.g. an unstable matching where a stable one is required
    Capacity,         // enumeration guard exceeded
    AxiomFailure,     // a preference is not substitutable or violates LAD
};

const char* error_category(ErrorKind kind);

// CLI exit code for an error category: 2 validation, 3 capacity, 4 axiom.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace rsm
