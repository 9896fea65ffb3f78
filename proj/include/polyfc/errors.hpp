#ifndef POLYFC_ERRORS_HPP
#define POLYFC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyfc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Factorization effort budget exhausted; the input is beyond desk scale.
struct FactorizationTimeout : Error {
    using Error::Error;
};

// Enumeration node cap reached; the query is outside the b = O(d) regime.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Brute-force oracle asked for a dimension above its ceiling.
struct OracleScaleExceeded : Error {
    using Error::Error;
};

// A closed-form value that must be an integer is not, for these inputs.
struct NonIntegral : Error {
    using Error::Error;
};

// Query parameters outside the window where the facet minimum is known.
struct OutOfRange : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

// The decision procedure only covers the characterized instance family.
struct UnsupportedInstance : Error {
    using Error::Error;
};

} // namespace polyfc

#endif
