#ifndef POLYFC_EXACTMATH_HPP
#define POLYFC_EXACTMATH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyfc/errors.hpp"

namespace polyfc {

// All domain values are exact integers. Signed type throughout; operations
// that require non-negative inputs check and throw PreconditionViolated.
using Int = boost::multiprecision::cpp_int;

// Complete prime factorization, primes strictly ascending. Empty for n = 1.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> pairs;

    Int reassemble() const;
};

// Knobs for the randomized factorization stage. `rho_iteration_budget` caps
// the total number of Pollard-rho steps spent on one factorize() call;
// exhausting it throws FactorizationTimeout.
struct FactorConfig {
    std::uint64_t rho_iteration_budget = 50'000'000;
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

Int binom(const Int& n, const Int& k);

// Floor of the square root; r satisfies r^2 <= n < (r+1)^2.
Int isqrt(const Int& n);

// Exact cube root if n is a perfect cube, empty otherwise. Requires n >= 1.
std::optional<Int> exact_cube_root(const Int& n);

// Deterministic for n < 2^64 (fixed witness set); above that, 64
// Miller-Rabin rounds with fixed pseudorandom bases, error probability
// below 2^-128.
bool is_prime(const Int& n);

Factorization factorize(const Int& n, const FactorConfig& cfg = {});

// |{x : x | d, lo <= x <= hi}|, via divisor enumeration from the
// factorization.
Int divisor_count_in_range(const Int& d, const Int& lo, const Int& hi,
                           const FactorConfig& cfg = {});

// All divisors of d, ascending.
std::vector<Int> divisors(const Int& d, const FactorConfig& cfg = {});

// n = p*q with p, q prime (p = q allowed).
bool is_semiprime(const Int& n, const FactorConfig& cfg = {});

// n = p^3 with p prime. Runs without factorization: cube root + primality.
bool is_prime_cube(const Int& n);

// Smallest divisor x of d with L <= x <= U, empty if none. Requires L <= U.
std::optional<Int> divisor_in_interval(const Int& d, const Int& L, const Int& U,
                                       const FactorConfig& cfg = {});

} // namespace polyfc

#endif
