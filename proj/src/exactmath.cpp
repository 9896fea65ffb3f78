#include "polyfc/exactmath.hpp"

#include <algorithm>
#include <random>

namespace polyfc {

namespace {

Int require_nonneg(const Int& n, const char* who) {
    if (n < 0)
        throw PreconditionViolated(std::string(who) + ": negative input");
    return n;
}

} // namespace

Int Factorization::reassemble() const {
    Int n = 1;
    for (const auto& [p, e] : pairs)
        for (unsigned i = 0; i < e; ++i)
            n *= p;
    return n;
}

Int binom(const Int& n, const Int& k) {
    require_nonneg(n, "binom");
    require_nonneg(k, "binom");
    if (k > n)
        return 0;
    Int kk = std::min(k, Int(n - k));
    Int result = 1;
    for (Int i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i; // exact: result is binom(n-kk+i, i)
    }
    return result;
}

Int isqrt(const Int& n) {
    require_nonneg(n, "isqrt");
    return boost::multiprecision::sqrt(n);
}

std::optional<Int> exact_cube_root(const Int& n) {
    if (n < 1)
        throw PreconditionViolated("exact_cube_root: n >= 1 required");
    // Binary search on the bit length estimate.
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    Int lo = 0, hi = Int(1) << (bits / 3 + 2);
    while (lo < hi) {
        Int mid = (lo + hi + 1) >> 1;
        if (mid * mid * mid <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (lo * lo * lo == n)
        return lo;
    return std::nullopt;
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned r) {
    // Returns true if a proves n composite.
    Int x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1)
            return false;
    }
    return true;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    if (n < Int("18446744073709551616")) {
        // Deterministic witness set for all 64-bit inputs.
        for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
            if (miller_rabin_witness(n, a, d, r))
                return false;
        return true;
    }
    // 64 rounds with fixed pseudorandom bases: error < 4^-64 = 2^-128.
    std::mt19937_64 rng(0x5deece66dull);
    for (int round = 0; round < 64; ++round) {
        Int a = 2 + Int(rng()) % (n - 3);
        if (miller_rabin_witness(n, a, d, r))
            return false;
    }
    return true;
}

namespace {

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
// of odd composite n; charges every squaring step against the shared budget.
Int pollard_rho(const Int& n, std::uint64_t& budget, std::mt19937_64& rng) {
    using boost::multiprecision::gcd;
    while (true) {
        Int c = 1 + Int(rng()) % (n - 1);
        Int y = Int(rng()) % n;
        Int g = 1, q = 1, x = 0, ys = 0;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = (y * y + c) % n;
            for (std::uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                std::uint64_t steps = std::min(m, r - k);
                if (budget < steps)
                    throw FactorizationTimeout("factorize: rho budget exhausted");
                budget -= steps;
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x > y ? x - y : y - x;
                    q = (q * diff) % n;
                }
                g = gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            // Backtrack one step at a time from the last checkpoint.
            g = 1;
            while (g == 1) {
                if (budget == 0)
                    throw FactorizationTimeout("factorize: rho budget exhausted");
                --budget;
                ys = (ys * ys + c) % n;
                Int diff = x > ys ? x - ys : ys - x;
                g = gcd(diff, n);
            }
        }
        if (g != n)
            return g;
        // Cycle collapsed to n itself; retry with a fresh polynomial.
    }
}

void factor_recurse(Int n, std::vector<Int>& primes, std::uint64_t& budget,
                    std::mt19937_64& rng) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    Int f = pollard_rho(n, budget, rng);
    factor_recurse(f, primes, budget, rng);
    factor_recurse(n / f, primes, budget, rng);
}

} // namespace

Factorization factorize(const Int& n, const FactorConfig& cfg) {
    if (n < 1)
        throw PreconditionViolated("factorize: n >= 1 required");
    Int m = n;
    std::vector<Int> primes;
    // Trial division below 10^6 strips everything at desk scale up to ~10^12.
    for (std::uint32_t p = 2; p < 1'000'000 && Int(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        while (m % p == 0) {
            primes.emplace_back(p);
            m /= p;
        }
    }
    if (m > 1) {
        if (m < Int(1'000'000) * 1'000'000) {
            // Below 10^12 the cofactor is prime after trial division.
            primes.push_back(m);
        } else {
            std::uint64_t budget = cfg.rho_iteration_budget;
            std::mt19937_64 rng(cfg.seed);
            factor_recurse(m, primes, budget, rng);
        }
    }
    std::sort(primes.begin(), primes.end());
    Factorization out;
    for (const Int& p : primes) {
        if (!out.pairs.empty() && out.pairs.back().first == p)
            ++out.pairs.back().second;
        else
            out.pairs.emplace_back(p, 1);
    }
    return out;
}

std::vector<Int> divisors(const Int& d, const FactorConfig& cfg) {
    Factorization fac = factorize(d, cfg);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : fac.pairs) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Int divisor_count_in_range(const Int& d, const Int& lo, const Int& hi,
                           const FactorConfig& cfg) {
    Int count = 0;
    for (const Int& x : divisors(d, cfg))
        if (lo <= x && x <= hi)
            ++count;
    return count;
}

bool is_semiprime(const Int& n, const FactorConfig& cfg) {
    if (n < 2)
        throw PreconditionViolated("is_semiprime: n >= 2 required");
    Factorization fac = factorize(n, cfg);
    unsigned omega = 0;
    for (const auto& [p, e] : fac.pairs)
        omega += e;
    return omega == 2;
}

bool is_prime_cube(const Int& n) {
    if (n < 2)
        throw PreconditionViolated("is_prime_cube: n >= 2 required");
    auto r = exact_cube_root(n);
    return r && is_prime(*r);
}

std::optional<Int> divisor_in_interval(const Int& d, const Int& L, const Int& U,
                                       const FactorConfig& cfg) {
    if (L > U)
        throw PreconditionViolated("divisor_in_interval: L <= U required");
    for (const Int& x : divisors(d, cfg))
        if (x >= L && x <= U)
            return x;
    return std::nullopt;
}

} // namespace polyfc
