#include "polyfc/polyfamilies.hpp"

#include <algorithm>

namespace polyfc {

namespace {

constexpr int kMaxMaterializedDim = 1 << 22;

int as_small_dim(const Int& d, const char* who) {
    if (d < 0 || d > kMaxMaterializedDim)
        throw PreconditionViolated(std::string(who) +
                                   ": dimension too large to materialize");
    return static_cast<int>(d);
}

} // namespace

FVector simplex_fvector(int n) {
    if (n < 0)
        throw PreconditionViolated("simplex_fvector: n >= 0 required");
    FVector f{n, {}};
    f.entries.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        f.entries.push_back(binom(n + 1, i));
    return f;
}

FVector product_fvector(const FVector& fp, const FVector& fq) {
    // Extended face counts: e[i] = #i-faces, with the polytope itself
    // included at index d. Nonempty faces of P x Q are pairwise products.
    auto extended = [](const FVector& f) {
        std::vector<Int> e(f.entries.begin() + 1, f.entries.end());
        e.push_back(1);
        return e;
    };
    const std::vector<Int> ep = extended(fp), eq = extended(fq);
    const int d = fp.d + fq.d;
    FVector out{d, std::vector<Int>(static_cast<std::size_t>(d) + 1, Int(0))};
    out.entries[0] = 1;
    for (std::size_t i = 0; i < ep.size(); ++i)
        for (std::size_t j = 0; j < eq.size(); ++j)
            if (i + j < static_cast<std::size_t>(d)) // proper faces only
                out.entries[i + j + 1] += ep[i] * eq[j];
    return out;
}

FVector pyramid_fvector(const FVector& f) {
    FVector out{f.d + 1, {}};
    out.entries.reserve(f.entries.size() + 1);
    out.entries.push_back(1);
    for (std::size_t k = 1; k < f.entries.size(); ++k)
        out.entries.push_back(f.entries[k] + f.entries[k - 1]);
    out.entries.push_back(f.entries.back() + 1); // base + apex-join of facets
    return out;
}

FVector trst_fvector(const TRSTFamily& fam) {
    if (fam.r < 1 || fam.s < 1 || fam.t < 0)
        throw PreconditionViolated("trst_fvector: r,s >= 1 and t >= 0 required");
    as_small_dim(fam.dimension(), "trst_fvector");
    FVector f = product_fvector(simplex_fvector(as_small_dim(fam.r, "trst_fvector")),
                                simplex_fvector(as_small_dim(fam.s, "trst_fvector")));
    for (Int i = 0; i < fam.t; ++i)
        f = pyramid_fvector(f);
    return f;
}

Int trst_edge_formula(const Int& d, const Int& t) {
    if (d < 2 || t < 0)
        throw PreconditionViolated("trst_edge_formula: d >= 2 and t >= 0 required");
    const Int n = d * (t + 1);
    if (n % 2 != 0)
        throw NonIntegral("trst_edge_formula: d(t+1) odd for this (d,t)");
    return d * d + n / 2;
}

PhiResult phi_facets(const Int& v, const Int& d, const FactorConfig& cfg) {
    if (d < 1)
        throw PreconditionViolated("phi_facets: d >= 1 required");
    if (v == d + 1)
        return PhiResult{d + 1, true, {}};
    if (v < d + 2 || v > d * (d + 8) / 4)
        throw OutOfRange("phi_facets: v outside the characterized window");
    // Solve (r+1)(s+1)+t = v, r+s+t = d: rs = v-d-1 with t = d-r-s >= 0.
    const Int n = v - d - 1;
    PhiResult out{d + 3, false, {}};
    for (const Int& r : divisors(n, cfg)) {
        Int s = n / r;
        if (r > s)
            break;
        if (r + s <= d)
            out.witnesses.push_back(TRSTFamily{r, s, d - r - s});
    }
    if (!out.witnesses.empty())
        out.value = d + 2;
    return out;
}

std::vector<TRSTFamily> minimizers_2dplus1(const Int& d, const FactorConfig& cfg) {
    if (d < 2)
        throw PreconditionViolated("minimizers_2dplus1: d >= 2 required");
    std::vector<TRSTFamily> out;
    for (const Int& r : divisors(d, cfg)) {
        Int s = d / r;
        if (r > s)
            break;
        Int t = d - r - s;
        if (t >= 0)
            out.push_back(TRSTFamily{r, s, t});
    }
    std::sort(out.begin(), out.end(),
              [](const TRSTFamily& a, const TRSTFamily& b) { return a.t < b.t; });
    return out;
}

Int fiber_count_special(const Int& d, const FactorConfig& cfg) {
    if (d < 2)
        throw PreconditionViolated("fiber_count_special: d >= 2 required");
    Int D = divisor_count_in_range(d, 2, d - 1, cfg);
    return (D + 1) / 2;
}

bool fiber_count_special_is_one(const Int& d, const FactorConfig& cfg) {
    if (d < 2)
        throw PreconditionViolated("fiber_count_special_is_one: d >= 2 required");
    return is_semiprime(d, cfg) || is_prime_cube(d);
}

} // namespace polyfc
