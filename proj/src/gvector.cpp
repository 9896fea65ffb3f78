#include "polyfc/gvector.hpp"

#include <cstddef>

namespace polyfc {

namespace {

// In-place Taylor shift p(x) -> p(x+c) on descending-power coefficients,
// by repeated synthetic division. Exact over Z[x].
void taylor_shift(std::vector<Int>& a, const Int& c) {
    const std::size_t n = a.size();
    if (n < 2)
        return;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 1; j < n - i; ++j)
            a[j] += c * a[j - 1];
}

void check_well_formed(int d, std::size_t len, const char* who) {
    if (d < 0 || len != static_cast<std::size_t>(d) + 1)
        throw PreconditionViolated(std::string(who) + ": entry count must be d+1");
}

constexpr std::size_t kMaterializeLimit = std::size_t(1) << 26;

std::size_t small_dimension(const Int& d, const char* who) {
    if (d < 0 || d > Int(kMaterializeLimit))
        throw PreconditionViolated(std::string(who) +
                                   ": dimension too large to materialize");
    return static_cast<std::size_t>(d);
}

} // namespace

std::vector<Int> GVector::padded() const {
    std::size_t dd = small_dimension(d, "GVector::padded");
    std::vector<Int> out = entries;
    out.resize(dd / 2 + 1, Int(0));
    return out;
}

HVector f_to_h(const FVector& f) {
    check_well_formed(f.d, f.entries.size(), "f_to_h");
    HVector h{f.d, f.entries};
    taylor_shift(h.entries, Int(-1));
    return h;
}

FVector h_to_f(const HVector& h) {
    check_well_formed(h.d, h.entries.size(), "h_to_f");
    FVector f{h.d, h.entries};
    taylor_shift(f.entries, Int(1));
    return f;
}

GVector h_to_g(const HVector& h) {
    check_well_formed(h.d, h.entries.size(), "h_to_g");
    GVector g{Int(h.d), {}};
    const std::size_t half = static_cast<std::size_t>(h.d) / 2;
    g.entries.reserve(half + 1);
    g.entries.push_back(1);
    for (std::size_t i = 1; i <= half; ++i)
        g.entries.push_back(h.entries[i] - h.entries[i - 1]);
    return g;
}

HVector g_to_h(const GVector& g) {
    if (g.entries.empty() || g.entries[0] != 1)
        throw PreconditionViolated("g_to_h: g_0 = 1 required");
    const std::size_t dd = small_dimension(g.d, "g_to_h");
    const std::size_t half = dd / 2;
    if (g.entries.size() > half + 1)
        throw PreconditionViolated("g_to_h: too many entries for dimension");
    HVector h{static_cast<int>(dd), std::vector<Int>(dd + 1, Int(0))};
    Int acc = 0;
    for (std::size_t i = 0; i <= half; ++i) {
        acc += g.at(i);
        h.entries[i] = acc;
        h.entries[dd - i] = acc;
    }
    return h;
}

bool dehn_sommerville_holds(const HVector& h) {
    if (h.d < 0 || h.entries.size() != static_cast<std::size_t>(h.d) + 1)
        return false;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(h.d) / 2; ++i)
        if (h.entries[i] != h.entries[static_cast<std::size_t>(h.d) - i])
            return false;
    return true;
}

namespace {

// Largest a >= j with C(a, j) <= n, for n >= 1. Doubling then bisection, so
// huge n stays logarithmic.
Int largest_binom_base(const Int& n, int j) {
    Int lo = j, hi = j;
    while (binom(hi * 2, j) <= n)
        hi *= 2;
    hi *= 2;
    while (lo < hi) {
        Int mid = (lo + hi + 1) >> 1;
        if (binom(mid, j) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace

std::vector<std::pair<Int, int>> macaulay_rep(const Int& n, int i) {
    if (n < 0 || i < 1)
        throw PreconditionViolated("macaulay_rep: n >= 0 and i >= 1 required");
    std::vector<std::pair<Int, int>> rep;
    Int rem = n;
    for (int j = i; j >= 1 && rem > 0; --j) {
        if (j == 1) {
            rep.emplace_back(rem, 1);
            rem = 0;
            break;
        }
        Int a = largest_binom_base(rem, j);
        rep.emplace_back(a, j);
        rem -= binom(a, j);
    }
    return rep;
}

Int pseudopower(const Int& n, int i) {
    Int out = 0;
    for (const auto& [a, j] : macaulay_rep(n, i))
        out += binom(a + 1, j + 1);
    return out;
}

bool is_m_sequence(const GVector& g) {
    if (g.entries.empty() || g.entries[0] != 1)
        return false;
    for (const Int& gi : g.entries)
        if (gi < 0)
            return false;
    for (std::size_t i = 1; i + 1 < g.entries.size(); ++i)
        if (pseudopower(g.entries[i], static_cast<int>(i)) < g.entries[i + 1])
            return false;
    return true;
}

bool gtheorem_check(const FVector& f) {
    if (f.d < 1 || f.entries.size() != static_cast<std::size_t>(f.d) + 1 ||
        f.entries[0] != 1)
        return false;
    HVector h = f_to_h(f);
    if (!dehn_sommerville_holds(h))
        return false;
    return is_m_sequence(h_to_g(h));
}

Int facets_from_g(const GVector& g) {
    Int sum = 0;
    for (std::size_t i = 0; i < g.entries.size(); ++i)
        sum += (g.d + 1 - 2 * Int(i)) * g.entries[i];
    return sum;
}

Int vertices_from_g(const GVector& g) {
    return g.d + 1 + g.at(1);
}

Int edges_from_g(const GVector& g) {
    if (g.d == 2) // polygon: every vertex is an edge endpoint twice
        return vertices_from_g(g);
    return g.at(2) + g.d * g.at(1) + binom(g.d + 1, 2);
}

} // namespace polyfc
