#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyfc/gvector.hpp"

using namespace polyfc;

namespace {

FVector fv(int d, std::vector<long long> e) {
    FVector f{d, {}};
    for (long long x : e)
        f.entries.push_back(x);
    return f;
}

HVector hv(int d, std::vector<long long> e) {
    HVector h{d, {}};
    for (long long x : e)
        h.entries.push_back(x);
    return h;
}

GVector gv(long long d, std::vector<long long> e) {
    GVector g{Int(d), {}};
    for (long long x : e)
        g.entries.push_back(x);
    return g;
}

// Oracle: evaluate the f-polynomial at x-1 by expanding (x-1)^k with
// binomials and summing, independent of the synthetic-substitution path.
std::vector<Int> shift_by_expansion(const std::vector<Int>& a, long long c) {
    const std::size_t n = a.size();
    std::vector<Int> out(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        // a[i] multiplies x^{n-1-i}; expand (x+c)^{n-1-i}.
        const std::size_t deg = n - 1 - i;
        Int cpow = 1;
        for (std::size_t k = 0; k <= deg; ++k) {
            out[n - 1 - (deg - k)] += a[i] * binom(deg, deg - k) * cpow;
            cpow *= c;
        }
    }
    return out;
}

} // namespace

TEST_CASE("f_to_h on known polytopes") {
    CHECK(f_to_h(fv(3, {1, 6, 12, 8})).entries == hv(3, {1, 3, 3, 1}).entries);
    CHECK(f_to_h(fv(2, {1, 3, 3})).entries == hv(2, {1, 1, 1}).entries);
    CHECK(f_to_h(fv(4, {1, 5, 10, 10, 5})).entries == hv(4, {1, 1, 1, 1, 1}).entries);
}

TEST_CASE("h_to_f inverse") {
    CHECK(h_to_f(hv(3, {1, 3, 3, 1})).entries == fv(3, {1, 6, 12, 8}).entries);
    CHECK(h_to_f(hv(2, {1, 1, 1})).entries == fv(2, {1, 3, 3}).entries);
    CHECK(h_to_f(hv(4, {1, 1, 1, 1, 1})).entries == fv(4, {1, 5, 10, 10, 5}).entries);
}

TEST_CASE("shift matches the binomial-expansion oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        int d = 1 + static_cast<int>(rng() % 12);
        std::vector<Int> a;
        for (int i = 0; i <= d; ++i)
            a.push_back(Int(rng() % 1000) - 500);
        FVector f{d, a};
        CHECK(f_to_h(f).entries == shift_by_expansion(a, -1));
        HVector h{d, a};
        CHECK(h_to_f(h).entries == shift_by_expansion(a, 1));
    }
}

TEST_CASE("round trip f -> h -> f, random vectors") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10'000; ++trial) {
        int d = 1 + static_cast<int>(rng() % 20);
        FVector f{d, {Int(1)}};
        for (int i = 0; i < d; ++i)
            f.entries.push_back(Int(1 + rng() % 1'000'000));
        if (h_to_f(f_to_h(f)) != f)
            FAIL("round trip failed");
    }
}

TEST_CASE("h_to_g and g_to_h") {
    CHECK(h_to_g(hv(3, {1, 3, 3, 1})).entries == gv(3, {1, 2}).entries);
    CHECK(h_to_g(hv(4, {1, 1, 1, 1, 1})).entries == gv(4, {1, 0, 0}).entries);
    CHECK(g_to_h(gv(6, {1, 3, 3, 3})).entries ==
          hv(6, {1, 4, 7, 10, 7, 4, 1}).entries);
    // Implicit zero tail.
    CHECK(g_to_h(gv(4, {1})).entries == hv(4, {1, 1, 1, 1, 1}).entries);
}

TEST_CASE("dehn_sommerville_holds") {
    CHECK(dehn_sommerville_holds(hv(3, {1, 3, 3, 1})));
    CHECK_FALSE(dehn_sommerville_holds(hv(3, {1, 2, 3, 1})));
}

TEST_CASE("macaulay_rep examples") {
    using Rep = std::vector<std::pair<Int, int>>;
    CHECK(macaulay_rep(4, 2) == Rep{{3, 2}, {1, 1}});
    CHECK(macaulay_rep(0, 5) == Rep{});
    CHECK(macaulay_rep(3, 1) == Rep{{3, 1}});
}

TEST_CASE("macaulay_rep reassembles and is canonical, n <= 10^4, i <= 8") {
    for (int i = 1; i <= 8; ++i)
        for (long long n = 0; n <= 10'000; ++n) {
            auto rep = macaulay_rep(n, i);
            Int sum = 0;
            int prev_index = i + 1;
            Int prev_a = -1;
            for (const auto& [a, j] : rep) {
                sum += binom(a, j);
                if (j >= prev_index || (prev_a >= 0 && a >= prev_a) || a < j || j < 1)
                    FAIL("canonical form violated at n=" << n << " i=" << i);
                prev_index = j;
                prev_a = a;
            }
            if (sum != n)
                FAIL("reassembly failed at n=" << n << " i=" << i);
        }
}

TEST_CASE("pseudopower examples") {
    CHECK(pseudopower(4, 2) == 5);
    CHECK(pseudopower(0, 3) == 0);
    CHECK(pseudopower(3, 1) == 6);
}

TEST_CASE("pseudopower monotone, n,m <= 200, i <= 6") {
    for (int i = 1; i <= 6; ++i) {
        Int prev = 0;
        for (long long n = 0; n <= 200; ++n) {
            Int v = pseudopower(n, i);
            if (v < prev)
                FAIL("pseudopower not monotone at n=" << n << " i=" << i);
            prev = v;
        }
    }
}

TEST_CASE("pseudopower handles huge arguments at i = 1") {
    Int n("123456789012345678901234567890");
    CHECK(pseudopower(n, 1) == n * (n + 1) / 2);
}

TEST_CASE("is_m_sequence") {
    CHECK(is_m_sequence(gv(4, {1, 0, 0})));
    CHECK_FALSE(is_m_sequence(gv(4, {1, 0, 1})));
    CHECK(is_m_sequence(gv(6, {1, 3, 4, 0})));
    CHECK_FALSE(is_m_sequence(gv(6, {1, 3, 7, 0}))); // 3^<1> = 6 < 7
    CHECK_FALSE(is_m_sequence(gv(4, {1, -1, 0})));
}

TEST_CASE("gtheorem_check") {
    CHECK(gtheorem_check(fv(3, {1, 6, 12, 8})));      // octahedron
    CHECK(gtheorem_check(fv(4, {1, 5, 10, 10, 5}))); // simplex
    CHECK_FALSE(gtheorem_check(fv(3, {1, 6, 12, 9})));
}

TEST_CASE("closed forms from g") {
    GVector oct = gv(3, {1, 2});
    CHECK(facets_from_g(oct) == 8);
    CHECK(vertices_from_g(oct) == 6);
    CHECK(edges_from_g(oct) == 12);
    GVector simplex4 = gv(4, {1, 0, 0});
    CHECK(facets_from_g(simplex4) == 5);
    CHECK(vertices_from_g(simplex4) == 5);
    CHECK(edges_from_g(simplex4) == 10);
    CHECK(facets_from_g(gv(6, {1, 3, 3, 3})) == 34);
}

TEST_CASE("closed forms agree with the conversion pipeline") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 2000; ++trial) {
        int d = 2 + static_cast<int>(rng() % 13);
        GVector g{Int(d), {Int(1)}};
        for (int i = 1; i <= d / 2; ++i)
            g.entries.push_back(Int(rng() % 5));
        FVector f = h_to_f(g_to_h(g));
        CHECK(vertices_from_g(g) == f.entries[1]);
        if (d >= 2)
            CHECK(edges_from_g(g) == f.entries[2]);
        CHECK(facets_from_g(g) == f.entries.back());
    }
}
