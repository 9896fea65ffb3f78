#ifndef POLYFC_GVECTOR_HPP
#define POLYFC_GVECTOR_HPP

#include <vector>

#include "polyfc/exactmath.hpp"

namespace polyfc {

// Face-count vector (f_{-1}, f_0, ..., f_{d-1}) of a d-polytope.
// entries[i] = f_{i-1}, entries[0] = 1 for well-formed vectors.
struct FVector {
    int d = 0;
    std::vector<Int> entries;

    bool operator==(const FVector&) const = default;
    bool operator<(const FVector& o) const {
        return d != o.d ? d < o.d : entries < o.entries;
    }
};

// (h_0, ..., h_d). Signed: conversions of non-realizable f-vectors
// legitimately produce negative entries; validity checks catch them.
struct HVector {
    int d = 0;
    std::vector<Int> entries;

    bool operator==(const HVector&) const = default;
};

// (g_0, ..., g_m) with m <= floor(d/2). Entries past the stored length are
// implicitly zero, so solution sets at astronomically large d stay compact.
// The dimension is an exact integer for the same reason.
struct GVector {
    Int d = 0;
    std::vector<Int> entries;

    bool operator==(const GVector&) const = default;
    bool operator<(const GVector& o) const {
        return d != o.d ? d < o.d : entries < o.entries;
    }

    // Entry g_i, with the implicit-zero tail.
    Int at(std::size_t i) const {
        return i < entries.size() ? entries[i] : Int(0);
    }
    // Entries padded to the full length floor(d/2)+1. Only for dimensions
    // whose full vector is materializable.
    std::vector<Int> padded() const;
};

// The f- and h-polynomials are related by the shift x -> x-1 over Z[x];
// both directions are exact synthetic substitution.
HVector f_to_h(const FVector& f);
FVector h_to_f(const HVector& h);

// g_i = h_i - h_{i-1} on the first half. Does not validate symmetry of h.
GVector h_to_g(const HVector& h);
// Prefix sums give h_0..h_{floor(d/2)}, then mirror h_i = h_{d-i}.
HVector g_to_h(const GVector& g);

// Dehn-Sommerville: h_i = h_{d-i} for 0 <= i <= floor(d/2).
bool dehn_sommerville_holds(const HVector& h);

// The unique i-canonical binomial representation
// n = C(a_i,i) + C(a_{i-1},i-1) + ... + C(a_j,j), a_i > ... > a_j >= j >= 1.
// Pairs are (a, index), index descending; empty for n = 0.
std::vector<std::pair<Int, int>> macaulay_rep(const Int& n, int i);

// Macaulay pseudopower n^<i> = sum C(a_j+1, j+1); 0^<i> = 0.
Int pseudopower(const Int& n, int i);

// g_0 = 1, all g_i >= 0, and pseudopower(g_i, i) >= g_{i+1}.
bool is_m_sequence(const GVector& g);

// Exact membership test for f-vectors of simplicial d-polytopes.
bool gtheorem_check(const FVector& f);

// Closed forms avoiding the full conversion pipeline:
//   f_{d-1} = sum_i (d+1-2i) g_i
//   f_0     = d + 1 + g_1
//   f_1     = g_2 + d g_1 + C(d+1, 2)   (g_2 := 0 when absent)
Int facets_from_g(const GVector& g);
Int vertices_from_g(const GVector& g);
Int edges_from_g(const GVector& g);

} // namespace polyfc

#endif
