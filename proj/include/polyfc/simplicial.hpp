#ifndef POLYFC_SIMPLICIAL_HPP
#define POLYFC_SIMPLICIAL_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "polyfc/gvector.hpp"

namespace polyfc {

// Query on simplicial d-polytopes: target f_0 = a and f_{d-1} = b, with an
// optional window on f_1.
struct SimplicialQuery {
    Int d;
    Int a;
    Int b;
    std::optional<std::pair<Int, Int>> f1_window;
};

struct EnumerationConfig {
    std::uint64_t node_cap = 10'000'000;
};

// Result of the bounded g-vector search. Solutions are duplicate-free,
// lexicographic, trailing zeros trimmed (GVector carries the implicit tail).
struct GEnumeration {
    SimplicialQuery query;
    std::vector<GVector> solutions;
    std::uint64_t budget_used = 0; // search nodes visited
};

// All g-vectors of M-sequences with vertices_from_g = a and
// facets_from_g = b. g_1 is forced to a-d-1; the facet budget
// b-(d+1)-(d-1)g_1 is consumed exactly by the weighted tail sum.
GEnumeration enumerate_gvectors(const SimplicialQuery& q,
                                const EnumerationConfig& cfg = {});

// Exact count of simplicial f-vectors with f_0 = a, f_{d-1} = b. Valid as a
// count of f-vectors because distinct g-vectors give distinct f-vectors.
Int fiber_count_simplicial(const SimplicialQuery& q,
                           const EnumerationConfig& cfg = {});

bool fiber_count_simplicial_is_one(const SimplicialQuery& q,
                                   const EnumerationConfig& cfg = {});

// True iff some solution has f_1 inside the query's window.
bool range_exists_simplicial(const SimplicialQuery& q,
                             const EnumerationConfig& cfg = {});

// Brute-force ground truth: every M-sequence with g_1 <= g1_max and facet
// count <= budget_max (unbounded when absent), converted to an f-vector
// through the full g -> h -> f pipeline. Test use only.
std::set<FVector> oracle_enumerate_simplicial_fvectors(
    int d, const Int& g1_max, std::optional<Int> budget_max,
    int oracle_ceiling = 14);

} // namespace polyfc

#endif
