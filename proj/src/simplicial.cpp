#include "polyfc/simplicial.hpp"

#include <algorithm>

namespace polyfc {

namespace {

struct SearchState {
    Int d;
    Int half; // floor(d/2)
    std::uint64_t nodes = 0;
    std::uint64_t cap = 0;
    std::vector<Int> stack; // g_0, g_1, ... along the current branch
    std::vector<GVector> solutions;

    void tick() {
        if (++nodes > cap)
            throw BudgetExceeded("enumerate_gvectors: node cap exceeded");
    }
};

// Assign g_i for i = index..floor(d/2). `budget` is the facet weight still
// to be consumed; a branch is accepted exactly when it hits zero (every
// later entry is then forced to zero through the Macaulay bound).
void search(SearchState& st, int index, const Int& prev, const Int& budget) {
    st.tick();
    if (budget == 0) {
        st.solutions.push_back(GVector{st.d, st.stack});
        return;
    }
    if (Int(index) > st.half)
        return;
    const Int weight = st.d + 1 - 2 * index;
    Int max_g = budget / weight;
    Int macaulay = pseudopower(prev, index - 1);
    if (macaulay < max_g)
        max_g = macaulay;
    for (Int g = 1; g <= max_g; ++g) {
        st.stack.push_back(g);
        search(st, index + 1, g, budget - weight * g);
        st.stack.pop_back();
    }
}

} // namespace

GEnumeration enumerate_gvectors(const SimplicialQuery& q, const EnumerationConfig& cfg) {
    if (q.d < 2)
        throw PreconditionViolated("enumerate_gvectors: d >= 2 required");
    GEnumeration out{q, {}, 0};
    const Int g1 = q.a - q.d - 1;
    if (g1 < 0)
        return out;
    const Int budget = q.b - (q.d + 1) - (q.d - 1) * g1;
    if (budget < 0)
        return out;

    SearchState st;
    st.d = q.d;
    st.half = q.d / 2;
    st.cap = cfg.node_cap;
    st.stack = {Int(1)};
    if (g1 == 0) {
        st.tick();
        if (budget == 0)
            st.solutions.push_back(GVector{st.d, st.stack});
    } else {
        st.stack.push_back(g1);
        search(st, 2, g1, budget);
    }

    std::sort(st.solutions.begin(), st.solutions.end());
    out.solutions = std::move(st.solutions);
    out.budget_used = st.nodes;
    return out;
}

Int fiber_count_simplicial(const SimplicialQuery& q, const EnumerationConfig& cfg) {
    return Int(enumerate_gvectors(q, cfg).solutions.size());
}

bool fiber_count_simplicial_is_one(const SimplicialQuery& q, const EnumerationConfig& cfg) {
    return fiber_count_simplicial(q, cfg) == 1;
}

bool range_exists_simplicial(const SimplicialQuery& q, const EnumerationConfig& cfg) {
    if (!q.f1_window)
        throw PreconditionViolated("range_exists_simplicial: f1 window required");
    const auto& [lo, hi] = *q.f1_window;
    for (const GVector& g : enumerate_gvectors(q, cfg).solutions) {
        Int f1 = edges_from_g(g);
        if (lo <= f1 && f1 <= hi)
            return true;
    }
    return false;
}

namespace {

void oracle_search(int d, const Int& g1_max, const std::optional<Int>& budget_max,
                   std::vector<Int>& stack, const Int& facets_so_far,
                   std::set<FVector>& out) {
    const std::size_t half = static_cast<std::size_t>(d) / 2;
    if (stack.size() == half + 1) {
        GVector g{Int(d), stack};
        out.insert(h_to_f(g_to_h(g)));
        return;
    }
    const int i = static_cast<int>(stack.size());
    const Int weight = d + 1 - 2 * i;
    Int hi = i == 1 ? g1_max : pseudopower(stack.back(), i - 1);
    if (budget_max) {
        Int room = (*budget_max - facets_so_far) / weight;
        if (room < hi)
            hi = room;
    }
    for (Int g = 0; g <= hi; ++g) {
        stack.push_back(g);
        oracle_search(d, g1_max, budget_max, stack, facets_so_far + weight * g, out);
        stack.pop_back();
    }
}

} // namespace

std::set<FVector> oracle_enumerate_simplicial_fvectors(int d, const Int& g1_max,
                                                       std::optional<Int> budget_max,
                                                       int oracle_ceiling) {
    if (d < 2 || d > oracle_ceiling)
        throw OracleScaleExceeded("oracle ceiling is " + std::to_string(oracle_ceiling));
    if (budget_max && *budget_max < d + 1)
        return {};
    std::set<FVector> out;
    std::vector<Int> stack{Int(1)};
    oracle_search(d, g1_max, budget_max, stack, Int(d) + 1, out);
    return out;
}

} // namespace polyfc
