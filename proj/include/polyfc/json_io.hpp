#ifndef POLYFC_JSON_IO_HPP
#define POLYFC_JSON_IO_HPP

#include <json.hpp>

#include "polyfc/reductions.hpp"

// JSON adapters. Big integers are always emitted as decimal strings so no
// consumer loses precision.

namespace polyfc {

using json = nlohmann::json;

inline std::string dec(const Int& n) {
    return n.str();
}

// Strict decimal parse (optional leading '-').
Int parse_int(const std::string& s);
Int parse_nat(const std::string& s);

inline json entries_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& x : v)
        arr.push_back(dec(x));
    return arr;
}

inline void to_json(json& j, const FVector& f) {
    j = json{{"d", f.d}, {"entries", entries_json(f.entries)}};
}

inline void to_json(json& j, const HVector& h) {
    j = json{{"d", h.d}, {"entries", entries_json(h.entries)}};
}

inline void to_json(json& j, const GVector& g) {
    j = json{{"d", dec(g.d)}, {"entries", entries_json(g.entries)}};
}

inline void to_json(json& j, const TRSTFamily& fam) {
    j = json{{"r", dec(fam.r)}, {"s", dec(fam.s)}, {"t", dec(fam.t)}};
}

inline void to_json(json& j, const PhiResult& phi) {
    j = json{{"phi", dec(phi.value)},
             {"simplex_only", phi.simplex_only},
             {"witnesses", phi.witnesses}};
}

inline void to_json(json& j, const SimplicialQuery& q) {
    j = json{{"d", dec(q.d)}, {"a", dec(q.a)}, {"b", dec(q.b)}};
    if (q.f1_window)
        j["f1_window"] = json::array({dec(q.f1_window->first), dec(q.f1_window->second)});
}

inline void to_json(json& j, const GEnumeration& e) {
    j = json{{"query", e.query},
             {"solutions", e.solutions},
             {"budget_used", e.budget_used}};
}

inline void to_json(json& j, const DivisorInstance& inst) {
    j = json{{"L", dec(inst.L)}, {"U", dec(inst.U)}, {"d", dec(inst.d)}};
}

inline void to_json(json& j, const F1RangeInstance& inst) {
    j = json{{"d", dec(inst.d)}, {"a", dec(inst.a)}, {"b", dec(inst.b)},
             {"L", dec(inst.L)}, {"U", dec(inst.U)}};
}

inline void to_json(json& j, const Discrepancy& disc) {
    j = json{{"kind", disc.kind}, {"d", dec(disc.d)}, {"L", dec(disc.L)},
             {"U", dec(disc.U)}, {"detail", disc.detail}};
}

inline void to_json(json& j, const VerificationReport& r) {
    j = json{{"d_max", dec(r.d_max)},
             {"instances_checked", r.instances_checked},
             {"discrepancy_count", r.discrepancies.size()},
             {"clean", r.clean()}};
}

} // namespace polyfc

#endif
