#include "polyfc/reductions.hpp"

#include <algorithm>

namespace polyfc {

void DivisorInstance::check() const {
    if (L < 1 || L > U || U >= d)
        throw PreconditionViolated("DivisorInstance: 1 <= L <= U < d required");
    if (L * L > d || d > U * U)
        throw PreconditionViolated("DivisorInstance: sqrt(d) must lie in [L, U]");
}

bool F1RangeInstance::t_admissible_hi(const Int& t) const {
    const Int w = d - t;
    return w >= 0 && w * w >= 4 * d;
}

bool F1RangeInstance::t_admissible_lo(const Int& t) const {
    // d - t <= M = max(L + d/L, U + d/U), division-free.
    const Int w = d - t;
    return w * L <= L * L + d || w * U <= U * U + d;
}

Int F1RangeInstance::f1_of_t(const Int& t) const {
    return trst_edge_formula(d, t);
}

SimplicialQuery semiprime_to_fibercount(const Int& d) {
    if (d < 2)
        throw PreconditionViolated("semiprime_to_fibercount: d >= 2 required");
    return SimplicialQuery{d, 2 * d + 1, d + 2, std::nullopt};
}

F1RangeInstance divisor_to_f1range(const DivisorInstance& inst) {
    inst.check();
    return F1RangeInstance{inst.d, 2 * inst.d + 1, inst.d + 2, inst.L, inst.U};
}

bool answer_f1range_general(const F1RangeInstance& inst, const FactorConfig& cfg) {
    if (inst.a != 2 * inst.d + 1 || inst.b != inst.d + 2)
        throw UnsupportedInstance(
            "answer_f1range_general: only the f_0 = 2d+1, f_{d-1} = d+2 family "
            "is characterized");
    for (const TRSTFamily& m : minimizers_2dplus1(inst.d, cfg))
        if (inst.t_admissible(m.t))
            return true;
    return false;
}

namespace {

std::uint64_t to_u64(const Int& n, const char* who) {
    if (n < 0 || n > Int(std::uint64_t(1) << 32))
        throw PreconditionViolated(std::string(who) + ": d_max out of sweep range");
    return static_cast<std::uint64_t>(n);
}

} // namespace

VerificationReport verify_divisor_reduction(const Int& d_max) {
    VerificationReport report{d_max, 0, {}};
    const std::uint64_t dmax = to_u64(d_max, "verify_divisor_reduction");
    for (std::uint64_t d = 2; d <= dmax; ++d) {
        // Nontrivial divisors of d, ascending, by trial division. The
        // characterized interval is [2, d-1]: x = 1 and x = d correspond to
        // no minimizer polytope, so the equivalence is stated without them.
        std::vector<std::uint64_t> divs;
        for (std::uint64_t r = 2; r * r <= d; ++r)
            if (d % r == 0) {
                divs.push_back(r);
                if (r != d / r)
                    divs.push_back(d / r);
            }
        std::sort(divs.begin(), divs.end());

        // Minimizers share a = 2d+1, b = d+2; only t varies. The admissible
        // set on t is an interval, so the minimizer with the smallest
        // r+s = d-t decides the lower predicate for every (L, U).
        std::vector<Int> min_w; // r+s per minimizer, ascending
        for (std::uint64_t r = 2; r * r <= d; ++r)
            if (d % r == 0)
                min_w.push_back(Int(r + d / r));
        std::sort(min_w.begin(), min_w.end());

        const std::uint64_t root = static_cast<std::uint64_t>(isqrt(Int(d)));
        const std::uint64_t u_min = root * root == d ? root : root + 1;

        // smallest_div[L] = least divisor of d that is >= L.
        std::vector<std::uint64_t> smallest_div(root + 2, 0);
        for (std::uint64_t L = 1; L <= root + 1; ++L) {
            auto it = std::lower_bound(divs.begin(), divs.end(), L);
            smallest_div[L] = it == divs.end() ? d + 1 : *it;
        }

        for (std::uint64_t L = 1; L <= root; ++L) {
            // Per-L half of the lower predicate, hoisted out of the U loop.
            const bool lo_via_L =
                !min_w.empty() && min_w.front() * L <= Int(L) * L + d;
            const std::uint64_t first_hit = smallest_div[L];
            for (std::uint64_t U = std::max(L, u_min); U < d; ++U) {
                ++report.instances_checked;
                const bool truth = first_hit <= U;
                bool answer = lo_via_L;
                if (!answer && !min_w.empty())
                    answer = min_w.front() * U <= Int(U) * U + d;
                if (truth != answer) {
                    report.discrepancies.push_back(Discrepancy{
                        "divisor_reduction", Int(d), Int(L), Int(U),
                        truth ? "divisor exists but reduction answers no"
                              : "reduction answers yes but no divisor"});
                }
            }
        }

        // Cross-check the production path on boundary instances: the two
        // fast-path predicates above must agree with divisor_to_f1range +
        // answer_f1range_general and with divisor_in_interval.
        std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
        if (root >= 1 && u_min < d) {
            samples.emplace_back(root, u_min);
            samples.emplace_back(1, d - 1);
            if (root >= 2)
                samples.emplace_back(2, u_min + 1 < d ? u_min + 1 : u_min);
        }
        for (auto [L, U] : samples) {
            DivisorInstance inst{Int(L), Int(U), Int(d)};
            const bool answer = answer_f1range_general(divisor_to_f1range(inst));
            const bool truth =
                divisor_in_interval(Int(d), Int(std::max<std::uint64_t>(L, 2)),
                                    Int(U)).has_value();
            if (truth != answer)
                report.discrepancies.push_back(
                    Discrepancy{"divisor_reduction_full_path", Int(d), Int(L), Int(U),
                                "production path disagrees with ground truth"});
        }
    }
    return report;
}

VerificationReport verify_semiprime_reduction(const Int& d_max, const FactorConfig& cfg) {
    VerificationReport report{d_max, 0, {}};
    const std::uint64_t dmax = to_u64(d_max, "verify_semiprime_reduction");
    for (std::uint64_t du = 2; du <= dmax; ++du) {
        const Int d = du;
        ++report.instances_checked;
        const bool pred = fiber_count_special_is_one(d, cfg);
        const Int fc = fiber_count_special(d, cfg);

        const auto minimizers = minimizers_2dplus1(d, cfg);
        std::vector<Int> edge_counts;
        for (const TRSTFamily& m : minimizers)
            edge_counts.push_back(trst_edge_formula(d, m.t));
        std::sort(edge_counts.begin(), edge_counts.end());
        edge_counts.erase(std::unique(edge_counts.begin(), edge_counts.end()),
                          edge_counts.end());
        const Int distinct = Int(edge_counts.size());

        if (pred != (fc == 1))
            report.discrepancies.push_back(
                Discrepancy{"semiprime_reduction", d, 0, 0,
                            "predicate disagrees with ceil(D/2) == 1"});
        if (fc != distinct)
            report.discrepancies.push_back(
                Discrepancy{"semiprime_reduction", d, 0, 0,
                            "ceil(D/2) disagrees with distinct minimizer f-vectors"});

        // At small scale, confirm distinctness against fully constructed
        // f-vectors rather than the edge formula alone.
        if (du <= 200) {
            std::set<FVector> built;
            for (const TRSTFamily& m : minimizers)
                built.insert(trst_fvector(m));
            if (Int(built.size()) != distinct)
                report.discrepancies.push_back(
                    Discrepancy{"semiprime_reduction", d, 0, 0,
                                "edge formula distinctness disagrees with "
                                "constructed f-vectors"});
        }
    }
    return report;
}

} // namespace polyfc
