#ifndef POLYFC_REDUCTIONS_HPP
#define POLYFC_REDUCTIONS_HPP

#include <string>
#include <vector>

#include "polyfc/polyfamilies.hpp"
#include "polyfc/simplicial.hpp"

namespace polyfc {

// DIVISOR instance: does d have a divisor in [L, U]? Requires L <= U < d
// and sqrt(d) in [L, U], taken exactly as L^2 <= d <= U^2.
struct DivisorInstance {
    Int L;
    Int U;
    Int d;

    void check() const;
};

// Existence query on d-polytopes with f_0 = 2d+1, f_{d-1} = d+2 and f_1 in
// the interval induced by a DIVISOR instance. The real-valued endpoints
// [d - M, d - 2*sqrt(d)] on t are kept as exact integer predicates:
//   upper: d - t >= 0 and (d - t)^2 >= 4d
//   lower: (d-t)L <= L^2 + d  or  (d-t)U <= U^2 + d   (d - t <= max form)
struct F1RangeInstance {
    Int d;
    Int a; // 2d+1
    Int b; // d+2
    Int L;
    Int U;

    bool t_admissible_hi(const Int& t) const;
    bool t_admissible_lo(const Int& t) const;
    bool t_admissible(const Int& t) const { return t_admissible_lo(t) && t_admissible_hi(t); }

    // f_1 of the minimizer with pyramid height t. Throws NonIntegral on
    // inconsistent pairs.
    Int f1_of_t(const Int& t) const;
};

// Semiprime Testability -> fiber count = 1: the (d, a, b) instance whose
// general-polytope fiber count is 1 iff d is a semiprime or a prime cube.
SimplicialQuery semiprime_to_fibercount(const Int& d);

F1RangeInstance divisor_to_f1range(const DivisorInstance& inst);

// Decides the f_1-range existence question for the characterized family
// a = 2d+1, b = d+2 only; throws UnsupportedInstance otherwise.
bool answer_f1range_general(const F1RangeInstance& inst, const FactorConfig& cfg = {});

struct Discrepancy {
    std::string kind;
    Int d;
    Int L; // 0 when not applicable
    Int U;
    std::string detail;
};

struct VerificationReport {
    Int d_max;
    std::uint64_t instances_checked = 0;
    std::vector<Discrepancy> discrepancies;

    bool clean() const { return discrepancies.empty(); }
};

// Exhaustive soundness/completeness sweep of the DIVISOR reduction over
// every valid (L, U, d) with d <= d_max.
VerificationReport verify_divisor_reduction(const Int& d_max);

// Three-way equivalence sweep for the semiprime reduction: the number-
// theoretic predicate, ceil(D/2), and the distinct minimizer f-vectors.
VerificationReport verify_semiprime_reduction(const Int& d_max,
                                              const FactorConfig& cfg = {});

} // namespace polyfc

#endif
