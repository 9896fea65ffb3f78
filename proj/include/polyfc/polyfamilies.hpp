#ifndef POLYFC_POLYFAMILIES_HPP
#define POLYFC_POLYFAMILIES_HPP

#include <vector>

#include "polyfc/gvector.hpp"

namespace polyfc {

// Parameters of the t-fold pyramid over a product of an r-simplex and an
// s-simplex. Canonical form keeps r <= s.
struct TRSTFamily {
    Int r;
    Int s;
    Int t;

    bool operator==(const TRSTFamily&) const = default;

    Int dimension() const { return r + s + t; }
    Int vertex_count() const { return (r + 1) * (s + 1) + t; }
};

// Minimum facet count of a d-polytope with v vertices, over the window
// where the value is known. Witnesses list the families attaining d+2;
// simplex_only marks the v = d+1 case.
struct PhiResult {
    Int value;
    bool simplex_only = false;
    std::vector<TRSTFamily> witnesses;
};

FVector simplex_fvector(int n);

// f_k(P x Q) = sum over nonempty face pairs; the polytope itself counts as
// a face of its own dimension during composition.
FVector product_fvector(const FVector& fp, const FVector& fq);

// f_k(pyr P) = f_k(P) + f_{k-1}(P), with the base counted at the top.
FVector pyramid_fvector(const FVector& f);

FVector trst_fvector(const TRSTFamily& fam);

// f_1(T^{r,s,t}) = d^2 + d(t+1)/2 when rs = d. Throws NonIntegral when
// d(t+1) is odd (an inconsistent pair).
Int trst_edge_formula(const Int& d, const Int& t);

// Facet minimum for v vertices in dimension d, valid for v = d+1 and
// d+2 <= v <= floor(d(d+8)/4); throws OutOfRange elsewhere.
PhiResult phi_facets(const Int& v, const Int& d, const FactorConfig& cfg = {});

// Canonical (r,s,t) with rs = d and t = d-r-s >= 0, sorted by t. These are
// exactly the minimizers for f_0 = 2d+1, f_{d-1} = d+2.
std::vector<TRSTFamily> minimizers_2dplus1(const Int& d, const FactorConfig& cfg = {});

// Number of f-vectors of d-polytopes with f_0 = 2d+1, f_{d-1} = d+2:
// ceil(D(d)/2) with D(d) the divisor count in [2, d-1]; 0 when none exist.
Int fiber_count_special(const Int& d, const FactorConfig& cfg = {});

// True iff d is a semiprime or a prime cube; equals fiber_count_special == 1.
bool fiber_count_special_is_one(const Int& d, const FactorConfig& cfg = {});

} // namespace polyfc

#endif
