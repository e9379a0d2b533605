#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ogval/element.hpp"
#include "ogval/field.hpp"
#include "ogval/sampling.hpp"
#include "ogval/value_group.hpp"

namespace ogval {

/// A fractional ideal of a chain member, represented as a cut in the value
/// group: { x : v_stage(x) >= bound }.  Strict cuts are normalized to closed
/// ones (every stage group is discrete, so {v > g} = {v >= g+1}); the zero
/// ideal is the cut at Infinity.
///
/// `stage` names the chain member whose valuation measures the bound.  For
/// rank-1 fields it equals the ring's own index.  On the composite ring the
/// bound may live at stage 1 (t-adic, rank 1) or stage 2 (full rank-2
/// group); stage-1 cuts are exactly the ideals that radicals of t-deep cuts
/// produce, e.g. sqrt{v >= (1,0)} = {v_t >= 1}.
struct FractionalIdealCut {
    ValuationRingRef ring;
    int stage = 1;
    VGE bound = VGE::of(0); ///< Infinity encodes the zero ideal

    static FractionalIdealCut at_least(const ValuationRingRef& ring, const VGE& g, int stage = -1);
    static FractionalIdealCut greater_than(const ValuationRingRef& ring, const VGE& g,
                                           int stage = -1);
    static FractionalIdealCut whole_ring(const ValuationRingRef& ring);
    static FractionalIdealCut maximal_ideal(const ValuationRingRef& ring);
    static FractionalIdealCut zero_ideal(const ValuationRingRef& ring);

    bool is_zero_ideal() const { return bound.is_infinity(); }
    /// Contained in the ring (bound >= 0)?
    bool is_integral() const;
    /// Proper nonzero ideal strictly between {0} and O.
    bool is_proper_nonzero() const;

    bool contains(const Element& x) const;

    std::string to_string() const;
};

enum class CutOrder { Less, Equal, Greater }; ///< inclusion order on cuts

/// Inclusion comparison; cuts on the same field are always comparable
/// (linearly ordered), cross-ring comparisons require the same field.
CutOrder cut_compare(const FractionalIdealCut& a, const FractionalIdealCut& b);
bool cut_subset(const FractionalIdealCut& a, const FractionalIdealCut& b);

/// A + B as sets (the larger cut).  RingMismatch unless both sit on the same
/// chain member.
FractionalIdealCut cut_sum(const FractionalIdealCut& a, const FractionalIdealCut& b);

/// A * B (bounds add).
FractionalIdealCut cut_product(const FractionalIdealCut& a, const FractionalIdealCut& b);

/// Radical of a proper nonzero integral ideal: the coarsest maximal-ideal
/// cut at the stage where the bound is positive.  NotAnIdeal for fractional
/// cuts and for the whole ring; the zero ideal is its own radical.
FractionalIdealCut cut_radical(const FractionalIdealCut& a);

/// Scale by an element: x * A shifts the bound by the stage projection of
/// v(x).
FractionalIdealCut cut_scaled(const FractionalIdealCut& a, const Element& x);

/// Random element of the cut (exact membership guaranteed); exact zero for
/// the zero ideal.
Element sample_in_cut(Sampler& s, const FractionalIdealCut& a, std::int64_t depth = 4);

/// Property run for Lemma-style group laws of 1 + A: samples x, y in A and
/// verifies (1+x)(1+y) in 1+A and (1+x)^{-1} in 1+A exactly.
struct OnePlusIdealReport {
    int trials = 0;
    int failures = 0;
    std::vector<std::string> counterexamples;
    std::uint64_t seed = 0;
};

OnePlusIdealReport one_plus_ideal_group_check(const FractionalIdealCut& a, int trials,
                                              std::uint64_t seed);

} // namespace ogval
