#include "ogval/ideal_cut.hpp"

#include <algorithm>

namespace ogval {

namespace {

// Bounds embedded into Z x (Z u {-inf}) u {+inf} so that cuts at different
// stages of the composite ring compare uniformly: a stage-1 bound a means
// {v_t >= a} = {v >= (a, -inf)} lexicographically.
struct ExtBound {
    bool top = false; // zero ideal
    std::int64_t first = 0;
    bool second_neg_inf = false;
    std::int64_t second = 0;
};

ExtBound ext_of(const FractionalIdealCut& c) {
    ExtBound e;
    if (c.bound.is_infinity()) {
        e.top = true;
        return e;
    }
    if (c.bound.rank() == 2) {
        e.first = c.bound.first();
        e.second = c.bound.second();
        return e;
    }
    e.first = c.bound.as_integer();
    // rank-1 bound on a rank-2 ring measures the t-stage only
    e.second_neg_inf = c.ring.field.kind == FieldKind::Composite;
    return e;
}

int ext_cmp(const ExtBound& a, const ExtBound& b) {
    if (a.top || b.top) return a.top && b.top ? 0 : (a.top ? 1 : -1);
    if (a.first != b.first) return a.first < b.first ? -1 : 1;
    if (a.second_neg_inf && b.second_neg_inf) return 0;
    if (a.second_neg_inf) return -1;
    if (b.second_neg_inf) return 1;
    if (a.second != b.second) return a.second < b.second ? -1 : 1;
    return 0;
}

void check_stage(const ValuationRingRef& ring, int stage, const VGE& bound) {
    if (ring.chain_index < 1) throw NotAnIdeal("cuts live on nontrivial chain members");
    if (stage < 1 || stage > ring.chain_index)
        throw RingMismatch("cut stage outside the ring's chain prefix");
    if (!bound.is_infinity()) {
        int want = (ring.field.kind == FieldKind::Composite && stage == 2) ? 2 : 1;
        if (bound.rank() != want) throw RankMismatch("cut bound rank does not match stage");
    }
}

void check_same_ring(const FractionalIdealCut& a, const FractionalIdealCut& b, const char* op) {
    if (!(a.ring == b.ring))
        throw RingMismatch(std::string(op) + ": cuts on different rings");
}

int stage_rank(const ValuationRingRef& ring, int stage) {
    return (ring.field.kind == FieldKind::Composite && stage == 2) ? 2 : 1;
}

} // namespace

FractionalIdealCut FractionalIdealCut::at_least(const ValuationRingRef& ring, const VGE& g,
                                                int stage) {
    if (stage < 0) stage = ring.chain_index;
    if (ring.field.kind == FieldKind::Composite && ring.chain_index == 2 && !g.is_infinity())
        stage = g.rank() == 2 ? 2 : 1;
    check_stage(ring, stage, g);
    return FractionalIdealCut{ring, stage, g};
}

FractionalIdealCut FractionalIdealCut::greater_than(const ValuationRingRef& ring, const VGE& g,
                                                    int stage) {
    if (g.is_infinity()) throw NotAnIdeal("cut strictly above Infinity is empty");
    return at_least(ring, g.successor(), stage);
}

FractionalIdealCut FractionalIdealCut::whole_ring(const ValuationRingRef& ring) {
    return at_least(ring, VGE::zero(ring.stage_rank()), ring.chain_index);
}

FractionalIdealCut FractionalIdealCut::maximal_ideal(const ValuationRingRef& ring) {
    return at_least(ring, VGE::minimal_positive(ring.stage_rank()), ring.chain_index);
}

FractionalIdealCut FractionalIdealCut::zero_ideal(const ValuationRingRef& ring) {
    FractionalIdealCut c{ring, ring.chain_index, VGE::infinity()};
    check_stage(ring, c.stage, VGE::of(0));
    return c;
}

bool FractionalIdealCut::is_integral() const {
    if (is_zero_ideal()) return true;
    return ext_cmp(ext_of(*this), ext_of(whole_ring(ring))) >= 0;
}

bool FractionalIdealCut::is_proper_nonzero() const {
    if (is_zero_ideal()) return false;
    return ext_cmp(ext_of(*this), ext_of(whole_ring(ring))) > 0;
}

bool FractionalIdealCut::contains(const Element& x) const {
    if (x.is_exact_zero()) return true;
    if (bound.is_infinity()) return false;
    if (stage_rank(ring, stage) == 2) return x.val_at_least(bound);
    if (ring.field.kind == FieldKind::Rationals) return x.val_at(ring) >= bound;
    return x.stage_val_at_least(bound.as_integer());
}

std::string FractionalIdealCut::to_string() const {
    if (is_zero_ideal()) return "{0}@" + ring.to_string();
    std::string v = ring.field.kind == FieldKind::Composite && stage == 1 ? "v_t" : "v";
    return "{" + v + ">=" + bound.to_string() + "}@" + ring.to_string();
}

CutOrder cut_compare(const FractionalIdealCut& a, const FractionalIdealCut& b) {
    if (a.ring.field != b.ring.field)
        throw RingMismatch("cut_compare: cuts on different fields");
    // inclusion is reversed relative to the bounds
    int c = ext_cmp(ext_of(a), ext_of(b));
    if (c == 0) return CutOrder::Equal;
    return c < 0 ? CutOrder::Greater : CutOrder::Less;
}

bool cut_subset(const FractionalIdealCut& a, const FractionalIdealCut& b) {
    return cut_compare(a, b) != CutOrder::Greater;
}

FractionalIdealCut cut_sum(const FractionalIdealCut& a, const FractionalIdealCut& b) {
    check_same_ring(a, b, "cut_sum");
    return cut_compare(a, b) == CutOrder::Less ? b : a;
}

FractionalIdealCut cut_product(const FractionalIdealCut& a, const FractionalIdealCut& b) {
    check_same_ring(a, b, "cut_product");
    if (a.is_zero_ideal() || b.is_zero_ideal()) return FractionalIdealCut::zero_ideal(a.ring);
    ExtBound ea = ext_of(a), eb = ext_of(b);
    std::int64_t first = ea.first + eb.first;
    if (ea.second_neg_inf || eb.second_neg_inf) {
        // products land in the stage-1 cut at the summed t-bound
        return FractionalIdealCut::at_least(a.ring, VGE::of(first), 1);
    }
    if (a.bound.rank() == 2)
        return FractionalIdealCut::at_least(a.ring, VGE::of(first, ea.second + eb.second), 2);
    return FractionalIdealCut::at_least(a.ring, VGE::of(first), a.stage);
}

FractionalIdealCut cut_radical(const FractionalIdealCut& a) {
    if (a.is_zero_ideal()) return a;
    if (!a.is_integral()) throw NotAnIdeal("radical of a fractional (negative) cut");
    if (!a.is_proper_nonzero()) throw NotAnIdeal("radical of the whole ring");
    if (a.bound.rank() == 2) {
        if (a.bound.first() > 0)
            // n * (0, m) never reaches (a1, *) with a1 >= 1: the radical is
            // the t-stage prime
            return FractionalIdealCut::at_least(a.ring, VGE::of(1), 1);
        return FractionalIdealCut::at_least(a.ring, VGE::of(0, 1), 2);
    }
    return FractionalIdealCut::at_least(a.ring, VGE::of(1), a.stage);
}

FractionalIdealCut cut_scaled(const FractionalIdealCut& a, const Element& x) {
    if (x.is_exact_zero()) throw ZeroInput("cut_scaled by zero");
    if (a.is_zero_ideal()) return a;
    if (a.bound.rank() == 2) return FractionalIdealCut::at_least(a.ring, a.bound + x.val(), 2);
    VGE shift;
    if (a.ring.field.kind == FieldKind::Composite) {
        ValuationRingRef tstage{a.ring.field, 1};
        shift = x.val_at(tstage);
    } else {
        shift = x.val_at(a.ring);
    }
    return FractionalIdealCut::at_least(a.ring, a.bound + shift, a.stage);
}

Element sample_in_cut(Sampler& s, const FractionalIdealCut& a, std::int64_t depth) {
    const FieldDescriptor& f = a.ring.field;
    if (a.is_zero_ideal()) return Element::zero(f);
    if (f.kind == FieldKind::Rationals) {
        // exact exponent control at the ring's own prime, small random
        // exponents elsewhere
        std::int64_t want = s.range(a.bound.as_integer(), a.bound.as_integer() + depth);
        BigRational x = s.rational(997);
        for (auto p : f.primes) {
            mpz_class pz(p);
            std::int64_t v = rational_valuation(x, pz);
            std::int64_t e = (p == a.ring.rational_prime() ? want : s.range(-2, 2)) - v;
            mpz_class pe;
            mpz_pow_ui(pe.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
            if (e >= 0)
                x *= BigRational(pe);
            else
                x /= BigRational(pe);
        }
        return Element::from_rational(f, x);
    }
    if (f.kind == FieldKind::Composite) {
        if (a.stage == 1 || a.bound.rank() == 1) {
            std::int64_t lo = a.bound.as_integer();
            return s.element(f, lo, lo + depth);
        }
        std::int64_t ta = a.bound.first(), qa = a.bound.second();
        if (s.coin()) {
            // t-valuation strictly above the bound: any leading coefficient
            return s.element(f, ta + 1, ta + depth);
        }
        // exact t-coordinate, q-coordinate at or above the bound
        FieldDescriptor qf = FieldDescriptor::qadic(f.q, f.precision);
        std::vector<Element> coef{s.element(qf, qa, qa + depth)};
        for (int i = 1; i < 6; ++i)
            coef.push_back(s.coin() ? Element::zero(qf) : s.element(qf, -2, 2));
        return Element::composite(f, ta, coef);
    }
    std::int64_t lo = a.bound.as_integer();
    return s.element(f, lo, lo + depth);
}

OnePlusIdealReport one_plus_ideal_group_check(const FractionalIdealCut& a, int trials,
                                              std::uint64_t seed) {
    if (!a.is_integral() || (!a.is_zero_ideal() && !a.is_proper_nonzero()))
        throw NotAnIdeal("one_plus_ideal_group_check needs a proper integral ideal");
    OnePlusIdealReport rep;
    rep.seed = seed;
    Sampler s(seed);
    const FieldDescriptor& f = a.ring.field;
    Element one = Element::one(f);
    for (int i = 0; i < trials; ++i) {
        Element x = sample_in_cut(s, a);
        Element y = sample_in_cut(s, a);
        ++rep.trials;
        Element prod = (one + x) * (one + y) - one;
        Element inv = (one + x).inverse() - one;
        bool ok = a.contains(prod) && a.contains(inv);
        if (!ok) {
            ++rep.failures;
            if (rep.counterexamples.size() < 4)
                rep.counterexamples.push_back("x=" + x.to_string() + " y=" + y.to_string());
        }
    }
    return rep;
}

} // namespace ogval
