#include "ogval/hensel.hpp"

namespace ogval {

Element hensel_lift(const Polynomial<Element>& f, const Element& a0, std::int64_t target) {
    Element a = a0;
    Element fa = f.eval(a);
    if (fa.vanishes_to(target)) return a;
    Polynomial<Element> fd = f.derivative();
    Element fpa = fd.eval(a);
    if (fpa.is_exact_zero() || fpa.is_fuzzy())
        throw NoSimpleRoot("hensel_lift: derivative vanishes at the start point");
    VGE va = fa.val();
    VGE vp = fpa.val();
    if (!(va > vp.scaled(2)))
        throw NoSimpleRoot("hensel_lift: Newton condition v(f(a0)) > 2 v(f'(a0)) fails (" +
                           va.to_string() + " vs 2*" + vp.to_string() + ")");
    // Newton iteration; the gap v(f(a)) - 2 v(f'(a)) doubles every round
    for (int round = 0; round < 200; ++round) {
        a = a - fa / fpa;
        fa = f.eval(a);
        if (fa.vanishes_to(target)) return a;
        fpa = fd.eval(a);
        VGE vnext = fa.val();
        if (!(vnext > va))
            throw PrecisionExhausted("hensel_lift: residual stopped improving at " +
                                     vnext.to_string());
        va = vnext;
    }
    throw PrecisionExhausted("hensel_lift: did not reach target precision");
}

Element teichmuller(const Element& u) {
    const FieldDescriptor& f = u.field();
    if (f.kind != FieldKind::QAdic)
        throw SemanticError("teichmuller: only defined on q-adic fields");
    if (u.is_exact_zero() || u.val() != VGE::of(0))
        throw SemanticError("teichmuller: argument must be a unit");
    if (f.q == 2) return Element::one(f);
    // u^{q^n} stabilizes one digit per step
    Element w = u;
    mpz_class q(f.q);
    for (int i = 0; i < f.precision; ++i) w = w.pow(q);
    return w;
}

std::pair<VGE, Element> uniformizer_decompose(const Element& y) {
    if (y.is_exact_zero()) throw ZeroInput("uniformizer_decompose(0)");
    const FieldDescriptor& f = y.field();
    VGE v = y.val();
    switch (f.kind) {
        case FieldKind::Rationals: {
            if (f.primes.empty()) throw Error("uniformizer_decompose: no attached prime");
            Element pi = Element::uniformizer(f);
            return {v, y * pi.pow(mpz_class(-v.as_integer()))};
        }
        case FieldKind::QAdic:
        case FieldKind::Laurent: {
            Element pi = Element::uniformizer(f);
            return {v, y * pi.pow(mpz_class(-v.as_integer()))};
        }
        case FieldKind::Composite: {
            // y = t^a q^b z with v(z) = (0,0)
            Element t = Element::uniformizer(f, 1);
            Element q = Element::uniformizer(f, 2);
            Element z = y * t.pow(mpz_class(-v.first())) * q.pow(mpz_class(-v.second()));
            return {v, z};
        }
    }
    throw Error("uniformizer_decompose: bad field");
}

} // namespace ogval
