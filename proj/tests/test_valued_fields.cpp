#include <doctest.h>

#include "ogval/element.hpp"
#include "ogval/hensel.hpp"
#include "ogval/sampling.hpp"

using namespace ogval;

namespace {
const FieldDescriptor Q5 = FieldDescriptor::qadic(5);
const FieldDescriptor Q2 = FieldDescriptor::qadic(2);
const FieldDescriptor Q3 = FieldDescriptor::qadic(3);
const FieldDescriptor L3 = FieldDescriptor::laurent(3, 1);
const FieldDescriptor C2 = FieldDescriptor::composite(2);
} // namespace

TEST_CASE("valuations of simple elements") {
    CHECK(Element::from_integer(Q5, 50).val() == VGE::of(2));
    CHECK(Element::zero(Q5).val().is_infinity());
    CHECK(Element::zero(L3).val().is_infinity());

    // t^-3 + t in F_3((t))
    Element t = Element::uniformizer(L3);
    Element x = t.pow(mpz_class(-3)) + t;
    CHECK(x.val() == VGE::of(-3));

    // val(2t) = (1,1) in Q_2((t))
    Element tt = Element::uniformizer(C2, 1);
    Element two = Element::from_integer(C2, 2);
    CHECK((two * tt).val() == VGE::of(1, 1));

    // rationals at 5
    FieldDescriptor q5r = FieldDescriptor::rationals({5});
    CHECK(Element::from_integer(q5r, 50).val() == VGE::of(2));
}

TEST_CASE("valuation laws v(xy) = v(x)+v(y), ultrametric inequality") {
    for (const FieldDescriptor& f : {Q5, Q2, L3, C2, FieldDescriptor::rationals({3})}) {
        Sampler s(42);
        for (int i = 0; i < 1000; ++i) {
            Element x = s.element(f, -6, 6);
            Element y = s.element(f, -6, 6);
            CHECK((x * y).val() == x.val() + y.val());
            Element sum = x + y;
            VGE lo = VGE::min(x.val(), y.val());
            if (sum.is_certified_nonzero()) {
                CHECK(sum.val() >= lo);
                if (x.val() != y.val()) CHECK(sum.val() == lo);
            } else {
                // full cancellation can only happen at equal valuations
                CHECK(x.val() == y.val());
            }
        }
    }
}

TEST_CASE("exact cancellation degrades loudly, never silently") {
    Element x = Sampler(7).element(Q5, 0, 0);
    Element d = x - x;
    CHECK_FALSE(d.is_exact_zero());
    CHECK(d.vanishes_to(Q5.precision)); // certified deep vanishing
    CHECK_THROWS_AS((void)d.val(), PrecisionExhausted);
    CHECK_THROWS_AS((void)d.inverse(), PrecisionExhausted);
}

TEST_CASE("residue maps") {
    CHECK(residue(Element::from_integer(Q5, 7)).finite_value() ==
          FFElem::from_integer(FFContext::get(5, 1), 2));
    Element t = Element::uniformizer(L3);
    CHECK(residue(Element::one(L3) + t).finite_value() ==
          FFElem::from_integer(FFContext::get(3, 1), 1));
    CHECK_THROWS_AS((void)residue(Element::from_rational(Q5, BigRational(1, 5))),
                    NegativeValuation);

    // composite: residue at the t-stage lands in Q_2
    Element x = Element::from_integer(C2, 3) + Element::uniformizer(C2, 1);
    ResidueElement r = residue_at(x, ValuationRingRef{C2, 1});
    CHECK_FALSE(r.is_finite_field());
    CHECK(r.element_value().val() == VGE::of(0));
    // and at the composite ring in F_2
    CHECK(residue(x).finite_value() == FFElem::from_integer(FFContext::get(2, 1), 1));
}

TEST_CASE("residue is a ring homomorphism on the valuation ring") {
    for (const FieldDescriptor& f : {Q5, Q3, L3}) {
        Sampler s(5);
        for (int i = 0; i < 1000; ++i) {
            Element x = s.element(f, 0, 4);
            Element y = s.element(f, 0, 4);
            CHECK(residue(x * y).finite_value() ==
                  residue(x).finite_value() * residue(y).finite_value());
            CHECK(residue(x + y).finite_value() ==
                  residue(x).finite_value() + residue(y).finite_value());
        }
    }
}

TEST_CASE("hensel lifting") {
    SUBCASE("y^2 - y - 5 over Q_5 from a0 = 1") {
        std::vector<Element> cs{Element::from_integer(Q5, -5), Element::from_integer(Q5, -1),
                                Element::one(Q5)};
        Polynomial<Element> fpoly(cs);
        Element r = hensel_lift(fpoly, Element::one(Q5), Q5.precision);
        CHECK((r - Element::one(Q5)).val() >= VGE::of(1)); // r = 1 (mod 5)
        CHECK(fpoly.eval(r).vanishes_to(Q5.precision));     // r^2 - r = 5 to precision
    }
    SUBCASE("y^2 - 2 over Q_5 has no simple root near units") {
        std::vector<Element> cs{Element::from_integer(Q5, -2), Element::zero(Q5),
                                Element::one(Q5)};
        Polynomial<Element> fpoly(cs);
        for (int a = 1; a < 5; ++a)
            CHECK_THROWS_AS((void)hensel_lift(fpoly, Element::from_integer(Q5, a), Q5.precision),
                            NoSimpleRoot);
    }
    SUBCASE("linear polynomial y - 3 over Q_3") {
        std::vector<Element> cs{Element::from_integer(Q3, -3), Element::one(Q3)};
        Element r = hensel_lift(Polynomial<Element>(cs), Element::zero(Q3), Q3.precision);
        CHECK((r - Element::from_integer(Q3, 3)).vanishes_to(Q3.precision));
    }
    SUBCASE("residual valuation reaches the target on random square lifts") {
        Sampler s(21);
        for (int i = 0; i < 200; ++i) {
            Element u = s.element(Q5, 0, 0);
            Element sq = u * u;
            std::vector<Element> cs{-sq, Element::zero(Q5), Element::one(Q5)};
            Polynomial<Element> fpoly(cs);
            Element r = hensel_lift(fpoly, u, Q5.precision);
            CHECK(fpoly.eval(r).vanishes_to(Q5.precision));
        }
    }
}

TEST_CASE("teichmuller representatives") {
    CHECK((teichmuller(Element::one(Q5)) - Element::one(Q5)).vanishes_to(Q5.precision));
    Element w = teichmuller(Element::from_integer(Q5, 2));
    CHECK((w.pow(mpz_class(4)) - Element::one(Q5)).vanishes_to(Q5.precision));
    CHECK((w - Element::from_integer(Q5, 2)).val() >= VGE::of(1)); // w = 2 (mod 5)
    // q = 2: the representative set is {1}
    CHECK((teichmuller(Element::from_integer(Q2, 3)) - Element::one(Q2)).vanishes_to(Q2.precision));

    SUBCASE("multiplicativity on random unit pairs") {
        Sampler s(17);
        for (int i = 0; i < 300; ++i) {
            Element u = s.unit(Q5), v = s.unit(Q5);
            Element lhs = teichmuller(u * v);
            Element rhs = teichmuller(u) * teichmuller(v);
            CHECK((lhs - rhs).vanishes_to(Q5.precision));
        }
    }
}

TEST_CASE("uniformizer decomposition") {
    auto [n, z] = uniformizer_decompose(Element::from_integer(Q5, 50));
    CHECK(n == VGE::of(2));
    CHECK((z - Element::from_integer(Q5, 2)).vanishes_to(Q5.precision));

    Element t = Element::uniformizer(L3);
    Element y = t.inverse() * (Element::one(L3) + t);
    auto [n2, z2] = uniformizer_decompose(y);
    CHECK(n2 == VGE::of(-1));
    CHECK((z2 - (Element::one(L3) + t)).vanishes_to(L3.precision));

    CHECK_THROWS_AS((void)uniformizer_decompose(Element::zero(Q5)), ZeroInput);

    SUBCASE("round trip reproduces y to precision") {
        for (const FieldDescriptor& f : {Q5, Q2, L3}) {
            Sampler s(3);
            for (int i = 0; i < 300; ++i) {
                Element y = s.element(f, -5, 5);
                auto [v, u] = uniformizer_decompose(y);
                Element back =
                    Element::uniformizer(f).pow(mpz_class(v.as_integer())) * u;
                CHECK((back - y).vanishes_to(v.as_integer() + f.precision - 1));
            }
        }
    }
    SUBCASE("composite two-uniformizer decomposition") {
        Sampler s(4);
        for (int i = 0; i < 100; ++i) {
            Element y = s.element(C2, -3, 3);
            auto [v, u] = uniformizer_decompose(y);
            CHECK(u.val() == VGE::of(0, 0));
            Element back = Element::uniformizer(C2, 1).pow(mpz_class(v.first())) *
                           Element::uniformizer(C2, 2).pow(mpz_class(v.second())) * u;
            // reconstruction agrees to the representable rank-2 precision
            CHECK((back - y).val_at_least(VGE::of(v.first(), v.second() + C2.precision - 8)));
        }
    }
}

TEST_CASE("element literals round-trip basic forms") {
    Element x = Element::qadic(Q5, -1, 7);
    CHECK(x.val() == VGE::of(-1));
    CHECK_THROWS_AS((void)Element::qadic(Q5, 0, 10), SemanticError); // 10 is not a 5-unit
    Element c = Element::composite(C2, 2, {Element::from_integer(FieldDescriptor::qadic(2), 3)});
    CHECK(c.val() == VGE::of(2, 0));
}
