#include <doctest.h>

#include "ogval/ideal_cut.hpp"
#include "ogval/sampling.hpp"
#include "ogval/subgroup.hpp"

using namespace ogval;

namespace {
const FieldDescriptor Q5 = FieldDescriptor::qadic(5);
const FieldDescriptor Q2 = FieldDescriptor::qadic(2);
const FieldDescriptor Q3 = FieldDescriptor::qadic(3);
const FieldDescriptor L2 = FieldDescriptor::laurent(2, 1);
const FieldDescriptor L3 = FieldDescriptor::laurent(3, 1);
const FieldDescriptor L9 = FieldDescriptor::laurent(3, 2);
const FieldDescriptor C2 = FieldDescriptor::composite(2);
} // namespace

TEST_CASE("q-th powers in Q_5") {
    CHECK(is_qth_power(Element::from_integer(Q5, 4), 2).is_member());
    auto v = is_qth_power(Element::from_integer(Q5, 2), 2);
    CHECK(v.is_nonmember());
    CHECK(v.certificate->kind == NonMemberCertificate::Kind::ResidueClass);
    // squares mod 5 are {1,4}: 4 has witness 2 or 3
    auto w = is_qth_power(Element::from_integer(Q5, 4), 2);
    CHECK(verify_witness(Element::from_integer(Q5, 4), SubgroupDescriptor::power(2), *w.witness));
}

TEST_CASE("q-th powers in Q_2 use the mod-8 criterion") {
    auto m = is_qth_power(Element::from_integer(Q2, 17), 2);
    CHECK(m.is_member());
    CHECK(verify_witness(Element::from_integer(Q2, 17), SubgroupDescriptor::power(2), *m.witness));
    auto n = is_qth_power(Element::from_integer(Q2, 3), 2);
    CHECK(n.is_nonmember());
    CHECK(n.certificate->kind == NonMemberCertificate::Kind::Mod8);
    // valuation obstruction
    auto o = is_qth_power(Element::from_integer(Q2, 8), 2);
    CHECK(o.is_nonmember());
    CHECK(o.certificate->kind == NonMemberCertificate::Kind::Valuation);
}

TEST_CASE("q-th powers in Q_q for odd q = q'") {
    // 1+q is never a q-th power; 1+q^2 x is
    auto n = is_qth_power(Element::from_integer(Q5, 6), 5);
    CHECK(n.is_nonmember());
    auto m = is_qth_power(Element::from_integer(Q5, 26), 5); // 1 + 25
    CHECK(m.is_member());
    CHECK(verify_witness(Element::from_integer(Q5, 26), SubgroupDescriptor::power(5), *m.witness));
    auto t = is_qth_power(Element::from_integer(Q3, 10), 3); // 1 + 9
    CHECK(t.is_member());
}

TEST_CASE("squares and cubes in Laurent fields, q != p") {
    Element t = Element::uniformizer(L3);
    Element x = (Element::one(L3) + t) * (Element::one(L3) + t); // (1+t)^2
    auto m = is_qth_power(x, 2);
    CHECK(m.is_member());
    CHECK(verify_witness(x, SubgroupDescriptor::power(2), *m.witness));
    // residue 2 is not a square mod 3
    auto n = is_qth_power(Element::from_integer(L3, 2) + t, 2);
    CHECK(n.is_nonmember());
    CHECK(n.certificate->kind == NonMemberCertificate::Kind::ResidueClass);
    // in F_9 every element is a square times possibly x: squares are half the units
    Element u9 = Element::from_integer(L9, 2);
    auto v9 = is_qth_power(u9, 2);
    // 2 = -1 in F_9^x which is cyclic of order 8: -1 = g^4 is a square
    CHECK(v9.is_member());
}

TEST_CASE("p-th powers in char p go through coefficient support") {
    Element t = Element::uniformizer(L3);
    Element y = Element::one(L3) + t;
    Element x = y * y * y; // (1+t)^3 = 1 + t^3
    auto m = is_qth_power(x, 3);
    CHECK(m.is_member());
    CHECK(verify_witness(x, SubgroupDescriptor::power(3), *m.witness));
    auto n = is_qth_power(Element::one(L3) + t, 3);
    CHECK(n.is_nonmember());
    CHECK(n.certificate->kind == NonMemberCertificate::Kind::ResidueClass);
}

TEST_CASE("squares in the composite field") {
    Element t = Element::uniformizer(C2, 1);
    Element two = Element::uniformizer(C2, 2);
    // 2t has valuation (1,1): both coordinates odd
    auto n = is_qth_power(two * t, 2);
    CHECK(n.is_nonmember());
    CHECK(n.certificate->kind == NonMemberCertificate::Kind::Valuation);
    // (3(1+t))^2 is a square with witness
    Element y = Element::from_integer(C2, 3) * (Element::one(C2) + t);
    Element x = y * y;
    auto m = is_qth_power(x, 2);
    CHECK(m.is_member());
    // 3 is not a square unit in Q_2, so 9*3 = 27 fails at the leading coefficient
    auto n2 = is_qth_power(Element::from_integer(C2, 3), 2);
    CHECK(n2.is_nonmember());
    CHECK(n2.certificate->kind == NonMemberCertificate::Kind::ResidueClass);
}

TEST_CASE("artin-schreier membership in F_2((t))") {
    Element t = Element::uniformizer(L2);
    auto m = artin_schreier_member(t, 2);
    CHECK(m.is_member());
    // witness solves y^2 + y = t: y = t + t^2 + t^4 + ...
    CHECK(verify_witness(t, SubgroupDescriptor::artin_schreier(2), *m.witness));
    auto n = artin_schreier_member(t.inverse(), 2);
    CHECK(n.is_nonmember());
    CHECK(n.certificate->kind == NonMemberCertificate::Kind::Valuation);
}

TEST_CASE("artin-schreier membership in F_3((t))") {
    CHECK(artin_schreier_member(Element::zero(L3), 3).is_member());
    auto n = artin_schreier_member(Element::one(L3), 3);
    CHECK(n.is_nonmember());
    CHECK(n.certificate->kind == NonMemberCertificate::Kind::Trace);
    // negative part reduces exactly: x = t^{-3} + t^{-1} has 3 | -3 but then
    // the t^{-1} term obstructs
    Element t = Element::uniformizer(L3);
    auto n2 = artin_schreier_member(t.pow(mpz_class(-3)) + t.inverse(), 3);
    CHECK(n2.is_nonmember());
    CHECK(n2.certificate->kind == NonMemberCertificate::Kind::Valuation);
    // while t^{-3} + t is a member: reduce then recurse on t
    auto m = artin_schreier_member(t.pow(mpz_class(-3)) + t, 3);
    CHECK(m.is_member());
    CHECK(verify_witness(t.pow(mpz_class(-3)) + t, SubgroupDescriptor::artin_schreier(3),
                         *m.witness));
}

TEST_CASE("artin-schreier in an extension field uses the absolute trace") {
    // in F_9 the absolute trace of a generator u with u^2 = -1: Tr(u) = u + u^3 = u - u = 0
    auto ctx = FFContext::get(3, 2);
    FFElem u = FiniteFieldElement(ctx, {0, 1});
    CHECK(u.trace() == 0);
    Element xu = Element::laurent(L9, 0, {u});
    CHECK(artin_schreier_member(xu, 3).is_member());
    CHECK(FFElem::one(ctx).trace() == 2); // Tr(1) = 2 != 0
    Element x1 = Element::one(L9);
    CHECK(artin_schreier_member(x1, 3).is_nonmember());
}

TEST_CASE("subgroup dispatch") {
    ValuationRingRef ring{L3, 1};
    auto cut = FractionalIdealCut::whole_ring(ring);
    Element t = Element::uniformizer(L3);
    CHECK(subgroup_member(t * t, SubgroupDescriptor::ideal(cut)).is_member());
    CHECK(subgroup_member(t.inverse(), SubgroupDescriptor::ideal(cut)).is_nonmember());
    CHECK(subgroup_member(Element::from_integer(Q2, 8), SubgroupDescriptor::power(2))
              .is_nonmember());
    auto always = SubgroupDescriptor::oracle_group(
        [](const Element&) { return std::optional<bool>(true); }, true, "all");
    CHECK(subgroup_member(Element::from_integer(Q2, 7), always).is_member());
    auto undecided = SubgroupDescriptor::oracle_group(
        [](const Element&) { return std::optional<bool>(); }, true, "none");
    CHECK(subgroup_member(Element::from_integer(Q2, 7), undecided).is_unknown());
    CHECK_THROWS_AS((void)subgroup_member(Element::zero(Q2), SubgroupDescriptor::power(2)),
                    ZeroInput);
}

TEST_CASE("group laws by sampling for the decidable families") {
    SUBCASE("multiplicative: squares of Q_5") {
        Sampler s(31);
        int checked = 0;
        while (checked < 300) {
            Element a = s.element(Q5, -3, 3);
            Element x = a * a;
            Element b = s.element(Q5, -3, 3);
            Element y = b * b;
            CHECK(is_qth_power(x * y, 2).is_member());
            CHECK(is_qth_power(x.inverse(), 2).is_member());
            ++checked;
        }
    }
    SUBCASE("additive: artin-schreier group of F_2((t))") {
        Sampler s(32);
        for (int i = 0; i < 200; ++i) {
            Element a = s.element(L2, -4, 4);
            Element b = s.element(L2, -4, 4);
            // y^p - y images are members by construction
            Element x = (a * a) - a;
            Element y = (b * b) - b;
            if (!(x + y).is_certified_nonzero() && !(x + y).is_exact_zero()) continue;
            CHECK(artin_schreier_member(x + y, 2).is_member());
            CHECK(artin_schreier_member(-x, 2).is_member());
        }
    }
}

TEST_CASE("witness soundness on random members") {
    Sampler s(33);
    for (int i = 0; i < 200; ++i) {
        Element a = s.element(Q2, -2, 2);
        Element x = a * a;
        auto v = is_qth_power(x, 2);
        REQUIRE(v.is_member());
        CHECK(verify_witness(x, SubgroupDescriptor::power(2), *v.witness));
    }
}

namespace {

// brute-force oracle over Q: enumerate candidate roots of bounded height
bool q_root_by_enumeration(const BigRational& x, int q, std::int64_t hmax) {
    for (std::int64_t c = 0; c <= hmax; ++c)
        for (std::int64_t d = 1; d <= hmax; ++d) {
            BigRational y(c, d);
            y.canonicalize();
            for (BigRational cand : {y, BigRational(-y)}) {
                BigRational p = 1;
                for (int i = 0; i < q; ++i) p *= cand;
                if (p == x) return true;
            }
        }
    return false;
}

// brute-force oracle in F_p((t)): exhaustive search over series with at most
// six coefficients, compared at a fixed truncation depth
bool as_by_exhaustion(const Element& x, std::int64_t p) {
    const FieldDescriptor& f = x.field();
    auto ctx = FFContext::get(static_cast<std::uint32_t>(p), 1);
    std::uint64_t pow6 = 1;
    for (int i = 0; i < 6; ++i) pow6 *= static_cast<std::uint64_t>(p);
    for (std::int64_t lo = -4; lo <= 2; ++lo) {
        for (std::uint64_t mask = 0; mask < pow6; ++mask) {
            std::uint64_t m = mask;
            std::vector<FFElem> coef;
            for (int i = 0; i < 6; ++i) {
                coef.push_back(FFElem::from_index(ctx, m % static_cast<std::uint64_t>(p)));
                m /= static_cast<std::uint64_t>(p);
            }
            Element y = Element::laurent(f, lo, coef);
            Element r = y.pow(mpz_class(p)) - y - x;
            if (r.is_exact_zero() || r.vanishes_to(3)) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("q-th power decision agrees with bounded enumeration over Q") {
    FieldDescriptor f = FieldDescriptor::rationals({2, 3});
    for (int q : {2, 3}) {
        for (std::int64_t a = 1; a <= 50; ++a)
            for (std::int64_t b = 1; b <= 50; ++b) {
                BigRational x(a, b);
                x.canonicalize();
                for (BigRational v : {x, BigRational(-x)}) {
                    bool lib = is_qth_power(Element::from_rational(f, v), q).is_member();
                    // roots of height-50 rationals have numerator/denominator <= 8
                    bool oracle = q_root_by_enumeration(v, q, 8);
                    CHECK(lib == oracle);
                }
            }
    }
}

TEST_CASE("artin-schreier decision agrees with 6-coefficient exhaustion") {
    for (std::int64_t p : {std::int64_t(2), std::int64_t(3)}) {
        FieldDescriptor f = FieldDescriptor::laurent(p, 1);
        auto ctx = FFContext::get(static_cast<std::uint32_t>(p), 1);
        Sampler s(17 + static_cast<std::uint64_t>(p));
        int done = 0;
        while (done < 60) {
            // small-support x so the truncated exhaustion is meaningful
            std::vector<FFElem> coef;
            for (int i = 0; i < 4; ++i)
                coef.push_back(FFElem::from_index(ctx, s.next() % static_cast<std::uint64_t>(p)));
            Element x = Element::laurent(f, s.range(-3, 1), coef);
            if (x.is_exact_zero()) continue;
            if (!x.is_certified_nonzero()) continue;
            bool lib = artin_schreier_member(x, p).is_member();
            bool oracle = as_by_exhaustion(x, p);
            CAPTURE(x.to_string());
            CHECK(lib == oracle);
            ++done;
        }
    }
}

TEST_CASE("roots of unity inventory") {
    CHECK(has_root_of_unity(Q5, 2));
    CHECK_FALSE(has_root_of_unity(Q2, 3));
    CHECK(has_root_of_unity(L9, 2));      // 2 | 9-1
    CHECK(has_root_of_unity(FieldDescriptor::laurent(3, 2), 2));
    CHECK_FALSE(has_root_of_unity(L3, 3)); // no p-th roots of unity in char p
    CHECK(has_root_of_unity(FieldDescriptor::qadic(7), 3)); // 3 | 6
    CHECK(has_root_of_unity(C2, 2));
    CHECK_FALSE(has_root_of_unity(C2, 5));
    CHECK(has_root_of_unity(FieldDescriptor::rationals({2}), 2));
}

TEST_CASE("ordering detector") {
    // positive characteristic: never an ordering
    ResidueFieldDesc f9{ResidueFieldDesc::Kind::Finite, 3, 2, {}};
    auto v = is_ordering(f9, [](const Element&) { return MembershipVerdict::member(); }, 10, 1);
    CHECK(v.answer == OrderingVerdict::Answer::No);

    // squares of Q are no ordering: 2 and -2 both fail
    ResidueFieldDesc qq{ResidueFieldDesc::Kind::Global, 0, 1, FieldDescriptor::rationals({})};
    auto sq = is_ordering(
        qq, [](const Element& x) { return is_qth_power(x, 2); }, 200, 1);
    CHECK(sq.answer == OrderingVerdict::Answer::No);

    // a genuine positive cone stays Unknown at any finite budget
    auto pos = is_ordering(
        qq,
        [](const Element& x) {
            if (x.rational_value() > 0) return MembershipVerdict::member();
            return MembershipVerdict::nonmember(NonMemberCertificate::Kind::Oracle, "negative");
        },
        200, 1);
    CHECK(pos.answer == OrderingVerdict::Answer::Unknown);
}
