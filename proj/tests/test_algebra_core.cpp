#include <doctest.h>

#include <numeric>

#include "ogval/finite_field.hpp"
#include "ogval/rational.hpp"
#include "ogval/sampling.hpp"
#include "ogval/value_group.hpp"

using namespace ogval;

TEST_CASE("value group lexicographic order") {
    CHECK(VGE::of(1, 0) > VGE::of(0, 99));
    CHECK(VGE::of(0, 3) == VGE::of(0, 3));
    CHECK(VGE::of(-1, 5) < VGE::of(0, -100));
    CHECK(VGE::of(7) < VGE::infinity());
    CHECK(VGE::of(1, 2) < VGE::infinity());
    CHECK(VGE::infinity() == VGE::infinity());
    CHECK_THROWS_AS((void)VGE::of(1).compare(VGE::of(1, 0)), RankMismatch);
}

TEST_CASE("value group arithmetic and infinity absorption") {
    CHECK(VGE::of(2, -1) + VGE::of(3, 4) == VGE::of(5, 3));
    CHECK((VGE::infinity() + VGE::of(5)).is_infinity());
    CHECK(-VGE::of(2, -1) == VGE::of(-2, 1));
    CHECK(VGE::of(1, 2).scaled(3) == VGE::of(3, 6));
    CHECK(VGE::of(0, 0).successor() == VGE::of(0, 1));
    CHECK(VGE::of(4).successor() == VGE::of(5));
}

TEST_CASE("value group order is total and translation invariant") {
    Sampler s(11);
    for (int i = 0; i < 1000; ++i) {
        VGE a = VGE::of(s.range(-9, 9), s.range(-9, 9));
        VGE b = VGE::of(s.range(-9, 9), s.range(-9, 9));
        VGE c = VGE::of(s.range(-9, 9), s.range(-9, 9));
        // antisymmetry
        if (a <= b && b <= a) CHECK(a == b);
        // transitivity
        if (a <= b && b <= c) CHECK(a <= c);
        // translation invariance
        if (a < b) CHECK(a + c < b + c);
    }
}

TEST_CASE("deterministic irreducible moduli") {
    CHECK(irreducible_modulus(3, 1).to_string() == "x");
    CHECK(irreducible_modulus(2, 2) == FpPolynomial{2, {1, 1, 1}});   // x^2+x+1
    CHECK(irreducible_modulus(3, 2) == FpPolynomial{3, {1, 0, 1}});   // x^2+1
    CHECK(fp_poly_is_irreducible(irreducible_modulus(2, 4)));
    CHECK(fp_poly_is_irreducible(irreducible_modulus(5, 3)));
    CHECK_FALSE(fp_poly_is_irreducible(FpPolynomial{2, {1, 0, 1}})); // (x+1)^2
}

TEST_CASE("prime field arithmetic mod 3") {
    auto f3 = FFContext::get(3, 1);
    FFElem two = FFElem::from_integer(f3, 2);
    CHECK((two + two) == FFElem::from_integer(f3, 1));
    CHECK(two.inverse() == two); // 2*2 = 4 = 1
    CHECK_THROWS_AS((void)FFElem::zero(f3).inverse(), DivisionByZero);
}

TEST_CASE("F_9 multiplication reduces by the modulus") {
    auto f9 = FFContext::get(3, 2);
    // u is the generator with u^2 + 1 = 0, so u*u = -1 = 2
    FFElem u = FiniteFieldElement(f9, {0, 1});
    CHECK((u * u) == FFElem::from_integer(f9, 2));
}

TEST_CASE("field mismatch is rejected") {
    auto f3 = FFContext::get(3, 1);
    auto f9 = FFContext::get(3, 2);
    CHECK_THROWS_AS((void)(FFElem::one(f3) + FFElem::one(f9)), FieldMismatch);
}

TEST_CASE("field axioms by sampling and Frobenius bijectivity by exhaustion") {
    for (auto [p, k] : {std::pair<std::uint32_t, int>{2, 2}, {3, 2}, {5, 1}, {3, 4}, {2, 4}}) {
        auto ctx = FFContext::get(p, k);
        Sampler s(1234 + p + static_cast<unsigned>(k));
        for (int i = 0; i < 300; ++i) {
            FFElem a = s.ff_any(ctx), b = s.ff_any(ctx), c = s.ff_any(ctx);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            if (!a.is_zero()) CHECK(a * a.inverse() == FFElem::one(ctx));
        }
        // Frobenius is a bijection: exhaust the whole field (order <= 81)
        if (ctx->order() <= 81) {
            std::vector<bool> hit(ctx->order(), false);
            for (std::uint64_t i = 0; i < ctx->order(); ++i) {
                auto img = FFElem::from_index(ctx, i).frobenius().index();
                CHECK_FALSE(hit[img]);
                hit[img] = true;
            }
        }
        // pth_root inverts Frobenius
        FFElem a = s.ff_any(ctx);
        CHECK(a.frobenius().pth_root() == a);
    }
}

TEST_CASE("trace lands in the prime field and is additive") {
    auto f9 = FFContext::get(3, 2);
    Sampler s(7);
    for (int i = 0; i < 100; ++i) {
        FFElem a = s.ff_any(f9), b = s.ff_any(f9);
        CHECK((a + b).trace() == (a.trace() + b.trace()) % 3);
    }
    CHECK(FFElem::one(f9).trace() == 2); // Tr(1) = 1 + 1 = 2 in F_3
}

namespace {

// independent naive fraction oracle: plain big-int arithmetic reduced by gcd
struct NaiveFrac {
    mpz_class n, d;
    void reduce() {
        mpz_class g = gcd(n, d);
        if (g != 0) {
            n /= g;
            d /= g;
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
    }
    static NaiveFrac add(NaiveFrac a, NaiveFrac b) {
        NaiveFrac r{a.n * b.d + b.n * a.d, a.d * b.d};
        r.reduce();
        return r;
    }
    static NaiveFrac mul(NaiveFrac a, NaiveFrac b) {
        NaiveFrac r{a.n * b.n, a.d * b.d};
        r.reduce();
        return r;
    }
};

} // namespace

TEST_CASE("rational arithmetic matches the naive oracle") {
    Sampler s(99);
    for (int i = 0; i < 1000; ++i) {
        BigRational a = s.rational(500), b = s.rational(500);
        NaiveFrac na{a.get_num(), a.get_den()}, nb{b.get_num(), b.get_den()};
        BigRational sum = a + b, prod = a * b;
        NaiveFrac nsum = NaiveFrac::add(na, nb), nprod = NaiveFrac::mul(na, nb);
        CHECK(sum.get_num() == nsum.n);
        CHECK(sum.get_den() == nsum.d);
        CHECK(prod.get_num() == nprod.n);
        CHECK(prod.get_den() == nprod.d);
        // canonicalization is idempotent
        BigRational c = sum;
        c.canonicalize();
        CHECK(c == sum);
    }
}

TEST_CASE("rational helpers") {
    CHECK(rational_valuation(BigRational(50), 5) == 2);
    CHECK(rational_valuation(BigRational(3, 8), 2) == -3);
    CHECK(rational_qth_root(BigRational(4), 2).value() == 2);
    CHECK(rational_qth_root(BigRational(-8), 3).value() == -2);
    CHECK_FALSE(rational_qth_root(BigRational(2), 2).has_value());
    CHECK_FALSE(rational_qth_root(BigRational(-4), 2).has_value());
    CHECK(smallest_prime_factor(mpz_class(91)).value() == 7);
}
