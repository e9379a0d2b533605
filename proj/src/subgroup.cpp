#include "ogval/subgroup.hpp"

#include <numeric>

#include "ogval/hensel.hpp"
#include "ogval/ideal_cut.hpp"
#include "ogval/polynomial.hpp"
#include "ogval/sampling.hpp"

namespace ogval {

SubgroupDescriptor SubgroupDescriptor::power(std::int64_t q) {
    if (!is_prime(mpz_class(q))) throw SemanticError("pow(q): q must be prime");
    SubgroupDescriptor g;
    g.variant = Variant::PowerGroup;
    g.q = q;
    return g;
}

SubgroupDescriptor SubgroupDescriptor::artin_schreier(std::int64_t p) {
    if (!is_prime(mpz_class(p))) throw SemanticError("as(p): p must be prime");
    SubgroupDescriptor g;
    g.variant = Variant::ArtinSchreier;
    g.q = p;
    return g;
}

SubgroupDescriptor SubgroupDescriptor::ideal(const FractionalIdealCut& cut) {
    SubgroupDescriptor g;
    g.variant = Variant::IdealGroup;
    g.cut = std::make_shared<const FractionalIdealCut>(cut);
    return g;
}

SubgroupDescriptor SubgroupDescriptor::oracle_group(
    std::function<std::optional<bool>(const Element&)> fn, bool multiplicative, std::string name) {
    SubgroupDescriptor g;
    g.variant = Variant::Oracle;
    g.oracle = std::move(fn);
    g.oracle_multiplicative = multiplicative;
    g.oracle_name = std::move(name);
    return g;
}

std::string SubgroupDescriptor::to_string() const {
    switch (variant) {
        case Variant::PowerGroup: return "pow(" + std::to_string(q) + ")";
        case Variant::ArtinSchreier: return "as(" + std::to_string(q) + ")";
        case Variant::IdealGroup: return "ideal(" + cut->to_string() + ")";
        case Variant::Oracle: return "oracle(" + oracle_name + ")";
    }
    return "?";
}

namespace {

// y^p on a Laurent element computed coefficientwise through Frobenius; in
// characteristic p this determines p*W - p + 1 output coefficients from W
// input coefficients, which generic truncated multiplication cannot see.
Element laurent_frobenius_pow(const Element& y) {
    const FieldDescriptor& f = y.field();
    const FpkSeries& s = y.laurent_payload();
    if (s.st == MagState::Zero) return y;
    if (s.st == MagState::Fuzzy)
        throw PrecisionExhausted("frobenius power of uncertified element");
    std::int64_t p = f.p;
    std::size_t out = std::min<std::size_t>(
        static_cast<std::size_t>(f.precision),
        static_cast<std::size_t>(p) * (s.coef.size() - 1) + 1);
    auto ctx = s.coef[0].context();
    std::vector<FFElem> coef(out, FFElem::zero(ctx));
    for (std::size_t j = 0; j < s.coef.size(); ++j) {
        std::size_t idx = static_cast<std::size_t>(p) * j;
        if (idx >= out) break;
        coef[idx] = s.coef[j].pow(static_cast<std::uint64_t>(p));
    }
    FieldDescriptor padded = f;
    Element r = Element::laurent(padded, s.val * p, std::move(coef));
    return r;
}

// q-th root of a in F_{p^k}^x, nullopt if none exists
std::optional<FFElem> ff_qth_root(const FFElem& a, std::int64_t q) {
    auto ctx = a.context();
    std::uint64_t m = ctx->order() - 1;
    std::uint64_t g = std::gcd<std::uint64_t>(static_cast<std::uint64_t>(q), m);
    if (a.pow(m / g) != FFElem::one(ctx)) return std::nullopt;
    if (g == 1) {
        // q invertible mod the group order
        std::uint64_t qi = 1, qq = static_cast<std::uint64_t>(q) % m;
        // extended Euclid on 64-bit
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(qq);
        while (newr != 0) {
            std::int64_t quo = r / newr;
            std::swap(t -= quo * newt, newt);
            std::swap(r -= quo * newr, newr);
        }
        if (t < 0) t += static_cast<std::int64_t>(m);
        qi = static_cast<std::uint64_t>(t);
        return a.pow(qi);
    }
    if (ctx->order() > (1u << 20))
        throw Error("ff_qth_root: field too large for exhaustive root search");
    for (std::uint64_t i = 1; i < ctx->order(); ++i) {
        FFElem y = FFElem::from_index(ctx, i);
        if (y.pow(static_cast<std::uint64_t>(q)) == a) return y;
    }
    return std::nullopt;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

MembershipVerdict qth_power_rationals(const Element& x, std::int64_t q) {
    const BigRational& r = x.rational_value();
    auto root = rational_qth_root(r, static_cast<unsigned>(q));
    if (root)
        return MembershipVerdict::member(Element::from_rational(x.field(), *root));
    if (r < 0 && q % 2 == 0)
        return MembershipVerdict::nonmember(NonMemberCertificate::Kind::ResidueClass,
                                            "negative rational, even exponent");
    // some prime must carry an exponent not divisible by q
    for (mpz_class n : {mpz_class(abs(r.get_num())), mpz_class(r.get_den())}) {
        while (n > 1) {
            auto p = smallest_prime_factor(n);
            std::int64_t e = int_valuation(n, *p);
            std::int64_t vr = rational_valuation(r, *p);
            if (vr % q != 0)
                return MembershipVerdict::nonmember(
                    NonMemberCertificate::Kind::Valuation,
                    "v_" + p->get_str() + "(x) = " + std::to_string(vr) +
                        " not divisible by " + std::to_string(q));
            mpz_class pe;
            mpz_pow_ui(pe.get_mpz_t(), p->get_mpz_t(), static_cast<unsigned long>(e));
            n /= pe;
        }
    }
    throw Error("qth_power_rationals: root test and factorization disagree");
}

MembershipVerdict qth_power_qadic(const Element& x, std::int64_t q) {
    const FieldDescriptor& f = x.field();
    std::int64_t qq = f.q;
    auto [v, u] = uniformizer_decompose(x);
    std::int64_t n = v.as_integer();
    if (mod_pos(n, q) != 0)
        return MembershipVerdict::nonmember(NonMemberCertificate::Kind::Valuation,
                                            "v(x) = " + std::to_string(n) +
                                                " not divisible by " + std::to_string(q));
    Element pi = Element::uniformizer(f);
    Element pi_part = pi.pow(mpz_class(n / q));
    if (q != qq) {
        // residue criterion + Hensel
        const FFElem r0 = residue(u).finite_value();
        auto y0 = ff_qth_root(r0, q);
        if (!y0)
            return MembershipVerdict::nonmember(
                NonMemberCertificate::Kind::ResidueClass,
                "residue " + r0.to_string() + " is not a " + std::to_string(q) +
                    "-th power mod " + std::to_string(qq));
        Element a0 = Element::from_integer(f, static_cast<std::int64_t>(y0->index()));
        std::vector<Element> cs(static_cast<std::size_t>(q) + 1, Element::zero(f));
        cs[0] = -u;
        cs[static_cast<std::size_t>(q)] = Element::one(f);
        Element y = hensel_lift(Polynomial<Element>(std::move(cs)), a0, f.precision);
        return MembershipVerdict::member(y * pi_part);
    }
    if (qq == 2) {
        // unit squares of Q_2 are exactly 1 mod 8
        mpz_class m8 = u.padic_payload().unit % 8;
        if (m8 != 1)
            return MembershipVerdict::nonmember(NonMemberCertificate::Kind::Mod8,
                                                "unit = " + m8.get_str() + " (mod 8), need 1");
        std::vector<Element> cs{-u, Element::zero(f), Element::one(f)};
        Element y = hensel_lift(Polynomial<Element>(std::move(cs)), Element::one(f), f.precision);
        return MembershipVerdict::member(y * pi_part);
    }
    // q = qq odd: split off the Teichmuller part; the 1-unit must be a q-th
    // power, i.e. congruent to 1 mod q^2
    Element w = teichmuller(u);
    Element u1 = u * w.inverse();
    Element diff = u1 - Element::one(f);
    if (!diff.vanishes_to(2)) {
        return MembershipVerdict::nonmember(
            NonMemberCertificate::Kind::ResidueClass,
            "1-unit part not congruent to 1 mod " + std::to_string(qq) + "^2");
    }
    // start point 1 + c q with (1+cq)^q = u1 mod q^3, then Newton
    Element y1;
    bool found = false;
    for (std::int64_t c = 0; c < qq && !found; ++c) {
        Element a0 = Element::one(f) + Element::from_integer(f, c) * Element::uniformizer(f);
        if ((a0.pow(mpz_class(q)) - u1).vanishes_to(3)) {
            std::vector<Element> cs(static_cast<std::size_t>(q) + 1, Element::zero(f));
            cs[0] = -u1;
            cs[static_cast<std::size_t>(q)] = Element::one(f);
            y1 = hensel_lift(Polynomial<Element>(std::move(cs)), a0, f.precision);
            found = true;
        }
    }
    if (!found) throw Error("qth_power_qadic: no Newton start point though criterion held");
    // w itself is its own q-th root: w^q = w
    return MembershipVerdict::member(w * y1 * pi_part);
}

MembershipVerdict qth_power_laurent(const Element& x, std::int64_t q) {
    const FieldDescriptor& f = x.field();
    auto [v, u] = uniformizer_decompose(x);
    std::int64_t n = v.as_integer();
    if (mod_pos(n, q) != 0)
        return MembershipVerdict::nonmember(NonMemberCertificate::Kind::Valuation,
                                            "v(x) = " + std::to_string(n) +
                                                " not divisible by " + std::to_string(q));
    Element pi_part = Element::uniformizer(f).pow(mpz_class(n / q));
    if (q != f.p) {
        const FFElem r0 = residue(u).finite_value();
        auto y0 = ff_qth_root(r0, q);
        if (!y0)
            return MembershipVerdict::nonmember(
                NonMemberCertificate::Kind::ResidueClass,
                "residue " + r0.to_string() + " is not a " + std::to_string(q) +
                    "-th power in the residue field");
        std::vector<FFElem> c0{*y0};
        Element a0 = Element::laurent(f, 0, std::move(c0));
        std::vector<Element> cs(static_cast<std::size_t>(q) + 1, Element::zero(f));
        cs[0] = -u;
        cs[static_cast<std::size_t>(q)] = Element::one(f);
        Element y = hensel_lift(Polynomial<Element>(std::move(cs)), a0, f.precision);
        return MembershipVerdict::member(y * pi_part);
    }
    // q = p: u is a p-th power iff every known coefficient at an index not
    // divisible by p vanishes; the root is coefficientwise Frobenius inverse
    const FpkSeries& s = u.laurent_payload();
    for (std::size_t i = 0; i < s.coef.size(); ++i) {
        if (i % static_cast<std::size_t>(f.p) != 0 && !s.coef[i].is_zero())
            return MembershipVerdict::nonmember(
                NonMemberCertificate::Kind::ResidueClass,
                "coefficient of t^" + std::to_string(static_cast<std::int64_t>(i)) +
                    " in the unit part is nonzero");
    }
    std::vector<FFElem> root;
    for (std::size_t j = 0; static_cast<std::size_t>(f.p) * j < s.coef.size(); ++j)
        root.push_back(s.coef[static_cast<std::size_t>(f.p) * j].pth_root());
    Element y = Element::laurent(f, 0, std::move(root));
    return MembershipVerdict::member(y * pi_part);
}

MembershipVerdict qth_power_composite(const Element& x, std::int64_t q) {
    const FieldDescriptor& f = x.field();
    VGE v = x.val();
    if (mod_pos(v.first(), q) != 0)
        return MembershipVerdict::nonmember(NonMemberCertificate::Kind::Valuation,
                                            "t-adic valuation " + std::to_string(v.first()) +
                                                " not divisible by " + std::to_string(q));
    if (mod_pos(v.second(), q) != 0)
        return MembershipVerdict::nonmember(NonMemberCertificate::Kind::Valuation,
                                            "q-adic valuation " + std::to_string(v.second()) +
                                                " not divisible by " + std::to_string(q));
    auto [vv, u] = uniformizer_decompose(x); // x = t^a qq^b u, v(u) = (0,0)
    Element c0 = u.composite_coefficient(0);
    MembershipVerdict inner = is_qth_power(c0, q);
    if (inner.is_nonmember()) {
        auto cert = *inner.certificate;
        cert.detail = "leading Q_" + std::to_string(f.q) + " coefficient: " + cert.detail;
        return MembershipVerdict{MembershipVerdict::Answer::NonMember, std::nullopt, cert, {}};
    }
    if (!inner.is_member()) return inner;
    // embed the coefficient root and lift the tail t-adically; v(f'(z0)) =
    // (0,1) at worst and the residual starts at t-valuation >= 1
    std::vector<Element> z0c{*inner.witness};
    Element z0 = Element::composite(f, 0, z0c);
    std::vector<Element> cs(static_cast<std::size_t>(q) + 1, Element::zero(f));
    cs[0] = -u;
    cs[static_cast<std::size_t>(q)] = Element::one(f);
    Element z = hensel_lift(Polynomial<Element>(std::move(cs)), z0, f.precision);
    Element t = Element::uniformizer(f, 1);
    Element qq = Element::uniformizer(f, 2);
    Element y = z * t.pow(mpz_class(v.first() / q)) * qq.pow(mpz_class(v.second() / q));
    return MembershipVerdict::member(y);
}

} // namespace

MembershipVerdict is_qth_power(const Element& x, std::int64_t q) {
    if (!is_prime(mpz_class(q))) throw SemanticError("is_qth_power: exponent must be prime");
    if (x.is_exact_zero()) throw ZeroInput("is_qth_power(0)");
    switch (x.field().kind) {
        case FieldKind::Rationals: return qth_power_rationals(x, q);
        case FieldKind::QAdic: return qth_power_qadic(x, q);
        case FieldKind::Laurent: return qth_power_laurent(x, q);
        case FieldKind::Composite: return qth_power_composite(x, q);
    }
    throw Error("is_qth_power: bad field");
}

MembershipVerdict artin_schreier_member(const Element& x0, std::int64_t p) {
    const FieldDescriptor& f = x0.field();
    if (f.kind != FieldKind::Laurent || f.p != p)
        throw SemanticError("artin_schreier_member needs a Laurent field of characteristic p");
    if (x0.is_exact_zero()) return MembershipVerdict::member(Element::zero(f));

    Element x = x0;
    Element y = Element::zero(f);
    // negative part: strip leading terms by exact Frobenius-inverse steps
    int guard = 16 * f.precision + 64;
    while (x.is_certified_nonzero() && x.val() < VGE::of(0)) {
        std::int64_t v = x.val().as_integer();
        if (mod_pos(v, p) != 0)
            return MembershipVerdict::nonmember(NonMemberCertificate::Kind::Valuation,
                                                "v(x) = " + std::to_string(v) +
                                                    " not divisible by " + std::to_string(p));
        FFElem c = x.laurent_payload().coef[0];
        std::vector<FFElem> cc{c.pth_root()};
        Element y0 = Element::laurent(f, v / p, std::move(cc));
        y = y + y0;
        x = x - (laurent_frobenius_pow(y0) - y0);
        if (--guard == 0) throw PrecisionExhausted("artin_schreier_member: reduction stalled");
    }
    if (!x.is_certified_nonzero() && !x.is_exact_zero()) {
        // remainder vanished below the certified window
        if (x.vanishes_to(1)) return MembershipVerdict::member(y);
        throw PrecisionExhausted("artin_schreier_member: remainder has uncertified valuation");
    }
    // constant term: solvable iff its absolute trace vanishes
    if (x.is_certified_nonzero() && x.val() == VGE::of(0)) {
        FFElem c0 = x.laurent_payload().coef[0];
        if (c0.trace() != 0)
            return MembershipVerdict::nonmember(
                NonMemberCertificate::Kind::Trace,
                "Tr(" + c0.to_string() + ") = " + std::to_string(c0.trace()) + " != 0 in F_" +
                    std::to_string(p));
        auto ctx = c0.context();
        bool found = false;
        for (std::uint64_t i = 0; i < ctx->order(); ++i) {
            FFElem a = FFElem::from_index(ctx, i);
            if (a.pow(static_cast<std::uint64_t>(p)) - a == c0) {
                std::vector<FFElem> cc{a};
                Element ya = Element::laurent(f, 0, std::move(cc));
                y = y + ya;
                x = x - (laurent_frobenius_pow(ya) - ya);
                found = true;
                break;
            }
        }
        if (!found) throw Error("artin_schreier_member: trace zero but no root found");
    }
    // positive part: y <- y^p - x converges t-adically
    if (!x.is_exact_zero()) {
        Element yp = Element::zero(f);
        for (int i = 0; i < f.precision + 2; ++i) yp = laurent_frobenius_pow(yp) - x;
        y = y + yp;
    }
    return MembershipVerdict::member(y);
}

MembershipVerdict subgroup_member(const Element& x, const SubgroupDescriptor& g) {
    switch (g.variant) {
        case SubgroupDescriptor::Variant::PowerGroup:
            if (x.is_exact_zero()) throw ZeroInput("multiplicative subgroup membership of 0");
            return is_qth_power(x, g.q);
        case SubgroupDescriptor::Variant::ArtinSchreier:
            return artin_schreier_member(x, g.q);
        case SubgroupDescriptor::Variant::IdealGroup:
            if (g.cut->contains(x)) return MembershipVerdict::member();
            return MembershipVerdict::nonmember(NonMemberCertificate::Kind::Cut,
                                                "v(x) below the cut " + g.cut->to_string());
        case SubgroupDescriptor::Variant::Oracle: {
            if (g.oracle_multiplicative && x.is_exact_zero())
                throw ZeroInput("multiplicative subgroup membership of 0");
            auto r = g.oracle(x);
            if (!r) return MembershipVerdict::unknown("oracle undecided");
            if (*r) return MembershipVerdict::member();
            return MembershipVerdict::nonmember(NonMemberCertificate::Kind::Oracle,
                                                "oracle " + g.oracle_name + " rejected");
        }
    }
    throw Error("subgroup_member: bad variant");
}

OrderingVerdict is_ordering(const ResidueFieldDesc& residue_field,
                            const std::function<MembershipVerdict(const Element&)>& member,
                            int budget, std::uint64_t seed) {
    if (residue_field.characteristic() > 0)
        return {OrderingVerdict::Answer::No,
                "positive characteristic " + std::to_string(residue_field.characteristic())};
    FieldDescriptor f = residue_field.kind == ResidueFieldDesc::Kind::QAdicField
                            ? FieldDescriptor::qadic(residue_field.p)
                            : residue_field.global_field;
    Sampler s(seed);
    std::vector<Element> members;
    for (int i = 0; i < budget; ++i) {
        Element x = residue_field.kind == ResidueFieldDesc::Kind::QAdicField
                        ? s.element(f, -3, 3)
                        : Element::from_rational(f, s.rational(40));
        if (x.is_exact_zero()) continue;
        MembershipVerdict in = member(x);
        MembershipVerdict in_neg = member(-x);
        if (in.is_nonmember() && in_neg.is_nonmember())
            return {OrderingVerdict::Answer::No,
                    "x = " + x.to_string() + ": neither x nor -x is in P"};
        if (in.is_member()) {
            members.push_back(x);
            // closure probes against earlier members
            for (const Element& m : members) {
                if (member(m + x).is_nonmember())
                    return {OrderingVerdict::Answer::No,
                            "closure: " + m.to_string() + " + " + x.to_string() + " left P"};
                if (member(m * x).is_nonmember())
                    return {OrderingVerdict::Answer::No,
                            "closure: " + m.to_string() + " * " + x.to_string() + " left P"};
            }
            if (members.size() > 12) members.resize(12);
        }
    }
    return {OrderingVerdict::Answer::Unknown, ""};
}

bool has_root_of_unity(const FieldDescriptor& k, std::int64_t q) {
    if (!is_prime(mpz_class(q))) throw SemanticError("has_root_of_unity: q must be prime");
    switch (k.kind) {
        case FieldKind::Rationals: return q == 2;
        case FieldKind::QAdic:
        case FieldKind::Composite: // convention: the t-adic residue field's constants
            return q == 2 || (k.q - 1) % q == 0;
        case FieldKind::Laurent: {
            mpz_class m = 1;
            for (int i = 0; i < k.k; ++i) m *= k.p;
            return mpz_class(m - 1) % q == 0;
        }
    }
    throw Error("has_root_of_unity: bad field");
}

bool verify_witness(const Element& x, const SubgroupDescriptor& g, const Element& witness) {
    std::int64_t target = std::max<std::int64_t>(4, x.field().precision / 2);
    if (g.variant == SubgroupDescriptor::Variant::PowerGroup) {
        if (x.field().kind == FieldKind::Rationals)
            return witness.pow(mpz_class(g.q)).rational_value() == x.rational_value();
        Element lhs = x.field().kind == FieldKind::Laurent && g.q == x.field().p
                          ? laurent_frobenius_pow(witness)
                          : witness.pow(mpz_class(g.q));
        return (lhs - x).vanishes_to(target);
    }
    if (g.variant == SubgroupDescriptor::Variant::ArtinSchreier) {
        Element lhs = laurent_frobenius_pow(witness) - witness;
        return (lhs - x).vanishes_to(target);
    }
    return true;
}

} // namespace ogval
