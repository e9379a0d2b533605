#include "ogval/element.hpp"

#include <algorithm>

namespace ogval {

namespace {

mpz_class mpz_pow_ui(const mpz_class& b, unsigned long e) {
    mpz_class r;
    ::mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

mpz_class mod_positive(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DivisionByZero("inverse of non-unit");
    return r;
}

// ---------------------------------------------------------------------- q-adic

struct PadicCtx {
    mpz_class q;
    int N;
};

Padic p_zero() { return Padic{}; }

Padic p_nonzero(std::int64_t val, mpz_class unit, int digits) {
    Padic x;
    x.st = MagState::Nonzero;
    x.val = val;
    x.unit = std::move(unit);
    x.digits = digits;
    return x;
}

Padic p_fuzzy(std::int64_t bound) {
    Padic x;
    x.st = MagState::Fuzzy;
    x.bound = bound;
    return x;
}

Padic p_from_mpz(const PadicCtx& c, const mpz_class& n) {
    if (n == 0) return p_zero();
    std::int64_t v = int_valuation(n, c.q);
    mpz_class u = n / mpz_pow_ui(c.q, static_cast<unsigned long>(v));
    return p_nonzero(v, mod_positive(u, mpz_pow_ui(c.q, static_cast<unsigned long>(c.N))), c.N);
}

Padic p_from_mpq(const PadicCtx& c, const BigRational& x) {
    if (x == 0) return p_zero();
    mpz_class num = x.get_num(), den = x.get_den();
    std::int64_t v = int_valuation(num, c.q) - int_valuation(den, c.q);
    mpz_class rest;
    mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), c.q.get_mpz_t());
    mpz_class nu = rest;
    mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), c.q.get_mpz_t());
    mpz_class du = rest;
    mpz_class m = mpz_pow_ui(c.q, static_cast<unsigned long>(c.N));
    mpz_class u = mod_positive(nu * inv_mod(mod_positive(du, m), m), m);
    return p_nonzero(v, u, c.N);
}

Padic p_add(const PadicCtx& c, const Padic& a, const Padic& b) {
    if (a.st == MagState::Zero) return b;
    if (b.st == MagState::Zero) return a;
    if (a.st == MagState::Fuzzy && b.st == MagState::Fuzzy)
        return p_fuzzy(std::min(a.bound, b.bound));
    if (a.st == MagState::Fuzzy || b.st == MagState::Fuzzy) {
        const Padic& f = a.st == MagState::Fuzzy ? a : b;
        const Padic& n = a.st == MagState::Fuzzy ? b : a;
        if (n.val <= f.bound) {
            int digits = static_cast<int>(
                std::min<std::int64_t>(n.digits, f.bound - n.val + 1));
            mpz_class m = mpz_pow_ui(c.q, static_cast<unsigned long>(digits));
            return p_nonzero(n.val, mod_positive(n.unit, m), digits);
        }
        return p_fuzzy(f.bound);
    }
    const Padic& lo = a.val <= b.val ? a : b;
    const Padic& hi = a.val <= b.val ? b : a;
    std::int64_t s = hi.val - lo.val;
    if (s == 0) {
        int D = std::min(lo.digits, hi.digits);
        mpz_class m = mpz_pow_ui(c.q, static_cast<unsigned long>(D));
        mpz_class u = mod_positive(lo.unit + hi.unit, m);
        if (u == 0) return p_fuzzy(lo.val + D - 1);
        std::int64_t cshift = int_valuation(u, c.q);
        mpz_class u2 = u / mpz_pow_ui(c.q, static_cast<unsigned long>(cshift));
        return p_nonzero(lo.val + cshift, u2, D - static_cast<int>(cshift));
    }
    std::int64_t Dl = std::min<std::int64_t>(lo.digits, s + hi.digits);
    int D = static_cast<int>(Dl);
    mpz_class m = mpz_pow_ui(c.q, static_cast<unsigned long>(D));
    mpz_class u = lo.unit;
    if (s < D) u += mpz_pow_ui(c.q, static_cast<unsigned long>(s)) * hi.unit;
    return p_nonzero(lo.val, mod_positive(u, m), D);
}

Padic p_neg(const PadicCtx& c, const Padic& a) {
    if (a.st != MagState::Nonzero) return a;
    mpz_class m = mpz_pow_ui(c.q, static_cast<unsigned long>(a.digits));
    return p_nonzero(a.val, mod_positive(-a.unit, m), a.digits);
}

Padic p_mul(const PadicCtx& c, const Padic& a, const Padic& b) {
    if (a.st == MagState::Zero || b.st == MagState::Zero) return p_zero();
    if (a.st == MagState::Fuzzy && b.st == MagState::Fuzzy)
        return p_fuzzy(a.bound + b.bound + 1);
    if (a.st == MagState::Fuzzy || b.st == MagState::Fuzzy) {
        const Padic& f = a.st == MagState::Fuzzy ? a : b;
        const Padic& n = a.st == MagState::Fuzzy ? b : a;
        return p_fuzzy(f.bound + n.val);
    }
    int D = std::min(a.digits, b.digits);
    mpz_class m = mpz_pow_ui(c.q, static_cast<unsigned long>(D));
    return p_nonzero(a.val + b.val, mod_positive(a.unit * b.unit, m), D);
}

Padic p_inv(const PadicCtx& c, const Padic& a) {
    if (a.st == MagState::Zero) throw DivisionByZero("inverse of 0");
    if (a.st == MagState::Fuzzy)
        throw PrecisionExhausted("inverse of element with uncertified valuation");
    mpz_class m = mpz_pow_ui(c.q, static_cast<unsigned long>(a.digits));
    return p_nonzero(-a.val, inv_mod(a.unit, m), a.digits);
}

// ------------------------------------------------------- Laurent over F_{p^k}

struct SeriesCtx {
    std::shared_ptr<const FFContext> ff;
    int N;
};

FpkSeries s_zero() { return FpkSeries{}; }

FpkSeries s_fuzzy(std::int64_t bound) {
    FpkSeries x;
    x.st = MagState::Fuzzy;
    x.bound = bound;
    return x;
}

FpkSeries s_make(std::int64_t val, std::vector<FFElem> coef) {
    // strip exact leading zeros; empty window means full cancellation
    std::size_t lead = 0;
    while (lead < coef.size() && coef[lead].is_zero()) ++lead;
    if (lead == coef.size())
        return s_fuzzy(val + static_cast<std::int64_t>(coef.size()) - 1);
    FpkSeries x;
    x.st = MagState::Nonzero;
    x.val = val + static_cast<std::int64_t>(lead);
    x.coef.assign(coef.begin() + static_cast<std::ptrdiff_t>(lead), coef.end());
    return x;
}

FpkSeries s_add(const SeriesCtx& c, const FpkSeries& a, const FpkSeries& b) {
    if (a.st == MagState::Zero) return b;
    if (b.st == MagState::Zero) return a;
    if (a.st == MagState::Fuzzy && b.st == MagState::Fuzzy)
        return s_fuzzy(std::min(a.bound, b.bound));
    if (a.st == MagState::Fuzzy || b.st == MagState::Fuzzy) {
        const FpkSeries& f = a.st == MagState::Fuzzy ? a : b;
        const FpkSeries& n = a.st == MagState::Fuzzy ? b : a;
        if (n.val <= f.bound) {
            std::size_t window = static_cast<std::size_t>(
                std::min<std::int64_t>(static_cast<std::int64_t>(n.coef.size()),
                                       f.bound - n.val + 1));
            FpkSeries r;
            r.st = MagState::Nonzero;
            r.val = n.val;
            r.coef.assign(n.coef.begin(), n.coef.begin() + static_cast<std::ptrdiff_t>(window));
            return r;
        }
        return s_fuzzy(f.bound);
    }
    const FpkSeries& lo = a.val <= b.val ? a : b;
    const FpkSeries& hi = a.val <= b.val ? b : a;
    std::int64_t s = hi.val - lo.val;
    std::int64_t D = std::min<std::int64_t>(static_cast<std::int64_t>(lo.coef.size()),
                                            s + static_cast<std::int64_t>(hi.coef.size()));
    std::vector<FFElem> coef;
    coef.reserve(static_cast<std::size_t>(D));
    for (std::int64_t i = 0; i < D; ++i) {
        FFElem x = i < static_cast<std::int64_t>(lo.coef.size())
                       ? lo.coef[static_cast<std::size_t>(i)]
                       : FFElem::zero(c.ff);
        if (i >= s && i - s < static_cast<std::int64_t>(hi.coef.size()))
            x = x + hi.coef[static_cast<std::size_t>(i - s)];
        coef.push_back(std::move(x));
    }
    return s_make(lo.val, std::move(coef));
}

FpkSeries s_neg(const SeriesCtx&, const FpkSeries& a) {
    if (a.st != MagState::Nonzero) return a;
    FpkSeries r = a;
    for (auto& x : r.coef) x = -x;
    return r;
}

FpkSeries s_mul(const SeriesCtx& c, const FpkSeries& a, const FpkSeries& b) {
    if (a.st == MagState::Zero || b.st == MagState::Zero) return s_zero();
    if (a.st == MagState::Fuzzy && b.st == MagState::Fuzzy)
        return s_fuzzy(a.bound + b.bound + 1);
    if (a.st == MagState::Fuzzy || b.st == MagState::Fuzzy) {
        const FpkSeries& f = a.st == MagState::Fuzzy ? a : b;
        const FpkSeries& n = a.st == MagState::Fuzzy ? b : a;
        return s_fuzzy(f.bound + n.val);
    }
    std::size_t D = std::min({a.coef.size(), b.coef.size(), static_cast<std::size_t>(c.N)});
    std::vector<FFElem> coef(D, FFElem::zero(c.ff));
    for (std::size_t i = 0; i < a.coef.size() && i < D; ++i) {
        if (a.coef[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coef.size() && i + j < D; ++j)
            coef[i + j] = coef[i + j] + a.coef[i] * b.coef[j];
    }
    FpkSeries r;
    r.st = MagState::Nonzero;
    r.val = a.val + b.val;
    r.coef = std::move(coef);
    return r;
}

FpkSeries s_inv(const SeriesCtx& c, const FpkSeries& a) {
    if (a.st == MagState::Zero) throw DivisionByZero("inverse of 0");
    if (a.st == MagState::Fuzzy)
        throw PrecisionExhausted("inverse of element with uncertified valuation");
    std::size_t D = a.coef.size();
    std::vector<FFElem> b(D, FFElem::zero(c.ff));
    FFElem c0i = a.coef[0].inverse();
    b[0] = c0i;
    for (std::size_t n = 1; n < D; ++n) {
        FFElem acc = FFElem::zero(c.ff);
        for (std::size_t i = 1; i <= n; ++i)
            if (i < a.coef.size()) acc = acc + a.coef[i] * b[n - i];
        b[n] = -(c0i * acc);
    }
    FpkSeries r;
    r.st = MagState::Nonzero;
    r.val = -a.val;
    r.coef = std::move(b);
    return r;
}

// ------------------------------------------------ Laurent over Q_q (composite)

struct CompCtx {
    PadicCtx pc;
    int N; // t-coefficient window
};

PadicSeries ps_zero() { return PadicSeries{}; }

PadicSeries ps_fuzzy(std::int64_t bt, std::optional<std::int64_t> bq) {
    PadicSeries x;
    x.st = MagState::Fuzzy;
    x.bound_t = bt;
    x.bound_q = bq;
    return x;
}

// lexicographic minimum of fuzzy bounds; absent second coordinate = +infinity
void bound_min(std::int64_t& bt, std::optional<std::int64_t>& bq, std::int64_t ct,
               std::optional<std::int64_t> cq) {
    if (ct < bt) {
        bt = ct;
        bq = cq;
    } else if (ct == bt) {
        if (!cq) return;           // (ct, +inf) is the weaker constraint? no: larger bound
        if (!bq || *cq < *bq) bq = cq;
    }
}

PadicSeries ps_make(std::int64_t tval, std::vector<Padic> coef) {
    std::size_t lead = 0;
    while (lead < coef.size() && coef[lead].st == MagState::Zero) ++lead;
    tval += static_cast<std::int64_t>(lead);
    coef.erase(coef.begin(), coef.begin() + static_cast<std::ptrdiff_t>(lead));
    if (coef.empty()) return ps_fuzzy(tval - 1, std::nullopt);
    if (coef[0].st == MagState::Nonzero) {
        PadicSeries r;
        r.st = MagState::Nonzero;
        r.tval = tval;
        r.coef = std::move(coef);
        return r;
    }
    // leading coefficient fuzzy: certify the best single lex lower bound from
    // the prefix of fuzzy/zero coefficients and the first exact contribution
    std::int64_t bt = tval;
    std::optional<std::int64_t> bq = coef[0].bound;
    for (std::size_t i = 1; i < coef.size(); ++i) {
        const Padic& ci = coef[i];
        std::int64_t t = tval + static_cast<std::int64_t>(i);
        if (ci.st == MagState::Zero) continue;
        if (ci.st == MagState::Fuzzy) {
            bound_min(bt, bq, t, ci.bound);
        } else {
            bound_min(bt, bq, t, ci.val - 1); // val(x) could equal (t, ci.val)
            break;
        }
    }
    // window end: beyond the known coefficients anything may appear
    bound_min(bt, bq, tval + static_cast<std::int64_t>(coef.size()) - 1, std::nullopt);
    return ps_fuzzy(bt, bq);
}

PadicSeries ps_add(const CompCtx& c, const PadicSeries& a, const PadicSeries& b) {
    if (a.st == MagState::Zero) return b;
    if (b.st == MagState::Zero) return a;
    if (a.st == MagState::Fuzzy && b.st == MagState::Fuzzy) {
        std::int64_t bt = a.bound_t;
        std::optional<std::int64_t> bq = a.bound_q;
        bound_min(bt, bq, b.bound_t, b.bound_q);
        return ps_fuzzy(bt, bq);
    }
    if (a.st == MagState::Fuzzy || b.st == MagState::Fuzzy) {
        const PadicSeries& f = a.st == MagState::Fuzzy ? a : b;
        const PadicSeries& n = a.st == MagState::Fuzzy ? b : a;
        // exact summand value V = (tv, qv); fuzzy summand certified val > B
        std::int64_t tv = n.tval;
        std::int64_t qv = n.coef[0].val;
        bool v_le_bound = f.bound_q
                              ? (tv < f.bound_t || (tv == f.bound_t && qv <= *f.bound_q))
                              : tv <= f.bound_t;
        if (v_le_bound) {
            // V <= B < val(fuzzy): the sum keeps valuation V; materialize the
            // fuzzy summand inside the exact one's coefficient window
            std::vector<Padic> coef = n.coef;
            std::int64_t cap = f.bound_t - tv; // indices < cap are untouched
            if (f.bound_q) {
                if (cap >= 0 && cap < static_cast<std::int64_t>(coef.size()))
                    coef[static_cast<std::size_t>(cap)] =
                        p_add(c.pc, coef[static_cast<std::size_t>(cap)], p_fuzzy(*f.bound_q));
                if (cap + 1 < static_cast<std::int64_t>(coef.size()))
                    coef.resize(static_cast<std::size_t>(cap + 1));
            } else {
                // fuzzy contributes only at t-exponents > bound_t, so indices
                // 0..cap stay clean
                if (cap + 1 < static_cast<std::int64_t>(coef.size()))
                    coef.resize(static_cast<std::size_t>(cap + 1));
            }
            return ps_make(tv, std::move(coef));
        }
        return ps_fuzzy(f.bound_t, f.bound_q);
    }
    const PadicSeries& lo = a.tval <= b.tval ? a : b;
    const PadicSeries& hi = a.tval <= b.tval ? b : a;
    std::int64_t s = hi.tval - lo.tval;
    std::int64_t D = std::min<std::int64_t>(static_cast<std::int64_t>(lo.coef.size()),
                                            s + static_cast<std::int64_t>(hi.coef.size()));
    std::vector<Padic> coef;
    coef.reserve(static_cast<std::size_t>(D));
    for (std::int64_t i = 0; i < D; ++i) {
        Padic x = i < static_cast<std::int64_t>(lo.coef.size())
                      ? lo.coef[static_cast<std::size_t>(i)]
                      : p_zero();
        if (i >= s && i - s < static_cast<std::int64_t>(hi.coef.size()))
            x = p_add(c.pc, x, hi.coef[static_cast<std::size_t>(i - s)]);
        coef.push_back(std::move(x));
    }
    return ps_make(lo.tval, std::move(coef));
}

PadicSeries ps_neg(const CompCtx& c, const PadicSeries& a) {
    if (a.st != MagState::Nonzero) return a;
    PadicSeries r = a;
    for (auto& x : r.coef) x = p_neg(c.pc, x);
    return r;
}

PadicSeries ps_mul(const CompCtx& c, const PadicSeries& a, const PadicSeries& b) {
    if (a.st == MagState::Zero || b.st == MagState::Zero) return ps_zero();
    if (a.st == MagState::Fuzzy && b.st == MagState::Fuzzy) {
        std::optional<std::int64_t> bq;
        if (a.bound_q && b.bound_q) bq = *a.bound_q + *b.bound_q + 1;
        return ps_fuzzy(a.bound_t + b.bound_t, bq);
    }
    if (a.st == MagState::Fuzzy || b.st == MagState::Fuzzy) {
        const PadicSeries& f = a.st == MagState::Fuzzy ? a : b;
        const PadicSeries& n = a.st == MagState::Fuzzy ? b : a;
        std::optional<std::int64_t> bq;
        if (f.bound_q) bq = *f.bound_q + n.coef[0].val;
        return ps_fuzzy(f.bound_t + n.tval, bq);
    }
    std::size_t D = std::min({a.coef.size(), b.coef.size(), static_cast<std::size_t>(c.N)});
    std::vector<Padic> coef(D, p_zero());
    for (std::size_t i = 0; i < a.coef.size() && i < D; ++i) {
        if (a.coef[i].st == MagState::Zero) continue;
        for (std::size_t j = 0; j < b.coef.size() && i + j < D; ++j)
            coef[i + j] = p_add(c.pc, coef[i + j], p_mul(c.pc, a.coef[i], b.coef[j]));
    }
    return ps_make(a.tval + b.tval, std::move(coef));
}

PadicSeries ps_inv(const CompCtx& c, const PadicSeries& a) {
    if (a.st == MagState::Zero) throw DivisionByZero("inverse of 0");
    if (a.st == MagState::Fuzzy)
        throw PrecisionExhausted("inverse of element with uncertified valuation");
    std::size_t D = a.coef.size();
    std::vector<Padic> b(D, p_zero());
    Padic c0i = p_inv(c.pc, a.coef[0]);
    b[0] = c0i;
    for (std::size_t n = 1; n < D; ++n) {
        Padic acc = p_zero();
        for (std::size_t i = 1; i <= n; ++i)
            if (i < a.coef.size()) acc = p_add(c.pc, acc, p_mul(c.pc, a.coef[i], b[n - i]));
        b[n] = p_neg(c.pc, p_mul(c.pc, c0i, acc));
    }
    PadicSeries r;
    r.st = MagState::Nonzero;
    r.tval = -a.tval;
    r.coef = std::move(b);
    return r;
}

PadicCtx padic_ctx(const FieldDescriptor& f) { return PadicCtx{mpz_class(f.q), f.precision}; }

SeriesCtx series_ctx(const FieldDescriptor& f) {
    return SeriesCtx{FFContext::get(static_cast<std::uint32_t>(f.p), f.k), f.precision};
}

CompCtx comp_ctx(const FieldDescriptor& f) {
    return CompCtx{padic_ctx(f), f.precision};
}

} // namespace

// ------------------------------------------------------------------- Element

Element::Element(FieldDescriptor f, BigRational v) : field_(std::move(f)), payload_(std::move(v)) {}
Element::Element(FieldDescriptor f, Padic v) : field_(std::move(f)), payload_(std::move(v)) {}
Element::Element(FieldDescriptor f, FpkSeries v) : field_(std::move(f)), payload_(std::move(v)) {}
Element::Element(FieldDescriptor f, PadicSeries v) : field_(std::move(f)), payload_(std::move(v)) {}

Element Element::zero(const FieldDescriptor& f) {
    switch (f.kind) {
        case FieldKind::Rationals: return Element(f, BigRational(0));
        case FieldKind::QAdic: return Element(f, p_zero());
        case FieldKind::Laurent: return Element(f, s_zero());
        case FieldKind::Composite: return Element(f, ps_zero());
    }
    throw Error("zero: bad field");
}

Element Element::one(const FieldDescriptor& f) { return from_integer(f, 1); }

Element Element::from_integer(const FieldDescriptor& f, std::int64_t n) {
    return from_integer(f, mpz_class(static_cast<long>(n)));
}

Element Element::from_integer(const FieldDescriptor& f, const mpz_class& n) {
    switch (f.kind) {
        case FieldKind::Rationals: return Element(f, BigRational(n));
        case FieldKind::QAdic: return Element(f, p_from_mpz(padic_ctx(f), n));
        case FieldKind::Laurent: {
            auto c = series_ctx(f);
            mpz_class r = mod_positive(n, mpz_class(f.p));
            FFElem x = FFElem::from_integer(c.ff, r.get_si());
            if (x.is_zero()) return Element(f, s_zero());
            std::vector<FFElem> coef{x};
            for (int i = 1; i < f.precision; ++i) coef.push_back(FFElem::zero(c.ff));
            return Element(f, s_make(0, std::move(coef)));
        }
        case FieldKind::Composite: {
            Padic c0 = p_from_mpz(padic_ctx(f), n);
            if (c0.st == MagState::Zero) return Element(f, ps_zero());
            std::vector<Padic> coef{c0};
            for (int i = 1; i < f.precision; ++i) coef.push_back(p_zero());
            return Element(f, ps_make(0, std::move(coef)));
        }
    }
    throw Error("from_integer: bad field");
}

Element Element::from_rational(const FieldDescriptor& f, const BigRational& x) {
    switch (f.kind) {
        case FieldKind::Rationals: return Element(f, x);
        case FieldKind::QAdic: return Element(f, p_from_mpq(padic_ctx(f), x));
        case FieldKind::Laurent: {
            if (x == 0) return Element(f, s_zero());
            if (mpz_divisible_p(x.get_den().get_mpz_t(), mpz_class(f.p).get_mpz_t()))
                throw SemanticError("rational with p in denominator has no image in char p");
            Element num = from_integer(f, mpz_class(x.get_num()));
            Element den = from_integer(f, mpz_class(x.get_den()));
            return num / den;
        }
        case FieldKind::Composite: {
            Padic c0 = p_from_mpq(padic_ctx(f), x);
            if (c0.st == MagState::Zero) return Element(f, ps_zero());
            std::vector<Padic> coef{c0};
            for (int i = 1; i < f.precision; ++i) coef.push_back(p_zero());
            return Element(f, ps_make(0, std::move(coef)));
        }
    }
    throw Error("from_rational: bad field");
}

Element Element::uniformizer(const FieldDescriptor& f, int stage) {
    switch (f.kind) {
        case FieldKind::Rationals: {
            if (f.primes.empty()) throw Error("uniformizer: no attached prime");
            std::size_t i = stage <= 0 ? 0 : static_cast<std::size_t>(stage - 1);
            if (i >= f.primes.size()) throw Error("uniformizer: bad stage");
            return from_integer(f, f.primes[i]);
        }
        case FieldKind::QAdic: return from_integer(f, f.q);
        case FieldKind::Laurent: {
            auto c = series_ctx(f);
            std::vector<FFElem> coef{FFElem::one(c.ff)};
            for (int i = 1; i < f.precision; ++i) coef.push_back(FFElem::zero(c.ff));
            return Element(f, s_make(1, std::move(coef)));
        }
        case FieldKind::Composite: {
            if (stage == 2) return from_integer(f, f.q);
            // default / stage 1: t
            Padic one = p_from_mpz(padic_ctx(f), 1);
            std::vector<Padic> coef{one};
            for (int i = 1; i < f.precision; ++i) coef.push_back(p_zero());
            return Element(f, ps_make(1, std::move(coef)));
        }
    }
    throw Error("uniformizer: bad field");
}

Element Element::qadic(const FieldDescriptor& f, std::int64_t val, const mpz_class& unit) {
    if (f.kind != FieldKind::QAdic) throw FieldMismatch("qadic literal on non-q-adic field");
    auto c = padic_ctx(f);
    Padic u = p_from_mpz(c, unit);
    if (u.st != MagState::Nonzero || u.val != 0)
        throw SemanticError("qadic: unit part must be a q-unit");
    u.val = val;
    return Element(f, u);
}

Element Element::laurent(const FieldDescriptor& f, std::int64_t val, std::vector<FFElem> coef) {
    if (f.kind != FieldKind::Laurent) throw FieldMismatch("laurent literal on wrong field");
    coef.resize(static_cast<std::size_t>(f.precision),
                FFElem::zero(series_ctx(f).ff));
    return Element(f, s_make(val, std::move(coef)));
}

Element Element::composite(const FieldDescriptor& f, std::int64_t tval,
                           const std::vector<Element>& qadic_coefs) {
    if (f.kind != FieldKind::Composite) throw FieldMismatch("comp literal on wrong field");
    std::vector<Padic> coef;
    for (const auto& e : qadic_coefs) coef.push_back(e.padic_payload());
    coef.resize(static_cast<std::size_t>(f.precision), p_zero());
    return Element(f, ps_make(tval, std::move(coef)));
}

bool Element::is_exact_zero() const {
    if (auto r = std::get_if<BigRational>(&payload_)) return *r == 0;
    if (auto p = std::get_if<Padic>(&payload_)) return p->st == MagState::Zero;
    if (auto s = std::get_if<FpkSeries>(&payload_)) return s->st == MagState::Zero;
    if (auto c = std::get_if<PadicSeries>(&payload_)) return c->st == MagState::Zero;
    throw Error("element without payload");
}

bool Element::is_certified_nonzero() const {
    if (auto r = std::get_if<BigRational>(&payload_)) return *r != 0;
    if (auto p = std::get_if<Padic>(&payload_)) return p->st == MagState::Nonzero;
    if (auto s = std::get_if<FpkSeries>(&payload_)) return s->st == MagState::Nonzero;
    if (auto c = std::get_if<PadicSeries>(&payload_)) return c->st == MagState::Nonzero;
    throw Error("element without payload");
}

bool Element::is_fuzzy() const { return !is_exact_zero() && !is_certified_nonzero(); }

VGE Element::val() const {
    if (auto r = std::get_if<BigRational>(&payload_)) {
        if (*r == 0) return VGE::infinity();
        if (field_.primes.empty())
            throw Error("val: Q with no attached prime has only the trivial valuation");
        return VGE::of(rational_valuation(*r, mpz_class(field_.primes[0])));
    }
    if (auto p = std::get_if<Padic>(&payload_)) {
        if (p->st == MagState::Zero) return VGE::infinity();
        if (p->st == MagState::Fuzzy)
            throw PrecisionExhausted("valuation uncertified (cancellation beyond budget; > " +
                                     std::to_string(p->bound) + ")");
        return VGE::of(p->val);
    }
    if (auto s = std::get_if<FpkSeries>(&payload_)) {
        if (s->st == MagState::Zero) return VGE::infinity();
        if (s->st == MagState::Fuzzy)
            throw PrecisionExhausted("valuation uncertified (cancellation beyond budget; > " +
                                     std::to_string(s->bound) + ")");
        return VGE::of(s->val);
    }
    if (auto c = std::get_if<PadicSeries>(&payload_)) {
        if (c->st == MagState::Zero) return VGE::infinity();
        if (c->st == MagState::Fuzzy)
            throw PrecisionExhausted("valuation uncertified (cancellation beyond budget)");
        return VGE::of(c->tval, c->coef[0].val);
    }
    throw Error("element without payload");
}

VGE Element::val_at(const ValuationRingRef& ring) const {
    if (ring.field != field_) throw FieldMismatch("val_at: ring from a different field");
    if (ring.chain_index == 0)
        return is_exact_zero() ? VGE::infinity() : VGE::of(0);
    if (field_.kind == FieldKind::Rationals) {
        const auto& r = std::get<BigRational>(payload_);
        if (r == 0) return VGE::infinity();
        return VGE::of(rational_valuation(r, mpz_class(ring.rational_prime())));
    }
    if (field_.kind == FieldKind::Composite && ring.chain_index == 1) {
        const auto& c = std::get<PadicSeries>(payload_);
        if (c.st == MagState::Zero) return VGE::infinity();
        if (c.st == MagState::Fuzzy)
            throw PrecisionExhausted("t-adic valuation uncertified");
        return VGE::of(c.tval);
    }
    return val();
}

bool Element::vanishes_to(std::int64_t k) const {
    if (auto r = std::get_if<BigRational>(&payload_)) {
        if (*r == 0) return true;
        if (field_.primes.empty()) return false;
        return rational_valuation(*r, mpz_class(field_.primes[0])) >= k;
    }
    if (auto p = std::get_if<Padic>(&payload_)) {
        if (p->st == MagState::Zero) return true;
        if (p->st == MagState::Fuzzy) return p->bound + 1 >= k;
        return p->val >= k;
    }
    if (auto s = std::get_if<FpkSeries>(&payload_)) {
        if (s->st == MagState::Zero) return true;
        if (s->st == MagState::Fuzzy) return s->bound + 1 >= k;
        return s->val >= k;
    }
    if (auto c = std::get_if<PadicSeries>(&payload_)) {
        if (c->st == MagState::Zero) return true;
        if (c->st == MagState::Fuzzy)
            return c->bound_q ? c->bound_t >= k : c->bound_t + 1 >= k;
        return c->tval >= k;
    }
    throw Error("element without payload");
}

bool Element::val_at_least(const VGE& g) const {
    if (is_exact_zero()) return true;
    if (auto r = std::get_if<BigRational>(&payload_)) {
        (void)r;
        return val() >= g;
    }
    if (auto p = std::get_if<Padic>(&payload_)) {
        if (p->st == MagState::Nonzero) return VGE::of(p->val) >= g;
        if (p->bound + 1 >= g.as_integer()) return true;
        throw PrecisionExhausted("valuation comparison undecided at this precision");
    }
    if (auto s = std::get_if<FpkSeries>(&payload_)) {
        if (s->st == MagState::Nonzero) return VGE::of(s->val) >= g;
        if (s->bound + 1 >= g.as_integer()) return true;
        throw PrecisionExhausted("valuation comparison undecided at this precision");
    }
    if (auto c = std::get_if<PadicSeries>(&payload_)) {
        if (c->st == MagState::Nonzero) return val() >= g;
        if (g.rank() != 2) throw RankMismatch("val_at_least: rank-1 bound on composite element");
        if (c->bound_q) {
            if (VGE::of(c->bound_t, *c->bound_q + 1) >= g) return true;
        } else {
            if (c->bound_t + 1 > g.first()) return true;
        }
        throw PrecisionExhausted("valuation comparison undecided at this precision");
    }
    throw Error("element without payload");
}

bool Element::stage_val_at_least(std::int64_t k) const {
    if (is_exact_zero()) return true;
    if (std::holds_alternative<BigRational>(payload_)) return val() >= VGE::of(k);
    if (auto p = std::get_if<Padic>(&payload_)) {
        if (p->st == MagState::Nonzero) return p->val >= k;
        if (p->bound + 1 >= k) return true;
        throw PrecisionExhausted("valuation comparison undecided at this precision");
    }
    if (auto s = std::get_if<FpkSeries>(&payload_)) {
        if (s->st == MagState::Nonzero) return s->val >= k;
        if (s->bound + 1 >= k) return true;
        throw PrecisionExhausted("valuation comparison undecided at this precision");
    }
    if (auto c = std::get_if<PadicSeries>(&payload_)) {
        if (c->st == MagState::Nonzero) return c->tval >= k;
        if ((c->bound_q ? c->bound_t : c->bound_t + 1) >= k) return true;
        throw PrecisionExhausted("valuation comparison undecided at this precision");
    }
    throw Error("element without payload");
}

void Element::check_same_field(const Element& o, const char* op) const {
    if (field_ != o.field_)
        throw FieldMismatch(std::string(op) + ": elements of different fields");
}

Element Element::operator+(const Element& o) const {
    check_same_field(o, "add");
    if (auto r = std::get_if<BigRational>(&payload_))
        return Element(field_, BigRational(*r + std::get<BigRational>(o.payload_)));
    if (auto p = std::get_if<Padic>(&payload_))
        return Element(field_, p_add(padic_ctx(field_), *p, std::get<Padic>(o.payload_)));
    if (auto s = std::get_if<FpkSeries>(&payload_))
        return Element(field_, s_add(series_ctx(field_), *s, std::get<FpkSeries>(o.payload_)));
    if (auto c = std::get_if<PadicSeries>(&payload_))
        return Element(field_, ps_add(comp_ctx(field_), *c, std::get<PadicSeries>(o.payload_)));
    throw Error("element without payload");
}

Element Element::operator-() const {
    if (auto r = std::get_if<BigRational>(&payload_)) return Element(field_, BigRational(-*r));
    if (auto p = std::get_if<Padic>(&payload_))
        return Element(field_, p_neg(padic_ctx(field_), *p));
    if (auto s = std::get_if<FpkSeries>(&payload_))
        return Element(field_, s_neg(series_ctx(field_), *s));
    if (auto c = std::get_if<PadicSeries>(&payload_))
        return Element(field_, ps_neg(comp_ctx(field_), *c));
    throw Error("element without payload");
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator*(const Element& o) const {
    check_same_field(o, "mul");
    if (auto r = std::get_if<BigRational>(&payload_))
        return Element(field_, BigRational(*r * std::get<BigRational>(o.payload_)));
    if (auto p = std::get_if<Padic>(&payload_))
        return Element(field_, p_mul(padic_ctx(field_), *p, std::get<Padic>(o.payload_)));
    if (auto s = std::get_if<FpkSeries>(&payload_))
        return Element(field_, s_mul(series_ctx(field_), *s, std::get<FpkSeries>(o.payload_)));
    if (auto c = std::get_if<PadicSeries>(&payload_))
        return Element(field_, ps_mul(comp_ctx(field_), *c, std::get<PadicSeries>(o.payload_)));
    throw Error("element without payload");
}

Element Element::inverse() const {
    if (auto r = std::get_if<BigRational>(&payload_)) {
        if (*r == 0) throw DivisionByZero("inverse of 0");
        return Element(field_, BigRational(1 / *r));
    }
    if (auto p = std::get_if<Padic>(&payload_))
        return Element(field_, p_inv(padic_ctx(field_), *p));
    if (auto s = std::get_if<FpkSeries>(&payload_))
        return Element(field_, s_inv(series_ctx(field_), *s));
    if (auto c = std::get_if<PadicSeries>(&payload_))
        return Element(field_, ps_inv(comp_ctx(field_), *c));
    throw Error("element without payload");
}

Element Element::operator/(const Element& o) const { return *this * o.inverse(); }

Element Element::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(-e);
    Element acc = one(field_);
    Element base = *this;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

int Element::known_digits() const {
    if (std::holds_alternative<BigRational>(payload_)) return field_.precision;
    if (auto p = std::get_if<Padic>(&payload_))
        return p->st == MagState::Nonzero ? p->digits : 0;
    if (auto s = std::get_if<FpkSeries>(&payload_))
        return s->st == MagState::Nonzero ? static_cast<int>(s->coef.size()) : 0;
    if (auto c = std::get_if<PadicSeries>(&payload_))
        return c->st == MagState::Nonzero ? static_cast<int>(c->coef.size()) : 0;
    throw Error("element without payload");
}

const BigRational& Element::rational_value() const {
    if (auto r = std::get_if<BigRational>(&payload_)) return *r;
    throw FieldMismatch("rational_value: not a rational element");
}

const Padic& Element::padic_payload() const {
    if (auto p = std::get_if<Padic>(&payload_)) return *p;
    throw FieldMismatch("padic_payload: not a q-adic element");
}

const FpkSeries& Element::laurent_payload() const {
    if (auto s = std::get_if<FpkSeries>(&payload_)) return *s;
    throw FieldMismatch("laurent_payload: not a Laurent element");
}

const PadicSeries& Element::composite_payload() const {
    if (auto c = std::get_if<PadicSeries>(&payload_)) return *c;
    throw FieldMismatch("composite_payload: not a composite element");
}

Element Element::composite_coefficient(int i) const {
    const auto& c = composite_payload();
    FieldDescriptor qf = FieldDescriptor::qadic(field_.q, field_.precision);
    if (c.st != MagState::Nonzero || i < 0 || i >= static_cast<int>(c.coef.size()))
        return Element::zero(qf);
    return Element(qf, c.coef[static_cast<std::size_t>(i)]);
}

// ------------------------------------------------------------------ residues

ResidueElement residue_at(const Element& x, const ValuationRingRef& ring) {
    const FieldDescriptor& f = x.field();
    if (ring.field != f) throw FieldMismatch("residue_at: ring from a different field");
    if (ring.chain_index == 0)
        return ResidueElement(x); // trivial ring: residue field is K itself
    switch (f.kind) {
        case FieldKind::Rationals: {
            const BigRational& r = x.rational_value();
            mpz_class p(ring.rational_prime());
            auto ctx = FFContext::get(static_cast<std::uint32_t>(ring.rational_prime()), 1);
            if (r == 0) return ResidueElement(FFElem::zero(ctx));
            if (rational_valuation(r, p) < 0)
                throw NegativeValuation("residue of element with negative valuation");
            mpz_class num = mod_positive(r.get_num(), p);
            mpz_class den = mod_positive(r.get_den(), p);
            mpz_class v = mod_positive(num * inv_mod(den, p), p);
            return ResidueElement(FFElem::from_integer(ctx, v.get_si()));
        }
        case FieldKind::QAdic: {
            const Padic& p = x.padic_payload();
            auto ctx = FFContext::get(static_cast<std::uint32_t>(f.q), 1);
            if (p.st == MagState::Zero) return ResidueElement(FFElem::zero(ctx));
            if (p.st == MagState::Fuzzy) {
                if (p.bound >= 0) return ResidueElement(FFElem::zero(ctx));
                throw PrecisionExhausted("residue of element with uncertified valuation");
            }
            if (p.val < 0) throw NegativeValuation("residue of element with negative valuation");
            if (p.val > 0) return ResidueElement(FFElem::zero(ctx));
            mpz_class r = p.unit % mpz_class(f.q);
            return ResidueElement(FFElem::from_integer(ctx, r.get_si()));
        }
        case FieldKind::Laurent: {
            const FpkSeries& s = x.laurent_payload();
            auto ctx = FFContext::get(static_cast<std::uint32_t>(f.p), f.k);
            if (s.st == MagState::Zero) return ResidueElement(FFElem::zero(ctx));
            if (s.st == MagState::Fuzzy) {
                if (s.bound >= 0) return ResidueElement(FFElem::zero(ctx));
                throw PrecisionExhausted("residue of element with uncertified valuation");
            }
            if (s.val < 0) throw NegativeValuation("residue of element with negative valuation");
            if (s.val > 0) return ResidueElement(FFElem::zero(ctx));
            return ResidueElement(s.coef[0]);
        }
        case FieldKind::Composite: {
            const PadicSeries& c = x.composite_payload();
            FieldDescriptor qf = FieldDescriptor::qadic(f.q, f.precision);
            if (ring.chain_index == 1) {
                // residue field Q_q
                if (c.st == MagState::Zero) return ResidueElement(Element::zero(qf));
                if (c.st == MagState::Fuzzy) {
                    // certified v_t >= 1 means the residue is 0
                    bool vt_positive = c.bound_q ? c.bound_t >= 1 : c.bound_t >= 0;
                    if (vt_positive) return ResidueElement(Element::zero(qf));
                    throw PrecisionExhausted("residue of element with uncertified valuation");
                }
                if (c.tval < 0)
                    throw NegativeValuation("residue of element with negative valuation");
                if (c.tval > 0) return ResidueElement(Element::zero(qf));
                return ResidueElement(Element(qf, c.coef[0]));
            }
            auto ctx = FFContext::get(static_cast<std::uint32_t>(f.q), 1);
            if (c.st == MagState::Zero) return ResidueElement(FFElem::zero(ctx));
            VGE v = x.val(); // throws on fuzzy
            if (v < VGE::zero(2))
                throw NegativeValuation("residue of element with negative valuation");
            if (v > VGE::zero(2)) return ResidueElement(FFElem::zero(ctx));
            mpz_class r = c.coef[0].unit % mpz_class(f.q);
            return ResidueElement(FFElem::from_integer(ctx, r.get_si()));
        }
    }
    throw Error("residue_at: bad field");
}

ResidueElement residue(const Element& x) {
    ValuationRingRef ring{x.field(), x.field().chain_length() - 1};
    return residue_at(x, ring);
}

bool ResidueElement::is_zero() const {
    if (is_finite_field()) return finite_value().is_zero();
    return element_value().is_exact_zero();
}

std::string ResidueElement::to_string() const {
    if (is_finite_field()) return finite_value().to_string();
    return element_value().to_string();
}

bool equal_to_precision(const Element& x, const Element& y, std::int64_t k) {
    return (x - y).vanishes_to(k);
}

// ------------------------------------------------------------------ printing

namespace {

std::string padic_term(const Padic& p, std::int64_t q) {
    // U*q^v in the element literal grammar
    std::string s = p.unit.get_str();
    if (p.val == 1) return s + "*" + std::to_string(q);
    if (p.val != 0) return s + "*" + std::to_string(q) + "^" + std::to_string(p.val);
    return s;
}

std::string ff_term(const FFElem& c) {
    if (c.context()->k() == 1) return std::to_string(c.coords().empty() ? 0 : c.coords()[0]);
    FpPolynomial f{c.context()->p(), c.coords()};
    return "(" + f.to_string("u") + ")";
}

std::string tpow(std::int64_t e) {
    if (e == 0) return "";
    if (e == 1) return "t";
    return "t^" + std::to_string(e);
}

} // namespace

std::string Element::to_string() const {
    if (auto r = std::get_if<BigRational>(&payload_)) return r->get_str();
    if (auto p = std::get_if<Padic>(&payload_)) {
        if (p->st == MagState::Zero) return "0";
        if (p->st == MagState::Fuzzy) return "fuzzy(v>" + std::to_string(p->bound) + ")";
        return "qadic(" + std::to_string(field_.q) + "; " + padic_term(*p, field_.q) + ")";
    }
    if (auto s = std::get_if<FpkSeries>(&payload_)) {
        if (s->st == MagState::Zero) return "0";
        if (s->st == MagState::Fuzzy) return "fuzzy(v>" + std::to_string(s->bound) + ")";
        std::string body;
        for (std::size_t i = 0; i < s->coef.size(); ++i) {
            if (s->coef[i].is_zero()) continue;
            std::int64_t e = s->val + static_cast<std::int64_t>(i);
            std::string term = ff_term(s->coef[i]);
            std::string tp = tpow(e);
            if (!tp.empty()) term = (term == "1" ? tp : term + "*" + tp);
            if (!body.empty()) body += " + ";
            body += term;
        }
        if (body.empty()) body = "0"; // all-zero known window can't happen for Nonzero
        return "laurent(" + std::to_string(field_.p) + "," + std::to_string(field_.k) + "; " +
               body + ")";
    }
    if (auto c = std::get_if<PadicSeries>(&payload_)) {
        if (c->st == MagState::Zero) return "0";
        if (c->st == MagState::Fuzzy) return "fuzzy(v_t>" + std::to_string(c->bound_t) + ")";
        std::string body;
        for (std::size_t i = 0; i < c->coef.size(); ++i) {
            if (c->coef[i].st != MagState::Nonzero) continue;
            std::int64_t e = c->tval + static_cast<std::int64_t>(i);
            std::string term = "(" + padic_term(c->coef[i], field_.q) + ")";
            std::string tp = tpow(e);
            if (!tp.empty()) term += "*" + tp;
            if (!body.empty()) body += " + ";
            body += term;
        }
        return "comp(" + std::to_string(field_.q) + "; " + body + ")";
    }
    return "?";
}

} // namespace ogval
