#include "ogval/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ogval/rational.hpp"

namespace ogval {

namespace {

using Poly = std::vector<std::uint32_t>; // over F_p, low-degree first

void strip(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    // reduce mod monic f
    int df = static_cast<int>(f.size()) - 1;
    for (int i = static_cast<int>(r.size()) - 1; i >= df; --i) {
        std::uint64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (int j = 0; j < df; ++j) {
            std::uint64_t sub = (c * f[j]) % p;
            r[i - df + j] = static_cast<std::uint32_t>((r[i - df + j] + p - sub) % p);
        }
    }
    r.resize(df);
    strip(r);
    return r;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on integers
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw DivisionByZero("inverse of non-unit mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    int df = static_cast<int>(f.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= df; --i) {
        std::uint64_t c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (int j = 0; j < df; ++j) {
            std::uint64_t sub = (c * f[j]) % p;
            a[i - df + j] = static_cast<std::uint32_t>((a[i - df + j] + p - sub) % p);
        }
    }
    if (static_cast<int>(a.size()) > df) a.resize(df);
    strip(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    strip(a);
    strip(b);
    while (!b.empty()) {
        // make b monic before reducing
        std::uint64_t lead = b.back();
        if (lead != 1) {
            std::uint64_t li = inv_mod_p(lead, p);
            for (auto& c : b) c = static_cast<std::uint32_t>((std::uint64_t(c) * li) % p);
        }
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

std::string FpPolynomial::to_string(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        std::uint32_t c = coeffs[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

bool fp_poly_is_irreducible(const FpPolynomial& f) {
    std::uint64_t p = f.p;
    int k = f.degree();
    if (k <= 0) return false;
    if (k == 1) return true;
    // x^{p^k} == x mod f, and gcd(x^{p^{k/r}} - x, f) = 1 for prime r | k
    auto pow_pk = [&](int e) {
        Poly acc = poly_mod(Poly{0, 1}, f.coeffs, p);
        for (int i = 0; i < e; ++i) {
            // Frobenius step: raise to p-th power
            Poly next{1};
            Poly base = acc;
            std::uint64_t ee = p;
            Poly sq = base;
            next = Poly{1};
            while (ee > 0) {
                if (ee & 1) next = poly_mul_mod(next, sq, f.coeffs, p);
                sq = poly_mul_mod(sq, sq, f.coeffs, p);
                ee >>= 1;
            }
            acc = next;
        }
        return acc;
    };
    Poly xpk = pow_pk(k);
    Poly x = poly_mod(Poly{0, 1}, f.coeffs, p);
    if (xpk != x) return false;
    for (int r = 2; r <= k; ++r) {
        if (k % r != 0) continue;
        bool rprime = true;
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0) { rprime = false; break; }
        if (!rprime) continue;
        Poly g = pow_pk(k / r);
        // g - x
        Poly diff = g;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        strip(diff);
        Poly gc = poly_gcd(f.coeffs, diff, p);
        if (static_cast<int>(gc.size()) - 1 != 0) return false;
    }
    return true;
}

FpPolynomial irreducible_modulus(std::uint32_t p, int k) {
    if (k < 1) throw Error("irreducible_modulus: k must be >= 1");
    if (k == 1) return FpPolynomial{p, {0, 1}}; // x
    // enumerate monic degree-k polynomials by their coefficient vector read
    // as a base-p integer, constant coefficient least significant
    std::uint64_t bound = 1;
    for (int i = 0; i < k; ++i) bound *= p;
    for (std::uint64_t m = 0; m < bound; ++m) {
        FpPolynomial f;
        f.p = p;
        f.coeffs.resize(static_cast<std::size_t>(k) + 1, 0);
        std::uint64_t t = m;
        for (int i = 0; i < k; ++i) {
            f.coeffs[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f.coeffs[k] = 1;
        if (fp_poly_is_irreducible(f)) return f;
    }
    throw Error("irreducible_modulus: exhausted enumeration"); // unreachable
}

FFContext::FFContext(std::uint32_t p, int k, FpPolynomial modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    if (k < 1 || k > 20) throw Error("FFContext: unsupported extension degree");
    order_ = 1;
    for (int i = 0; i < k; ++i) {
        if (order_ > (std::uint64_t(1) << 62) / p) throw Error("FFContext: field too large");
        order_ *= p;
    }
}

std::shared_ptr<const FFContext> FFContext::get(std::uint32_t p, int k) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, int>, std::shared_ptr<const FFContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (!is_prime(mpz_class(p))) throw Error("FFContext: characteristic must be prime");
    auto ctx = std::make_shared<const FFContext>(p, k, irreducible_modulus(p, k));
    cache.emplace(key, ctx);
    return ctx;
}

FiniteFieldElement::FiniteFieldElement(std::shared_ptr<const FFContext> ctx,
                                       std::vector<std::uint32_t> coords)
    : ctx_(std::move(ctx)), c_(std::move(coords)) {
    if (!ctx_) throw Error("FiniteFieldElement: null context");
    c_.resize(static_cast<std::size_t>(ctx_->k()), 0);
    for (auto& x : c_) x %= ctx_->p();
}

FiniteFieldElement FiniteFieldElement::zero(std::shared_ptr<const FFContext> ctx) {
    return FiniteFieldElement(std::move(ctx), {});
}

FiniteFieldElement FiniteFieldElement::one(std::shared_ptr<const FFContext> ctx) {
    return FiniteFieldElement(std::move(ctx), {1});
}

FiniteFieldElement FiniteFieldElement::from_integer(std::shared_ptr<const FFContext> ctx,
                                                    std::int64_t n) {
    std::int64_t p = ctx->p();
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return FiniteFieldElement(std::move(ctx), {static_cast<std::uint32_t>(r)});
}

FiniteFieldElement FiniteFieldElement::from_index(std::shared_ptr<const FFContext> ctx,
                                                  std::uint64_t idx) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(ctx->k()));
    std::uint64_t p = ctx->p();
    for (auto& x : c) {
        x = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    return FiniteFieldElement(std::move(ctx), std::move(c));
}

std::uint64_t FiniteFieldElement::index() const {
    std::uint64_t idx = 0;
    for (int i = ctx_->k() - 1; i >= 0; --i) idx = idx * ctx_->p() + c_[static_cast<std::size_t>(i)];
    return idx;
}

bool FiniteFieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

void FiniteFieldElement::check_compatible(const FiniteFieldElement& o, const char* op) const {
    if (!ctx_ || !o.ctx_) throw Error("finite field element without context");
    if (ctx_ != o.ctx_ &&
        (ctx_->p() != o.ctx_->p() || ctx_->k() != o.ctx_->k() ||
         ctx_->modulus().coeffs != o.ctx_->modulus().coeffs))
        throw FieldMismatch(std::string(op) + ": incompatible finite fields");
}

FiniteFieldElement FiniteFieldElement::operator+(const FiniteFieldElement& o) const {
    check_compatible(o, "ff add");
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % ctx_->p();
    return FiniteFieldElement(ctx_, std::move(r));
}

FiniteFieldElement FiniteFieldElement::operator-() const {
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (ctx_->p() - c_[i]) % ctx_->p();
    return FiniteFieldElement(ctx_, std::move(r));
}

FiniteFieldElement FiniteFieldElement::operator-(const FiniteFieldElement& o) const {
    return *this + (-o);
}

FiniteFieldElement FiniteFieldElement::operator*(const FiniteFieldElement& o) const {
    check_compatible(o, "ff mul");
    Poly r = poly_mul_mod(c_, o.c_, ctx_->modulus().coeffs, ctx_->p());
    return FiniteFieldElement(ctx_, std::move(r));
}

FiniteFieldElement FiniteFieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of 0 in finite field");
    // extended Euclid in F_p[x] against the modulus
    std::uint64_t p = ctx_->p();
    Poly r0 = ctx_->modulus().coeffs, r1 = c_;
    strip(r1);
    Poly t0{}, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q;
        Poly rem = r0;
        strip(rem);
        int d1 = static_cast<int>(r1.size()) - 1;
        std::uint64_t lead_inv = inv_mod_p(r1.back(), p);
        while (static_cast<int>(rem.size()) - 1 >= d1 && !rem.empty()) {
            int shift = static_cast<int>(rem.size()) - 1 - d1;
            std::uint64_t coef = (std::uint64_t(rem.back()) * lead_inv) % p;
            if (static_cast<int>(q.size()) < shift + 1) q.resize(static_cast<std::size_t>(shift) + 1, 0);
            q[static_cast<std::size_t>(shift)] =
                static_cast<std::uint32_t>((q[static_cast<std::size_t>(shift)] + coef) % p);
            for (int j = 0; j <= d1; ++j) {
                std::uint64_t sub = (coef * r1[static_cast<std::size_t>(j)]) % p;
                rem[static_cast<std::size_t>(shift + j)] = static_cast<std::uint32_t>(
                    (rem[static_cast<std::size_t>(shift + j)] + p - sub) % p);
            }
            strip(rem);
        }
        // t2 = t0 - q*t1
        Poly qt1;
        if (!q.empty() && !t1.empty()) {
            qt1.assign(q.size() + t1.size() - 1, 0);
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < t1.size(); ++j)
                    qt1[i + j] = static_cast<std::uint32_t>(
                        (qt1[i + j] + std::uint64_t(q[i]) * t1[j]) % p);
        }
        Poly t2 = t0;
        t2.resize(std::max(t2.size(), qt1.size()), 0);
        for (std::size_t i = 0; i < qt1.size(); ++i)
            t2[i] = static_cast<std::uint32_t>((t2[i] + p - qt1[i]) % p);
        strip(t2);
        t0 = std::move(t1);
        t1 = std::move(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    // r0 is the gcd, a nonzero constant
    if (static_cast<int>(r0.size()) != 1)
        throw Error("ff inverse: modulus not irreducible?");
    std::uint64_t gi = inv_mod_p(r0[0], p);
    for (auto& x : t0) x = static_cast<std::uint32_t>((std::uint64_t(x) * gi) % p);
    return FiniteFieldElement(ctx_, std::move(t0));
}

FiniteFieldElement FiniteFieldElement::pow(std::uint64_t e) const {
    FiniteFieldElement acc = one(ctx_);
    FiniteFieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FiniteFieldElement FiniteFieldElement::frobenius() const { return pow(ctx_->p()); }

FiniteFieldElement FiniteFieldElement::pth_root() const {
    // Frobenius is a bijection; its inverse is x -> x^{p^{k-1}}
    std::uint64_t e = 1;
    for (int i = 0; i < ctx_->k() - 1; ++i) e *= ctx_->p();
    return pow(e);
}

std::uint32_t FiniteFieldElement::trace() const {
    FiniteFieldElement acc = *this;
    FiniteFieldElement fr = *this;
    for (int i = 1; i < ctx_->k(); ++i) {
        fr = fr.frobenius();
        acc = acc + fr;
    }
    // the trace lands in the prime field
    for (std::size_t i = 1; i < acc.c_.size(); ++i)
        if (acc.c_[i] != 0) throw Error("trace did not land in prime field");
    return acc.c_.empty() ? 0 : acc.c_[0];
}

bool FiniteFieldElement::operator==(const FiniteFieldElement& o) const {
    check_compatible(o, "ff eq");
    return c_ == o.c_;
}

std::string FiniteFieldElement::to_string() const {
    if (ctx_->k() == 1) return std::to_string(c_.empty() ? 0 : c_[0]);
    FpPolynomial f{ctx_->p(), c_};
    std::string s = f.to_string("u");
    return s;
}

FiniteFieldElement ff_arith(const FiniteFieldElement& a, const FiniteFieldElement& b, FFOp op,
                            std::uint64_t e) {
    switch (op) {
        case FFOp::Add: return a + b;
        case FFOp::Mul: return a * b;
        case FFOp::Inv: return a.inverse();
        case FFOp::Pow: return a.pow(e);
    }
    throw Error("ff_arith: bad op");
}

} // namespace ogval
