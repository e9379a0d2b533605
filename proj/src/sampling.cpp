#include "ogval/sampling.hpp"

namespace ogval {

namespace {

// strip all factors of the listed primes
mpz_class coprime_part(mpz_class n, const std::vector<std::int64_t>& primes) {
    for (auto p : primes) {
        mpz_class rest, pz(p);
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
        n = rest;
    }
    return n;
}

} // namespace

Element Sampler::element(const FieldDescriptor& f, std::int64_t vlo, std::int64_t vhi) {
    std::int64_t v = range(vlo, vhi);
    switch (f.kind) {
        case FieldKind::Rationals: {
            if (f.primes.empty()) {
                BigRational x = rational(50);
                return Element::from_rational(f, x);
            }
            mpz_class num = coprime_part(mpz_class(1 + static_cast<long>(next() % 997)), f.primes);
            mpz_class den = coprime_part(mpz_class(1 + static_cast<long>(next() % 997)), f.primes);
            BigRational x(coin() ? num : mpz_class(-num), den);
            x.canonicalize();
            // distinguished prime gets the requested valuation, the others a
            // small random one
            for (std::size_t i = 0; i < f.primes.size(); ++i) {
                std::int64_t e = i == 0 ? v : range(-2, 2);
                mpz_class pe;
                mpz_pow_ui(pe.get_mpz_t(), mpz_class(f.primes[i]).get_mpz_t(),
                           static_cast<unsigned long>(e < 0 ? -e : e));
                if (e >= 0)
                    x *= BigRational(pe);
                else
                    x /= BigRational(pe);
            }
            return Element::from_rational(f, x);
        }
        case FieldKind::QAdic: {
            mpz_class q(f.q), unit = 1 + static_cast<long>(next() % static_cast<std::uint64_t>(f.q - 1));
            mpz_class pw = q;
            for (int i = 1; i < f.precision; ++i) {
                unit += pw * static_cast<long>(next() % static_cast<std::uint64_t>(f.q));
                pw *= q;
            }
            return Element::qadic(f, v, unit);
        }
        case FieldKind::Laurent: {
            auto ctx = FFContext::get(static_cast<std::uint32_t>(f.p), f.k);
            std::vector<FFElem> coef{ff_nonzero(ctx)};
            for (int i = 1; i < f.precision; ++i) coef.push_back(ff_any(ctx));
            return Element::laurent(f, v, std::move(coef));
        }
        case FieldKind::Composite: {
            FieldDescriptor qf = FieldDescriptor::qadic(f.q, f.precision);
            Sampler& self = *this;
            auto qcoef = [&](bool nonzero, std::int64_t qlo, std::int64_t qhi) {
                if (!nonzero && self.next() % 3 == 0) return Element::zero(qf);
                return self.element(qf, qlo, qhi);
            };
            std::vector<Element> coef{qcoef(true, -3, 3)};
            // a handful of nonzero tail coefficients keeps arithmetic cheap
            for (int i = 1; i < 8 && i < f.precision; ++i) coef.push_back(qcoef(false, -2, 2));
            return Element::composite(f, v, coef);
        }
    }
    throw Error("sampler: bad field");
}

Element Sampler::unit(const FieldDescriptor& f) {
    if (f.kind == FieldKind::Composite) {
        FieldDescriptor qf = FieldDescriptor::qadic(f.q, f.precision);
        std::vector<Element> coef{element(qf, 0, 0)};
        for (int i = 1; i < 8 && i < f.precision; ++i)
            coef.push_back(next() % 3 == 0 ? Element::zero(qf) : element(qf, -2, 2));
        return Element::composite(f, 0, coef);
    }
    return element(f, 0, 0);
}

BigRational Sampler::rational(std::int64_t max_height) {
    mpz_class num(static_cast<long>(1 + next() % static_cast<std::uint64_t>(max_height)));
    mpz_class den(static_cast<long>(1 + next() % static_cast<std::uint64_t>(max_height)));
    BigRational x(coin() ? num : mpz_class(-num), den);
    x.canonicalize();
    return x;
}

} // namespace ogval
