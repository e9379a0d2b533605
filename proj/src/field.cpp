#include "ogval/field.hpp"

#include <algorithm>

#include "ogval/rational.hpp"

namespace ogval {

FieldDescriptor FieldDescriptor::rationals(std::vector<std::int64_t> primes) {
    FieldDescriptor f;
    f.kind = FieldKind::Rationals;
    for (auto p : primes)
        if (!is_prime(mpz_class(p))) throw SemanticError("Q[...]: " + std::to_string(p) + " is not prime");
    auto sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw SemanticError("Q[...]: attached primes must be distinct");
    f.primes = std::move(primes);
    return f;
}

FieldDescriptor FieldDescriptor::qadic(std::int64_t q, int precision) {
    if (!is_prime(mpz_class(q))) throw SemanticError("Qp: " + std::to_string(q) + " is not prime");
    if (precision < 8) throw SemanticError("precision must be >= 8");
    FieldDescriptor f;
    f.kind = FieldKind::QAdic;
    f.q = q;
    f.precision = precision;
    return f;
}

FieldDescriptor FieldDescriptor::laurent(std::int64_t p, int k, int precision) {
    if (!is_prime(mpz_class(p))) throw SemanticError("Laurent: " + std::to_string(p) + " is not prime");
    if (k < 1) throw SemanticError("Laurent: extension degree must be >= 1");
    if (precision < 8) throw SemanticError("precision must be >= 8");
    FieldDescriptor f;
    f.kind = FieldKind::Laurent;
    f.p = p;
    f.k = k;
    f.precision = precision;
    return f;
}

FieldDescriptor FieldDescriptor::composite(std::int64_t q, int precision) {
    if (!is_prime(mpz_class(q))) throw SemanticError("Comp: " + std::to_string(q) + " is not prime");
    if (precision < 8) throw SemanticError("precision must be >= 8");
    FieldDescriptor f;
    f.kind = FieldKind::Composite;
    f.q = q;
    f.precision = precision;
    return f;
}

int FieldDescriptor::chain_length() const {
    switch (kind) {
        case FieldKind::Rationals: return 1 + static_cast<int>(primes.size());
        case FieldKind::QAdic: return 2;
        case FieldKind::Laurent: return 2;
        case FieldKind::Composite: return 3;
    }
    return 1;
}

bool FieldDescriptor::operator==(const FieldDescriptor& o) const {
    return kind == o.kind && primes == o.primes && q == o.q && p == o.p && k == o.k &&
           precision == o.precision;
}

std::string FieldDescriptor::to_string() const {
    switch (kind) {
        case FieldKind::Rationals: {
            std::string s = "Q[";
            for (std::size_t i = 0; i < primes.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(primes[i]);
            }
            return s + "]";
        }
        case FieldKind::QAdic:
            return "Qp:" + std::to_string(q) + ":prec=" + std::to_string(precision);
        case FieldKind::Laurent:
            return "Laurent:" + std::to_string(p) + "^" + std::to_string(k) +
                   ":prec=" + std::to_string(precision);
        case FieldKind::Composite:
            return "Comp:" + std::to_string(q) + ":prec=" + std::to_string(precision);
    }
    return "?";
}

std::int64_t ValuationRingRef::residue_characteristic() const {
    if (chain_index == 0) return field.characteristic();
    switch (field.kind) {
        case FieldKind::Rationals: return rational_prime();
        case FieldKind::QAdic: return field.q;
        case FieldKind::Laurent: return field.p;
        case FieldKind::Composite: return chain_index == 1 ? 0 : field.q;
    }
    return 0;
}

std::int64_t ValuationRingRef::rational_prime() const {
    if (field.kind != FieldKind::Rationals || chain_index < 1 ||
        chain_index > static_cast<int>(field.primes.size()))
        throw Error("rational_prime: not a rational localization member");
    return field.primes[static_cast<std::size_t>(chain_index - 1)];
}

std::string ValuationRingRef::to_string() const {
    if (chain_index == 0) return "trivial(" + field.to_string() + ")";
    switch (field.kind) {
        case FieldKind::Rationals:
            return "Z_(" + std::to_string(rational_prime()) + ")";
        case FieldKind::QAdic: return "Z_" + std::to_string(field.q);
        case FieldKind::Laurent:
            return "F_" + std::to_string(field.p) +
                   (field.k > 1 ? "^" + std::to_string(field.k) : "") + "[[t]]";
        case FieldKind::Composite:
            return chain_index == 1 ? "O_t(Qp:" + std::to_string(field.q) + ")"
                                    : "O_comp(Qp:" + std::to_string(field.q) + ")";
    }
    return "?";
}

ResidueFieldDesc residue_field_of(const ValuationRingRef& ring) {
    ResidueFieldDesc r;
    if (ring.chain_index == 0) {
        if (ring.field.kind == FieldKind::Laurent) {
            // residue field of the trivial ring is the field itself; for
            // ordering questions only the characteristic matters
            r.kind = ResidueFieldDesc::Kind::Global;
            r.global_field = ring.field;
            return r;
        }
        r.kind = ResidueFieldDesc::Kind::Global;
        r.global_field = ring.field;
        return r;
    }
    switch (ring.field.kind) {
        case FieldKind::Rationals:
            r.kind = ResidueFieldDesc::Kind::Finite;
            r.p = ring.rational_prime();
            r.k = 1;
            return r;
        case FieldKind::QAdic:
            r.kind = ResidueFieldDesc::Kind::Finite;
            r.p = ring.field.q;
            r.k = 1;
            return r;
        case FieldKind::Laurent:
            r.kind = ResidueFieldDesc::Kind::Finite;
            r.p = ring.field.p;
            r.k = ring.field.k;
            return r;
        case FieldKind::Composite:
            if (ring.chain_index == 1) {
                r.kind = ResidueFieldDesc::Kind::QAdicField;
                r.p = ring.field.q;
                return r;
            }
            r.kind = ResidueFieldDesc::Kind::Finite;
            r.p = ring.field.q;
            r.k = 1;
            return r;
    }
    return r;
}

std::string ResidueFieldDesc::to_string() const {
    switch (kind) {
        case Kind::Finite:
            return "F_" + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "");
        case Kind::QAdicField: return "Qp:" + std::to_string(p);
        case Kind::Global: return global_field.to_string();
    }
    return "?";
}

} // namespace ogval
