#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ogval/errors.hpp"
#include "ogval/finite_field.hpp"

namespace ogval {

enum class FieldKind {
    Rationals, ///< Q with a list of attached p-adic valuations
    QAdic,     ///< Q_q at finite precision
    Laurent,   ///< F_{p^k}((t)) at finite precision
    Composite, ///< Q_q((t)) with the rank-2 lex valuation (t-adic first)
};

/// Which concrete valued field is in play, plus its precision budget N
/// (significant digits / series coefficients carried by every element).
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    std::vector<std::int64_t> primes; ///< Rationals: attached primes, distinct
    std::int64_t q = 0;               ///< QAdic / Composite prime
    std::int64_t p = 0;               ///< Laurent characteristic
    int k = 1;                        ///< Laurent extension degree
    int precision = 64;               ///< N >= 8

    static FieldDescriptor rationals(std::vector<std::int64_t> primes);
    static FieldDescriptor qadic(std::int64_t q, int precision = 64);
    static FieldDescriptor laurent(std::int64_t p, int k, int precision = 64);
    static FieldDescriptor composite(std::int64_t q, int precision = 64);

    std::int64_t characteristic() const {
        return kind == FieldKind::Laurent ? p : 0;
    }

    /// Rank of the full value group: 2 for the composite field, else 1.
    int value_rank() const { return kind == FieldKind::Composite ? 2 : 1; }

    /// Number of members of the canonical coarsening chain including the
    /// trivial ring at index 0.  Rationals get one member per attached prime.
    int chain_length() const;

    bool operator==(const FieldDescriptor& o) const;
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

    std::string to_string() const;
};

/// A member of the canonical coarsening chain of a field: index 0 is the
/// trivial ring K, larger indices are finer.  For the composite field the
/// chain is [K, O_t, O_composite]; for Q with attached primes the members at
/// index i >= 1 are the localizations Z_(p_i) (pairwise incomparable, which
/// classify() tolerates: only coarsely compatible members must be
/// comparable, and that is checked on reports).
struct ValuationRingRef {
    FieldDescriptor field;
    int chain_index = 0;

    bool is_trivial() const { return chain_index == 0; }

    /// Rank of this member's value group stage (1 everywhere except the
    /// composite ring itself).
    int stage_rank() const {
        return (field.kind == FieldKind::Composite && chain_index == 2) ? 2 : 1;
    }

    /// Residue characteristic of this chain member (0 for the trivial ring
    /// and for the t-adic stage of the composite, whose residue field is Q_q).
    std::int64_t residue_characteristic() const;

    /// The attached prime for Rationals members (chain_index >= 1).
    std::int64_t rational_prime() const;

    bool operator==(const ValuationRingRef& o) const {
        return field == o.field && chain_index == o.chain_index;
    }

    std::string to_string() const;
};

/// Description of the residue field of a chain member.
struct ResidueFieldDesc {
    enum class Kind { Finite, QAdicField, Global } kind = Kind::Global;
    std::int64_t p = 0; ///< Finite: characteristic; QAdicField: the prime q
    int k = 1;          ///< Finite: extension degree
    FieldDescriptor global_field; ///< Global: the field itself (trivial ring)

    std::int64_t characteristic() const { return kind == Kind::Finite ? p : 0; }
    std::string to_string() const;
};

ResidueFieldDesc residue_field_of(const ValuationRingRef& ring);

} // namespace ogval
