#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "ogval/element.hpp"
#include "ogval/field.hpp"
#include "ogval/value_group.hpp"

namespace ogval {

struct FractionalIdealCut; // ideal_cut.hpp

/// Why an element is certified outside a subgroup.  Certificates are typed
/// so reports stay machine-checkable.
struct NonMemberCertificate {
    enum class Kind {
        Valuation,    ///< q does not divide the valuation (coordinate named)
        ResidueClass, ///< residue/unit congruence class excluded
        Trace,        ///< Artin-Schreier trace obstruction
        Mod8,         ///< the 2-adic square criterion u = 1 (mod 8)
        Oracle,       ///< the oracle predicate said no
        Cut,          ///< valuation below the ideal cut
    };
    Kind kind;
    std::string detail;
};

struct MembershipVerdict {
    enum class Answer { Member, NonMember, Unknown };
    Answer answer;
    std::optional<Element> witness;             ///< Member: y with y^q = x or y^p - y = x
    std::optional<NonMemberCertificate> certificate;
    std::string note;                           ///< Unknown: budget note

    bool is_member() const { return answer == Answer::Member; }
    bool is_nonmember() const { return answer == Answer::NonMember; }
    bool is_unknown() const { return answer == Answer::Unknown; }

    static MembershipVerdict member(std::optional<Element> w = std::nullopt) {
        return {Answer::Member, std::move(w), std::nullopt, {}};
    }
    static MembershipVerdict nonmember(NonMemberCertificate::Kind k, std::string detail) {
        return {Answer::NonMember, std::nullopt, NonMemberCertificate{k, std::move(detail)}, {}};
    }
    static MembershipVerdict unknown(std::string note) {
        return {Answer::Unknown, std::nullopt, std::nullopt, std::move(note)};
    }
};

/// One of the subgroup families the engine can decide membership for, plus
/// black-box oracles.  PowerGroup is multiplicative; ArtinSchreier and
/// IdealGroup are additive.
struct SubgroupDescriptor {
    enum class Variant { PowerGroup, ArtinSchreier, IdealGroup, Oracle };
    Variant variant = Variant::PowerGroup;
    std::int64_t q = 0;                         ///< PowerGroup exponent / ArtinSchreier char
    std::shared_ptr<const FractionalIdealCut> cut; ///< IdealGroup
    std::function<std::optional<bool>(const Element&)> oracle; ///< Oracle: nullopt = unknown
    bool oracle_multiplicative = false;
    std::string oracle_name;

    bool multiplicative() const {
        return variant == Variant::PowerGroup ||
               (variant == Variant::Oracle && oracle_multiplicative);
    }
    bool additive() const { return !multiplicative(); }

    static SubgroupDescriptor power(std::int64_t q);
    static SubgroupDescriptor artin_schreier(std::int64_t p);
    static SubgroupDescriptor ideal(const FractionalIdealCut& cut);
    static SubgroupDescriptor oracle_group(std::function<std::optional<bool>(const Element&)> fn,
                                           bool multiplicative, std::string name);

    std::string to_string() const;
};

/// Decision procedure for x in (K^x)^q over every built-in field.  Member
/// verdicts carry a verified witness; NonMember verdicts carry a typed
/// certificate (valuation indivisibility, residue class, unit congruence).
MembershipVerdict is_qth_power(const Element& x, std::int64_t q);

/// Decision procedure for x in K^(p) = { y^p - y } over Laurent fields of
/// characteristic p, by leading-term reduction and the trace criterion.
MembershipVerdict artin_schreier_member(const Element& x, std::int64_t p);

/// Dispatch on the subgroup family.
MembershipVerdict subgroup_member(const Element& x, const SubgroupDescriptor& g);

/// Membership of residue(x) in the residue subgroup rho(G), answered through
/// membership of x itself; valid in the group and residue cases only
/// (CaseViolation in the weak case).
MembershipVerdict residue_subgroup_member(const Element& x, const SubgroupDescriptor& g,
                                          const ValuationRingRef& ring);

/// Ordering detector for a multiplicative subgroup P of a residue field.
/// Only refutations are certified; sampling can never prove an ordering.
struct OrderingVerdict {
    enum class Answer { No, Unknown };
    Answer answer;
    std::string witness; ///< No: the obstruction found
};

OrderingVerdict is_ordering(const ResidueFieldDesc& residue_field,
                            const std::function<MembershipVerdict(const Element&)>& member,
                            int budget, std::uint64_t seed);

/// Does K contain a primitive q-th root of unity?  Exact unit-group
/// arithmetic per field kind; for the composite field the convention is the
/// t-adic residue field's constants, i.e. the usual q-adic rule.
bool has_root_of_unity(const FieldDescriptor& k, std::int64_t q);

/// Verify a Member witness by independent recomputation: y^q = x, or
/// y^p - y = x, to the field's precision.
bool verify_witness(const Element& x, const SubgroupDescriptor& g, const Element& witness);

} // namespace ogval
