#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ogval/errors.hpp"
#include "ogval/field.hpp"
#include "ogval/finite_field.hpp"
#include "ogval/rational.hpp"
#include "ogval/value_group.hpp"

namespace ogval {

// ---------------------------------------------------------------------------
// Internal payloads.  Every inexact payload is in one of three states:
//   Zero     exactly 0
//   Nonzero  valuation exact, unit cofactor known to `digits` places
//   Fuzzy    only a strict lower bound on the valuation is certified
// Fuzzy values arise from full cancellation.  They never pretend to carry an
// exact valuation: val() refuses them with PrecisionExhausted.
// ---------------------------------------------------------------------------

enum class MagState { Zero, Nonzero, Fuzzy };

/// q-adic number: q^val * unit with 0 < unit < q^digits, unit % q != 0.
struct Padic {
    MagState st = MagState::Zero;
    std::int64_t val = 0;
    mpz_class unit;
    int digits = 0;
    std::int64_t bound = 0; ///< Fuzzy: certified val > bound
};

/// Truncated Laurent series over F_{p^k}: t^val * (c_0 + c_1 t + ...) with
/// c_0 != 0 and coef.size() known coefficients.
struct FpkSeries {
    MagState st = MagState::Zero;
    std::int64_t val = 0;
    std::vector<FFElem> coef;
    std::int64_t bound = 0; ///< Fuzzy: certified val > bound
};

/// Truncated Laurent series over Q_q (the composite field): t^tval * sum of
/// Padic coefficients, coef[0] certified Nonzero.  Fuzziness can live either
/// at series level (t-valuation uncertain) or inside a leading coefficient.
struct PadicSeries {
    MagState st = MagState::Zero;
    std::int64_t tval = 0;
    std::vector<Padic> coef;
    // Fuzzy: certified val >lex (bound_t, *) when !bound_q, else > (bound_t, *bound_q)
    std::int64_t bound_t = 0;
    std::optional<std::int64_t> bound_q;
};

class ResidueElement;

/// An exact field element with tracked valuation and unit part at the
/// field's finite precision.  Arithmetic either certifies the result's exact
/// valuation or the element degrades to a fuzzy state whose valuation
/// accessors throw PrecisionExhausted; valuations are never silently
/// truncated.
class Element {
  public:
    Element() = default;

    static Element zero(const FieldDescriptor& f);
    static Element one(const FieldDescriptor& f);
    static Element from_integer(const FieldDescriptor& f, std::int64_t n);
    static Element from_integer(const FieldDescriptor& f, const mpz_class& n);
    static Element from_rational(const FieldDescriptor& f, const BigRational& x);
    /// The canonical uniformizer: the attached prime (Rationals: first listed
    /// unless `stage` picks another), q, or t.  For the composite field
    /// stage 1 is t and stage 2 is q.
    static Element uniformizer(const FieldDescriptor& f, int stage = -1);

    /// Assemble a q-adic element q^val * unit (unit must be a q-unit).
    static Element qadic(const FieldDescriptor& f, std::int64_t val, const mpz_class& unit);
    /// Assemble a Laurent element t^val * (coef[0] + coef[1] t + ...).
    static Element laurent(const FieldDescriptor& f, std::int64_t val, std::vector<FFElem> coef);
    /// Assemble a composite element t^tval * (coef[0] + coef[1] t + ...),
    /// coefficients given as elements of Q_q.
    static Element composite(const FieldDescriptor& f, std::int64_t tval,
                             const std::vector<Element>& qadic_coefs);

    const FieldDescriptor& field() const { return field_; }

    bool is_exact_zero() const;
    bool is_certified_nonzero() const;
    bool is_fuzzy() const;

    /// Exact valuation in the full value group; v(0) = Infinity.
    VGE val() const;
    /// Valuation seen by a chain member's stage: Rationals members measure at
    /// their own prime, the composite's t-stage projects to the first
    /// coordinate.  Trivial rings have the trivial group {0}.
    VGE val_at(const ValuationRingRef& ring) const;

    /// Certified v(x) >= k, where k counts in the finest discrete stage
    /// (t-adic coordinate for the composite field).  True for exact zero;
    /// false when certification falls short (never throws).
    bool vanishes_to(std::int64_t k) const;

    /// Certified v(x) >= g in the full value group.  Returns false only when
    /// the exact valuation is known and below g; throws PrecisionExhausted
    /// when fuzziness leaves the comparison undecided.
    bool val_at_least(const VGE& g) const;

    /// Same decision at the finest discrete stage (t-adic for the composite).
    bool stage_val_at_least(std::int64_t k) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element operator/(const Element& o) const;
    Element inverse() const;
    Element pow(const mpz_class& e) const; ///< negative e inverts first

    /// Number of base-digit places certified for the unit part (precision N
    /// for freshly constructed elements).
    int known_digits() const;

    // --- payload accessors (throw FieldMismatch when the kind is wrong) ---
    const BigRational& rational_value() const;
    const Padic& padic_payload() const;
    const FpkSeries& laurent_payload() const;
    const PadicSeries& composite_payload() const;
    /// Composite coefficient i (of t^{tval+i}) as an element of Q_q.
    Element composite_coefficient(int i) const;

    std::string to_string() const;

    // internal constructors used by the arithmetic kernels
    Element(FieldDescriptor f, BigRational v);
    Element(FieldDescriptor f, Padic v);
    Element(FieldDescriptor f, FpkSeries v);
    Element(FieldDescriptor f, PadicSeries v);

  private:
    void check_same_field(const Element& o, const char* op) const;

    FieldDescriptor field_;
    std::variant<std::monostate, BigRational, Padic, FpkSeries, PadicSeries> payload_;
};

/// Image under the residue homomorphism: an element of F_{p^k}, or of Q_q
/// for the t-adic stage of the composite field, or a rational for the
/// trivial ring on Q.
class ResidueElement {
  public:
    explicit ResidueElement(FFElem v) : payload_(std::move(v)) {}
    explicit ResidueElement(Element qadic_or_rational) : payload_(std::move(qadic_or_rational)) {}

    bool is_finite_field() const { return std::holds_alternative<FFElem>(payload_); }
    const FFElem& finite_value() const { return std::get<FFElem>(payload_); }
    const Element& element_value() const { return std::get<Element>(payload_); }

    bool is_zero() const;
    std::string to_string() const;

  private:
    std::variant<FFElem, Element> payload_;
};

/// Residue map at the finest chain member of the element's field.
ResidueElement residue(const Element& x);
/// Residue map at an explicit chain member.
ResidueElement residue_at(const Element& x, const ValuationRingRef& ring);

/// v(x - y) certified >= k (finest discrete stage); the working notion of
/// equality at precision.
bool equal_to_precision(const Element& x, const Element& y, std::int64_t k);

} // namespace ogval
