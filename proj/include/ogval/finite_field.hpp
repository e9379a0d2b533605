#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ogval/errors.hpp"

namespace ogval {

/// Monic polynomial over F_p, coefficients low-degree first, coefficients
/// reduced into [0, p).  This is the representation used for extension-field
/// moduli and for the irreducibility search.
struct FpPolynomial {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> coeffs; // coeffs.back() != 0 unless zero poly

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string to_string(const std::string& var = "x") const;
    bool operator==(const FpPolynomial& o) const = default;
};

/// Deterministic modulus choice: the first monic irreducible polynomial of
/// degree k over F_p in the coefficient-lexicographic enumeration (constant
/// coefficient least significant).  Reproducible across runs by design.
FpPolynomial irreducible_modulus(std::uint32_t p, int k);

bool fp_poly_is_irreducible(const FpPolynomial& f);

/// Shared immutable description of F_{p^k}: p, k and the fixed modulus.
/// Instances are interned, so elements of "the same" field share a context.
class FFContext {
  public:
    static std::shared_ptr<const FFContext> get(std::uint32_t p, int k);

    std::uint32_t p() const { return p_; }
    int k() const { return k_; }
    const FpPolynomial& modulus() const { return modulus_; }
    /// p^k as unsigned 64-bit; rejects fields too large to enumerate.
    std::uint64_t order() const { return order_; }

    FFContext(std::uint32_t p, int k, FpPolynomial modulus);

  private:
    std::uint32_t p_;
    int k_;
    FpPolynomial modulus_;
    std::uint64_t order_;
};

/// An element of F_{p^k} in the polynomial basis over the interned modulus.
class FiniteFieldElement {
  public:
    FiniteFieldElement() = default; // invalid until assigned
    FiniteFieldElement(std::shared_ptr<const FFContext> ctx, std::vector<std::uint32_t> coords);

    static FiniteFieldElement zero(std::shared_ptr<const FFContext> ctx);
    static FiniteFieldElement one(std::shared_ptr<const FFContext> ctx);
    /// Embedding of an integer through the prime field.
    static FiniteFieldElement from_integer(std::shared_ptr<const FFContext> ctx, std::int64_t n);
    /// Element with the given enumeration index in [0, p^k): base-p digits
    /// are the coordinates.
    static FiniteFieldElement from_index(std::shared_ptr<const FFContext> ctx, std::uint64_t idx);

    const std::shared_ptr<const FFContext>& context() const { return ctx_; }
    const std::vector<std::uint32_t>& coords() const { return c_; }
    std::uint64_t index() const;

    bool is_zero() const;

    FiniteFieldElement operator+(const FiniteFieldElement& o) const;
    FiniteFieldElement operator-(const FiniteFieldElement& o) const;
    FiniteFieldElement operator-() const;
    FiniteFieldElement operator*(const FiniteFieldElement& o) const;
    FiniteFieldElement inverse() const;
    FiniteFieldElement pow(std::uint64_t e) const;

    /// Frobenius x -> x^p and its inverse x -> x^{p^{k-1}} (exact p-th root).
    FiniteFieldElement frobenius() const;
    FiniteFieldElement pth_root() const;

    /// Absolute trace Tr_{F_{p^k}/F_p}, returned as an integer in [0, p).
    std::uint32_t trace() const;

    bool operator==(const FiniteFieldElement& o) const;
    bool operator!=(const FiniteFieldElement& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    void check_compatible(const FiniteFieldElement& o, const char* op) const;

    std::shared_ptr<const FFContext> ctx_;
    std::vector<std::uint32_t> c_;
};

using FFElem = FiniteFieldElement;

enum class FFOp { Add, Mul, Inv, Pow };

/// Uniform entry point used by the CLI: add/mul need both operands, inv uses
/// only a, pow raises a to the (non-negative) exponent e.
FiniteFieldElement ff_arith(const FiniteFieldElement& a, const FiniteFieldElement& b, FFOp op,
                            std::uint64_t e = 0);

} // namespace ogval
