#pragma once

#include <cstdint>
#include <random>

#include "ogval/element.hpp"

namespace ogval {

/// Deterministic seeded sampler.  All randomized checks in the library draw
/// through this class only, and avoid std distributions, so a (seed, trial)
/// pair reproduces byte-identically on any platform.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }

    /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (next() & 1) != 0; }

    FFElem ff_any(const std::shared_ptr<const FFContext>& ctx) {
        return FFElem::from_index(ctx, next() % ctx->order());
    }

    FFElem ff_nonzero(const std::shared_ptr<const FFContext>& ctx) {
        return FFElem::from_index(ctx, 1 + next() % (ctx->order() - 1));
    }

    /// Nonzero element with finest-stage valuation in [vlo, vhi].  For the
    /// composite field the t-adic coordinate is drawn from [vlo, vhi] and the
    /// q-adic coordinate of the leading coefficient from a small fixed range.
    Element element(const FieldDescriptor& f, std::int64_t vlo, std::int64_t vhi);

    /// Element with valuation exactly 0 (exactly (0,0) for the composite).
    Element unit(const FieldDescriptor& f);

    /// Nonzero rational of bounded height (for searches over Q).
    BigRational rational(std::int64_t max_height);

  private:
    std::mt19937_64 rng_;
};

} // namespace ogval
