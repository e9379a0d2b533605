#pragma once

#include <utility>

#include "ogval/element.hpp"
#include "ogval/polynomial.hpp"

namespace ogval {

/// Newton/Hensel lift of a simple root.  Requires the Newton condition
/// v(f(a0)) > 2 v(f'(a0)); iterates a <- a - f(a)/f'(a) until the residual
/// valuation reaches `target` (measured in the finest discrete stage, t-adic
/// for the composite field).  The result r satisfies v(r - a0) > v(f'(a0))
/// and is the unique such root up to the target precision.
Element hensel_lift(const Polynomial<Element>& f, const Element& a0, std::int64_t target);

/// The Teichmuller representative of a unit u of Q_q: the unique (q-1)-st
/// root of unity congruent to u mod q (for q = 2 the set of representatives
/// is {1}).  Computed as the limit of u^{q^n}.
Element teichmuller(const Element& u);

/// y = pi^n * z with pi the canonical uniformizer of the (rank-1) stage and
/// v(z) = 0.  For composite elements pass the chain stage (1 = t, 2 = q).
std::pair<VGE, Element> uniformizer_decompose(const Element& y);

} // namespace ogval
