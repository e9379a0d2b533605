#pragma once

#include <vector>

#include "ogval/errors.hpp"

namespace ogval {

/// Dense univariate polynomial over a coefficient ring with value semantics,
/// low-degree first.  Just enough surface for Newton/Hensel work: evaluation
/// and the formal derivative.
template <class C>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error("Polynomial: empty coefficient list");
    }

    const std::vector<C>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    C eval(const C& x) const {
        C acc = c_.back();
        for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i)
            acc = acc * x + c_[static_cast<std::size_t>(i)];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) throw Error("derivative of a constant is identically zero");
        std::vector<C> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            C term = c_[i];
            for (std::size_t j = 1; j < i; ++j) term = term + c_[i]; // i * c_i
            d.push_back(term);
        }
        return Polynomial(std::move(d));
    }

  private:
    std::vector<C> c_;
};

} // namespace ogval
