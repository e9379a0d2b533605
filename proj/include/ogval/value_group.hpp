#pragma once

#include <cstdint>
#include <compare>
#include <string>

#include "ogval/errors.hpp"

namespace ogval {

/// An element of the value group Z or Z x Z (lexicographic, first coordinate
/// dominant), or the distinguished top element Infinity with v(0) = Infinity.
/// Infinity absorbs addition and is strictly greater than every finite
/// element of either rank.
class ValueGroupElement {
  public:
    ValueGroupElement() : inf_(true), rank_(0), a_(0), b_(0) {}

    static ValueGroupElement infinity() { return ValueGroupElement(); }
    static ValueGroupElement of(std::int64_t a) {
        ValueGroupElement g;
        g.inf_ = false;
        g.rank_ = 1;
        g.a_ = a;
        return g;
    }
    static ValueGroupElement of(std::int64_t a, std::int64_t b) {
        ValueGroupElement g;
        g.inf_ = false;
        g.rank_ = 2;
        g.a_ = a;
        g.b_ = b;
        return g;
    }

    bool is_infinity() const { return inf_; }
    int rank() const { return rank_; }
    std::int64_t first() const { return a_; }
    std::int64_t second() const { return b_; }

    /// For rank 1 this is the single coordinate; rejects rank-2 values.
    std::int64_t as_integer() const {
        if (inf_ || rank_ != 1)
            throw RankMismatch("as_integer: not a finite rank-1 value");
        return a_;
    }

    enum class Order { Less, Equal, Greater };

    Order compare(const ValueGroupElement& o) const {
        if (inf_ && o.inf_) return Order::Equal;
        if (inf_) return Order::Greater;
        if (o.inf_) return Order::Less;
        if (rank_ != o.rank_)
            throw RankMismatch("vg_compare: rank " + std::to_string(rank_) +
                               " vs " + std::to_string(o.rank_));
        if (a_ != o.a_) return a_ < o.a_ ? Order::Less : Order::Greater;
        if (rank_ == 2 && b_ != o.b_) return b_ < o.b_ ? Order::Less : Order::Greater;
        return Order::Equal;
    }

    bool operator==(const ValueGroupElement& o) const { return compare(o) == Order::Equal; }
    bool operator!=(const ValueGroupElement& o) const { return !(*this == o); }
    bool operator<(const ValueGroupElement& o) const { return compare(o) == Order::Less; }
    bool operator<=(const ValueGroupElement& o) const { return compare(o) != Order::Greater; }
    bool operator>(const ValueGroupElement& o) const { return compare(o) == Order::Greater; }
    bool operator>=(const ValueGroupElement& o) const { return compare(o) != Order::Less; }

    ValueGroupElement operator+(const ValueGroupElement& o) const {
        if (inf_ || o.inf_) return infinity();
        if (rank_ != o.rank_) throw RankMismatch("vg add: rank mismatch");
        return rank_ == 1 ? of(a_ + o.a_) : of(a_ + o.a_, b_ + o.b_);
    }

    ValueGroupElement operator-() const {
        if (inf_) throw RankMismatch("vg negate: Infinity has no inverse");
        return rank_ == 1 ? of(-a_) : of(-a_, -b_);
    }

    ValueGroupElement operator-(const ValueGroupElement& o) const { return *this + (-o); }

    ValueGroupElement scaled(std::int64_t n) const {
        if (inf_) return infinity();
        return rank_ == 1 ? of(n * a_) : of(n * a_, n * b_);
    }

    /// Minimal positive element of the ambient group: 1, or (0,1) for Z x Z lex.
    static ValueGroupElement minimal_positive(int rank) {
        return rank == 1 ? of(1) : of(0, 1);
    }

    ValueGroupElement successor() const {
        if (inf_) return infinity();
        return *this + minimal_positive(rank_);
    }

    static ValueGroupElement zero(int rank) { return rank == 1 ? of(0) : of(0, 0); }

    static ValueGroupElement min(const ValueGroupElement& x, const ValueGroupElement& y) {
        return x <= y ? x : y;
    }
    static ValueGroupElement max(const ValueGroupElement& x, const ValueGroupElement& y) {
        return x >= y ? x : y;
    }

    std::string to_string() const {
        if (inf_) return "inf";
        if (rank_ == 1) return std::to_string(a_);
        return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
    }

  private:
    bool inf_;
    int rank_;
    std::int64_t a_, b_;
};

using VGE = ValueGroupElement;

} // namespace ogval
