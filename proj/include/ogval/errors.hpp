#pragma once

#include <stdexcept>
#include <string>

namespace ogval {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An operation could not certify an exact valuation (or an exact digit
// window) within the field's precision budget.  Results are never silently
// truncated; callers either get an exact answer or this.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

struct RankMismatch : Error {
    explicit RankMismatch(const std::string& what) : Error(what) {}
};

struct NegativeValuation : Error {
    explicit NegativeValuation(const std::string& what) : Error(what) {}
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& what) : Error(what) {}
};

struct NoSimpleRoot : Error {
    explicit NoSimpleRoot(const std::string& what) : Error(what) {}
};

struct RingMismatch : Error {
    explicit RingMismatch(const std::string& what) : Error(what) {}
};

struct NotAnIdeal : Error {
    explicit NotAnIdeal(const std::string& what) : Error(what) {}
};

struct CaseViolation : Error {
    explicit CaseViolation(const std::string& what) : Error(what) {}
};

struct HypothesisViolation : Error {
    explicit HypothesisViolation(const std::string& what) : Error(what) {}
};

struct ImproperSubgroup : Error {
    explicit ImproperSubgroup(const std::string& what) : Error(what) {}
};

struct SemanticError : Error {
    explicit SemanticError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

} // namespace ogval
