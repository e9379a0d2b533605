#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ogval/errors.hpp"

namespace ogval {

/// Exact rationals are GMP's canonicalized mpq: gcd(|num|, den) = 1, den > 0.
using BigRational = mpq_class;

BigRational rational_of(long num, long den = 1);
BigRational rational_from_string(const std::string& s);

/// p-adic valuation of a nonzero integer.
std::int64_t int_valuation(const mpz_class& n, const mpz_class& p);

/// p-adic valuation of a nonzero rational (v(num) - v(den)).
std::int64_t rational_valuation(const BigRational& x, const mpz_class& p);

bool is_prime(const mpz_class& n);

/// x = y^q for some rational y?  Exact: integer q-th roots of the
/// canonicalized numerator and denominator, plus the sign rule for even q.
std::optional<BigRational> rational_qth_root(const BigRational& x, unsigned q);

/// Smallest prime factor found by trial division, or nullopt for +-1.
std::optional<mpz_class> smallest_prime_factor(const mpz_class& n);

/// max(|num|, den) as an ordering key for bounded searches.
mpz_class rational_height(const BigRational& x);

std::string rational_to_string(const BigRational& x);

} // namespace ogval
