#include "ogval/rational.hpp"

namespace ogval {

BigRational rational_of(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    BigRational x(num, den);
    x.canonicalize();
    return x;
}

BigRational rational_from_string(const std::string& s) {
    try {
        BigRational x(s);
        if (x.get_den() == 0) throw DivisionByZero("rational with zero denominator");
        x.canonicalize();
        return x;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + s + "'", 0);
    }
}

std::int64_t int_valuation(const mpz_class& n, const mpz_class& p) {
    if (n == 0) throw ZeroInput("int_valuation(0)");
    mpz_class rest;
    return static_cast<std::int64_t>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::int64_t rational_valuation(const BigRational& x, const mpz_class& p) {
    if (x == 0) throw ZeroInput("rational_valuation(0)");
    return int_valuation(x.get_num(), p) - int_valuation(x.get_den(), p);
}

bool is_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::optional<BigRational> rational_qth_root(const BigRational& x, unsigned q) {
    if (q == 0) throw Error("rational_qth_root: q = 0");
    if (x == 0) return BigRational(0);
    bool neg = x < 0;
    if (neg && q % 2 == 0) return std::nullopt;
    mpz_class num = abs(mpz_class(x.get_num()));
    mpz_class den = x.get_den();
    mpz_class rn, rd;
    bool en = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), q) != 0;
    bool ed = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), q) != 0;
    if (!en || !ed) return std::nullopt;
    BigRational y(neg ? mpz_class(-rn) : rn, rd);
    y.canonicalize();
    return y;
}

std::optional<mpz_class> smallest_prime_factor(const mpz_class& n) {
    mpz_class m = abs(n);
    if (m <= 1) return std::nullopt;
    if (m % 2 == 0) return mpz_class(2);
    for (mpz_class d = 3; d * d <= m; d += 2)
        if (m % d == 0) return d;
    return m;
}

mpz_class rational_height(const BigRational& x) {
    mpz_class a = abs(mpz_class(x.get_num()));
    mpz_class b = x.get_den();
    return a > b ? a : b;
}

std::string rational_to_string(const BigRational& x) {
    return x.get_str();
}

} // namespace ogval
