#ifndef HWMT_ARITH_HPP
#define HWMT_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace hwmt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Parses `r`, `-r`, `r/s` (no whitespace inside). Throws ParseError.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> Integer {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw Error(Errc::ParseError, "bad rational '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw Error(Errc::ParseError, "bad rational '" + std::string(text) + "'");
        return Integer(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

/// Canonical `r/s` form; integers print without a denominator.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

// Overflow-checked 64-bit helpers for lattice computations.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "int64 addition");
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "int64 subtraction");
    return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "int64 multiplication");
    return r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

using Residue = std::uint64_t;

/// Arithmetic in F_p for primes below 2^31, with factorial tables up to p-1.
class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 31)) throw Error(Errc::InvalidArgument, "prime too large");
        if (p <= kTablePrimeLimit) {
            fact_.resize(p);
            fact_[0] = 1;
            for (std::uint64_t i = 1; i < p; ++i) fact_[i] = mul(fact_[i - 1], i);
            inv_fact_.resize(p);
            inv_fact_[p - 1] = inv(fact_[p - 1]);
            for (std::uint64_t i = p - 1; i > 0; --i) inv_fact_[i - 1] = mul(inv_fact_[i], i);
        }
    }

    static constexpr std::uint64_t kTablePrimeLimit = std::uint64_t{1} << 22;

    std::uint64_t prime() const { return p_; }

    Residue add(Residue a, Residue b) const { return (a + b) % p_; }
    Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
    Residue mul(Residue a, Residue b) const { return (a * b) % p_; }
    Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }

    Residue pow(Residue a, std::uint64_t e) const {
        Residue r = 1 % p_;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Residue inv(Residue a) const {
        if (a % p_ == 0) throw Error(Errc::BadDenominator, "zero is not invertible mod " + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    Residue from_int(std::int64_t v) const {
        std::int64_t m = v % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(m < 0 ? m + static_cast<std::int64_t>(p_) : m);
    }

    Residue from_integer(const Integer& z) const {
        Integer m = z % p_;
        if (m < 0) m += p_;
        return static_cast<Residue>(m);
    }

    /// Reduction of r/s; throws BadDenominator when p divides s.
    Residue from_rational(const Rational& r) const {
        Residue den = from_integer(denominator(r));
        if (den == 0)
            throw Error(Errc::BadDenominator,
                        "denominator of " + to_string(r) + " vanishes mod " + std::to_string(p_));
        return mul(from_integer(numerator(r)), inv(den));
    }

    /// n! for 0 <= n < p. Tables exist only for p <= kTablePrimeLimit.
    const std::vector<Residue>& factorials() const {
        if (fact_.empty()) throw Error(Errc::InvalidArgument, "no factorial table for this prime");
        return fact_;
    }

    const std::vector<Residue>& inverse_factorials() const {
        if (inv_fact_.empty()) throw Error(Errc::InvalidArgument, "no factorial table for this prime");
        return inv_fact_;
    }

  private:
    std::uint64_t p_;
    std::vector<Residue> fact_;
    std::vector<Residue> inv_fact_;
};

} // namespace hwmt

#endif
