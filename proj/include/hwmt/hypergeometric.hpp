#ifndef HWMT_HYPERGEOMETRIC_HPP
#define HWMT_HYPERGEOMETRIC_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"

namespace hwmt {

/// pFq(numerators; denominators | c * psi^e).
struct HypergeometricData {
    std::vector<Rational> numerators;
    std::vector<Rational> denominators;
    Rational c = 1;
    int e = 1;

    /// Exact argument at a rational psi.
    Rational argument(const Rational& psi) const {
        if (e < 0 && psi == 0) throw Error(Errc::PsiNotInvertible, "psi = 0 with a negative exponent");
        Rational z = c;
        const Rational base = e >= 0 ? psi : Rational(1) / psi;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) z *= base;
        return z;
    }

    /// Multisets compared after sorting.
    bool same_parameters(const HypergeometricData& o) const {
        auto a = numerators, b = o.numerators, c1 = denominators, d = o.denominators;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::sort(c1.begin(), c1.end());
        std::sort(d.begin(), d.end());
        return a == b && c1 == d;
    }

    bool operator==(const HypergeometricData& o) const { return same_parameters(o) && c == o.c && e == o.e; }

    std::string argument_string(const std::string& var = "psi") const {
        if (e == 0) return hwmt::to_string(c);
        std::string pw = var + (e == 1 || e == -1 ? "" : "^" + std::to_string(e < 0 ? -e : e));
        if (e < 0) return hwmt::to_string(c) + "/" + pw;
        const std::string sign = c < 0 ? "-" : "";
        const Rational a = c < 0 ? Rational(-c) : c;
        if (a == 1) return sign + pw;
        if (is_integer(a)) return sign + hwmt::to_string(a) + "*" + pw;
        if (numerator(a) == 1) return sign + pw + "/" + hwmt::to_string(Rational(1 / a));
        return sign + hwmt::to_string(a) + "*" + pw;
    }

    std::string to_string(const std::string& var = "psi") const {
        auto join = [](const std::vector<Rational>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + hwmt::to_string(v[i]);
            return s;
        };
        return std::to_string(numerators.size()) + "F" + std::to_string(denominators.size()) + "(" +
               join(numerators) + ";" + join(denominators) + " | " + argument_string(var) + ")";
    }
};

struct TruncatedValue {
    std::uint64_t prime = 0;
    Residue value = 0;
    std::size_t terms_used = 0;
};

/// (a)_n mod p for a = r/s with p not dividing s.
inline Residue pochhammer_mod_p(const Rational& a, std::uint64_t n, const PrimeField& f) {
    const Residue base = f.from_rational(a);
    Residue r = 1 % f.prime();
    for (std::uint64_t j = 0; j < n; ++j) r = f.mul(r, f.add(base, j % f.prime()));
    return r;
}

inline Residue pochhammer_mod_p(const Rational& a, std::uint64_t n, std::uint64_t p) {
    return pochhammer_mod_p(a, n, PrimeField(p));
}

/// Reduces c * psi^e mod p.
inline Residue argument_mod_p(const HypergeometricData& d, const Rational& psi, const PrimeField& f) {
    if (d.e < 0 && f.from_integer(numerator(psi)) == 0)
        throw Error(Errc::PsiNotInvertible, "psi = " + to_string(psi) + " vanishes mod " + std::to_string(f.prime()));
    const Residue x = f.from_rational(psi);
    const Residue base = d.e >= 0 ? x : f.inv(x);
    return f.mul(f.from_rational(d.c), f.pow(base, static_cast<std::uint64_t>(d.e >= 0 ? d.e : -d.e)));
}

/// Coefficient of z^n in the series, reduced mod p. Only n < p is meaningful:
/// beyond that n! vanishes mod p.
inline Residue hypergeometric_coefficient_mod_p(const HypergeometricData& d, std::uint64_t n, const PrimeField& f) {
    if (n >= f.prime())
        throw Error(Errc::TruncationOverrun, "term " + std::to_string(n) + " requested mod " + std::to_string(f.prime()));
    Residue num = 1, den = f.factorials()[n];
    for (const auto& a : d.numerators) num = f.mul(num, pochhammer_mod_p(a, n, f));
    for (const auto& b : d.denominators) den = f.mul(den, pochhammer_mod_p(b, n, f));
    if (den == 0)
        throw Error(Errc::BadDenominator, "lower Pochhammer symbol vanishes mod " + std::to_string(f.prime()));
    return f.mul(num, f.inv(den));
}

/// Sum of the first p terms at a given residue argument.
inline TruncatedValue truncated_pFq_at(const HypergeometricData& d, Residue z, const PrimeField& f) {
    const std::uint64_t p = f.prime();
    Residue s = 0, zn = 1;
    for (std::uint64_t n = 0; n < p; ++n) {
        s = f.add(s, f.mul(hypergeometric_coefficient_mod_p(d, n, f), zn));
        zn = f.mul(zn, z);
    }
    return {p, s, static_cast<std::size_t>(p)};
}

/// [pFq(d; c psi^e)]^(p-1) mod p.
inline TruncatedValue truncated_pFq(const HypergeometricData& d, const Rational& psi, const PrimeField& f) {
    return truncated_pFq_at(d, argument_mod_p(d, psi, f), f);
}

inline TruncatedValue truncated_pFq(const HypergeometricData& d, const Rational& psi, std::uint64_t p) {
    return truncated_pFq(d, psi, PrimeField(p));
}

/// Exact coefficients of z^0..z^N of the formal series.
inline std::vector<Rational> hypergeometric_series(const std::vector<Rational>& numerators,
                                                   const std::vector<Rational>& denominators, std::size_t n_max) {
    std::vector<Rational> out;
    Rational t = 1;
    for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(t);
        Rational ratio = 1;
        for (const auto& a : numerators) ratio *= a + static_cast<long>(n);
        for (const auto& b : denominators) {
            const Rational bn = b + static_cast<long>(n);
            if (bn == 0) throw Error(Errc::InvalidArgument, "lower parameter is a nonpositive integer");
            ratio /= bn;
        }
        ratio /= static_cast<long>(n + 1);
        t *= ratio;
    }
    return out;
}

inline std::vector<Rational> series_square(const std::vector<Rational>& a) {
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * a[j];
    return out;
}

/// The 3F2 that Clausen's formula pairs with 2F1(a, b; a+b+1/2).
inline HypergeometricData clausen_partner(const Rational& a, const Rational& b, const Rational& c, int e) {
    return {{2 * a, 2 * b, a + b}, {2 * a + 2 * b, a + b + Rational(1, 2)}, c, e};
}

inline HypergeometricData clausen_square_root(const Rational& a, const Rational& b, const Rational& c, int e) {
    return {{a, b}, {a + b + Rational(1, 2)}, c, e};
}

/// Series-level Clausen identity 2F1(a,b;a+b+1/2)^2 = 3F2(2a,2b,a+b;2a+2b,a+b+1/2)
/// through z^n_max, in exact arithmetic.
inline bool clausen_series_check(const Rational& a, const Rational& b, std::size_t n_max) {
    const auto lhs = series_square(hypergeometric_series({a, b}, {a + b + Rational(1, 2)}, n_max));
    const auto rhs = hypergeometric_series({2 * a, 2 * b, a + b}, {2 * a + 2 * b, a + b + Rational(1, 2)}, n_max);
    return lhs == rhs;
}

struct ClausenResult {
    bool holds = false;
    Residue square_of_2f1 = 0;
    Residue value_3f2 = 0;
};

/// Truncated Clausen comparison mod p. A mismatch is a legitimate outcome.
inline ClausenResult clausen_check(const Rational& a, const Rational& b, const Rational& c, int e, const Rational& psi,
                                   std::uint64_t p) {
    const PrimeField f(p);
    const Residue two = truncated_pFq(clausen_square_root(a, b, c, e), psi, f).value;
    const Residue three = truncated_pFq(clausen_partner(a, b, c, e), psi, f).value;
    const Residue sq = f.mul(two, two);
    return {sq == three, sq, three};
}

enum class QuadraticCharacter { Zero, Residue, Nonresidue };

inline std::string_view to_string(QuadraticCharacter q) {
    switch (q) {
    case QuadraticCharacter::Zero: return "zero";
    case QuadraticCharacter::Residue: return "residue";
    case QuadraticCharacter::Nonresidue: return "nonresidue";
    }
    return "?";
}

/// Euler's criterion.
inline QuadraticCharacter quadratic_residue_check(Residue value, std::uint64_t p) {
    if (p == 2) throw Error(Errc::InvalidArgument, "p must be odd");
    const PrimeField f(p);
    value %= p;
    if (value == 0) return QuadraticCharacter::Zero;
    return f.pow(value, (p - 1) / 2) == 1 ? QuadraticCharacter::Residue : QuadraticCharacter::Nonresidue;
}

} // namespace hwmt

#endif
