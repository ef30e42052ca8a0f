#ifndef HWMT_PICARD_FUCHS_HPP
#define HWMT_PICARD_FUCHS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "family.hpp"

namespace hwmt {

using FunctionMatrix = std::vector<std::vector<RationalFunction>>;

/// dy/dt = M y (raw) or dy/dt = (1/t) M y (scaled).
struct FuchsianSystem {
    FunctionMatrix matrix;
    bool scaled = false;

    std::size_t size() const { return matrix.size(); }
    bool operator==(const FuchsianSystem&) const = default;
};

inline std::string to_string(const FuchsianSystem& s, const std::string& var = "t") {
    std::string out = s.scaled ? "(1/" + var + ")*[" : "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < s.size(); ++j) out += (j ? ", " : "") + s.matrix[i][j].to_string(var);
        out += "]";
    }
    return out + "]";
}

inline std::string to_string(const RationalMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + to_string(m[i][j]);
        out += "]";
    }
    return out + "]";
}

/// Companion system of y^(n) + c_{n-1} y^(n-1) + ... + c_0 y = 0 given c_0 .. c_n.
/// The equation is divided by c_n first.
inline FuchsianSystem companion_matrix(const std::vector<RationalFunction>& ode) {
    if (ode.size() < 2) throw Error(Errc::InvalidArgument, "equation of order zero");
    const RationalFunction& lead = ode.back();
    if (lead.is_zero()) throw Error(Errc::ZeroLeadingCoefficient, "leading coefficient vanishes");
    const std::size_t n = ode.size() - 1;
    FuchsianSystem s{FunctionMatrix(n, std::vector<RationalFunction>(n)), false};
    for (std::size_t i = 0; i + 1 < n; ++i) s.matrix[i][i + 1] = RationalFunction(1);
    for (std::size_t j = 0; j < n; ++j) s.matrix[n - 1][j] = -(ode[j] / lead);
    return s;
}

/// Change of basis Y_i = t^i y_i. The new system is (1/t) M with
/// M_ij = t^(1+i-j) A_ij + i delta_ij.
inline FuchsianSystem gauge_shear(const FuchsianSystem& s) {
    if (s.scaled) throw Error(Errc::InvalidArgument, "gauge shear expects a raw system");
    const std::size_t n = s.size();
    FuchsianSystem out{FunctionMatrix(n, std::vector<RationalFunction>(n)), true};
    const RationalFunction t = RationalFunction::variable();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long power = 1 + static_cast<long>(i) - static_cast<long>(j);
            RationalFunction f = s.matrix[i][j];
            for (long k = 0; k < power; ++k) f *= t;
            for (long k = power; k < 0; ++k) f = f / t;
            if (i == j) f += RationalFunction(Rational(static_cast<long>(i)));
            out.matrix[i][j] = f;
        }
    return out;
}

/// New variable z = t^k. Since dz/z = k dt/t the scaled matrix is divided by k.
inline FuchsianSystem substitute_power(const FuchsianSystem& s, std::size_t k) {
    if (!s.scaled) throw Error(Errc::InvalidArgument, "power substitution expects a scaled system");
    if (k == 0) throw Error(Errc::InvalidArgument, "power must be positive");
    FuchsianSystem out = s;
    const RationalFunction inv_k(Rational(1, static_cast<long>(k)));
    for (auto& row : out.matrix)
        for (auto& f : row) {
            auto g = f.contract_power(k);
            if (!g) throw Error(Errc::NotAPowerFunction, f.to_string() + " is not a function of t^" + std::to_string(k));
            f = *g * inv_k;
        }
    return out;
}

/// New variable l with t = c l; the scaled form is invariant under scaling.
inline FuchsianSystem rescale(const FuchsianSystem& s, const Rational& c) {
    if (!s.scaled) throw Error(Errc::InvalidArgument, "rescaling expects a scaled system");
    if (c == 0) throw Error(Errc::ZeroRescale, "rescale constant is zero");
    FuchsianSystem out = s;
    for (auto& row : out.matrix)
        for (auto& f : row) f = f.scale_variable(c);
    return out;
}

/// The scaled system in zeta = 1/t: (1/zeta) * (-M(1/zeta)).
inline FuchsianSystem at_infinity(const FuchsianSystem& s) {
    if (!s.scaled) throw Error(Errc::InvalidArgument, "expects a scaled system");
    FuchsianSystem out = s;
    for (auto& row : out.matrix)
        for (auto& f : row) f = -f.invert_variable();
    return out;
}

inline RationalMatrix residue_at_zero(const FuchsianSystem& s) {
    if (!s.scaled) throw Error(Errc::InvalidArgument, "residue needs a scaled system");
    RationalMatrix r(s.size(), std::vector<Rational>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
            auto v = s.matrix[i][j].value_at(0);
            if (!v) throw Error(Errc::PoleAtZero, "entry " + s.matrix[i][j].to_string() + " has a pole at 0");
            r[i][j] = *v;
        }
    return r;
}

inline RationalMatrix residue_at_infinity(const FuchsianSystem& s) {
    if (!s.scaled) throw Error(Errc::InvalidArgument, "residue needs a scaled system");
    RationalMatrix r(s.size(), std::vector<Rational>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
            auto v = s.matrix[i][j].value_at_infinity();
            if (!v) throw Error(Errc::PoleAtInfinity, "entry " + s.matrix[i][j].to_string() + " has a pole at infinity");
            r[i][j] = -*v;
        }
    return r;
}

/// Characteristic polynomial det(x I - A) by the Faddeev-LeVerrier recursion.
inline Polynomial characteristic_polynomial(const RationalMatrix& a) {
    const std::size_t n = a.size();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RationalMatrix m(n, std::vector<Rational>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix next(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                next[i][j] = s + (i == j ? c[n - k + 1] : Rational(0));
            }
        m = std::move(next);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return Polynomial(std::move(c));
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer v) {
    if (v < 0) v = -v;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            small.push_back(d);
            if (d * d != v) large.push_back(v / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace detail

/// All rational roots with multiplicity, ascending. Throws IrrationalEigenvalue
/// when a factor without rational roots remains.
inline std::vector<Rational> rational_roots(Polynomial f) {
    if (f.is_zero()) throw Error(Errc::InvalidArgument, "roots of the zero polynomial");
    std::vector<Rational> roots;
    while (f.degree() > 0 && f.coeff(0) == 0) {
        roots.push_back(0);
        f = f.shift_down(1);
    }
    while (f.degree() > 0) {
        Integer l = 1;
        for (const auto& c : f.coefficients()) l = boost::multiprecision::lcm(l, denominator(c));
        const Integer a0 = numerator(f.coeff(0) * Rational(l));
        const Integer an = numerator(f.leading() * Rational(l));
        bool found = false;
        for (const auto& q : detail::positive_divisors(an)) {
            for (const auto& p : detail::positive_divisors(a0)) {
                for (int sign : {1, -1}) {
                    const Rational r(Integer(p * sign), q);
                    if (f(r) != 0) continue;
                    roots.push_back(r);
                    f = divmod(f, Polynomial(std::vector<Rational>{-r, 1})).first;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) throw Error(Errc::IrrationalEigenvalue, "factor " + f.to_string("x") + " has no rational root");
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline std::vector<Rational> rational_eigenvalues(const RationalMatrix& a) {
    return rational_roots(characteristic_polynomial(a));
}

struct ExponentData {
    std::vector<Rational> at_zero;
    std::vector<Rational> at_infinity;
};

/// Numerators are the exponents at infinity; the exponents at zero are {0} and
/// {1 - beta}, so each lower parameter is 1 - e after removing one zero.
inline HypergeometricData extract_parameters(const ExponentData& e, const Rational& c = 1, int power = 1) {
    HypergeometricData d;
    d.numerators = e.at_infinity;
    std::sort(d.numerators.begin(), d.numerators.end());
    auto zero = std::find(e.at_zero.begin(), e.at_zero.end(), Rational(0));
    if (zero == e.at_zero.end()) throw Error(Errc::NoZeroExponent, "no zero exponent at the origin");
    for (auto it = e.at_zero.begin(); it != e.at_zero.end(); ++it)
        if (it != zero) d.denominators.push_back(1 - *it);
    std::sort(d.denominators.begin(), d.denominators.end());
    d.c = c;
    d.e = power;
    return d;
}

/// Inverts the argument when all exponents at infinity equal some mu: the result
/// has numerators {e + mu : e at zero}, every lower parameter 1, argument c / psi^k.
inline HypergeometricData mum_normalize(const ExponentData& e, const Rational& c, int k) {
    if (e.at_infinity.empty()) throw Error(Errc::NotMUMAtInfinity, "no exponents at infinity");
    const Rational mu = e.at_infinity.front();
    for (const auto& x : e.at_infinity)
        if (x != mu) throw Error(Errc::NotMUMAtInfinity, "exponents at infinity are not all equal");
    HypergeometricData d;
    for (const auto& x : e.at_zero) d.numerators.push_back(x + mu);
    std::sort(d.numerators.begin(), d.numerators.end());
    d.denominators.assign(e.at_zero.size() - 1, Rational(1));
    d.c = c;
    d.e = -k;
    return d;
}

namespace detail {

/// p(u + a).
inline Polynomial taylor_shift(const Polynomial& p, const Rational& a) {
    Polynomial r;
    const Polynomial x_plus_a(std::vector<Rational>{a, 1});
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) r = r * x_plus_a + Polynomial(*it);
    return r;
}

} // namespace detail

/// Residue of f at the finite point a.
inline Rational residue_of(const RationalFunction& f, const Rational& a) {
    if (f.is_zero()) return 0;
    Polynomial num = detail::taylor_shift(f.numerator(), a);
    Polynomial den = detail::taylor_shift(f.denominator(), a);
    const std::size_t m = den.valuation();
    if (m == 0) return 0;
    den = den.shift_down(m);
    // Coefficient of u^(m-1) in num / den as a power series.
    std::vector<Rational> q(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational s = num.coeff(i);
        for (std::size_t j = 1; j <= i; ++j) s -= den.coeff(j) * q[i - j];
        q[i] = s / den.coeff(0);
    }
    return q[m - 1];
}

/// Residue matrix of the scaled system (1/t) M at a finite nonzero point.
inline RationalMatrix residue_at(const FuchsianSystem& s, const Rational& a) {
    if (a == 0) return residue_at_zero(s);
    const RationalFunction inv_t = RationalFunction(1) / RationalFunction::variable();
    RationalMatrix r(s.size(), std::vector<Rational>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) r[i][j] = residue_of(inv_t * s.matrix[i][j], a);
    return r;
}

/// Nonzero finite singular points of a scaled system (rational poles only).
inline std::vector<Rational> finite_singular_points(const FuchsianSystem& s) {
    Polynomial l(Rational(1));
    for (const auto& row : s.matrix)
        for (const auto& f : row) {
            const Polynomial& d = f.denominator();
            l = divmod(l * d, gcd(l, d)).first;
        }
    std::vector<Rational> pts;
    for (const auto& r : rational_roots(l))
        if (r != 0 && (pts.empty() || pts.back() != r)) pts.push_back(r);
    return pts;
}

inline Rational trace(const RationalMatrix& m) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

struct PicardFuchsReport {
    std::string family;
    FuchsianSystem companion;
    FuchsianSystem sheared;
    FuchsianSystem substituted;
    FuchsianSystem rescaled;
    FuchsianSystem at_infinity;
    RationalMatrix residue_zero;
    RationalMatrix residue_infinity;
    ExponentData exponents;
    /// Direct reading of the exponents, argument psi^k / c.
    HypergeometricData extracted;
    /// Reading after inverting the argument, when the exponents at infinity coincide.
    std::optional<HypergeometricData> normalized;
    HypergeometricData final_data;
    bool mum_at_zero = false;
    std::vector<std::string> notes;
};

/// Companion matrix, shear, z = psi^k, z = c lambda, residues at 0 and infinity,
/// exponents, and the resulting hypergeometric data.
inline PicardFuchsReport analyze_family(const FamilyTag& family) {
    if (family.picard_fuchs.empty())
        throw Error(Errc::NoPicardFuchs, family.name + " has no stored Picard-Fuchs equation");
    PicardFuchsReport r;
    r.family = family.name;
    const int k = static_cast<int>(family.substitution_power);
    r.companion = companion_matrix(family.picard_fuchs);
    r.sheared = gauge_shear(r.companion);
    r.substituted = substitute_power(r.sheared, family.substitution_power);
    r.rescaled = rescale(r.substituted, family.rescale);
    r.at_infinity = hwmt::at_infinity(r.rescaled);
    r.residue_zero = residue_at_zero(r.rescaled);
    r.residue_infinity = residue_at_zero(r.at_infinity);
    r.exponents = {rational_eigenvalues(r.residue_zero), rational_eigenvalues(r.residue_infinity)};
    r.extracted = extract_parameters(r.exponents, 1 / family.rescale, k);

    const auto& z = r.exponents.at_zero;
    r.mum_at_zero = std::all_of(z.begin(), z.end(), [&](const Rational& x) { return x == z.front(); });
    const auto& inf = r.exponents.at_infinity;
    const bool mum_at_infinity =
        std::all_of(inf.begin(), inf.end(), [&](const Rational& x) { return x == inf.front(); });
    if (mum_at_infinity) r.normalized = mum_normalize(r.exponents, family.rescale, k);

    if (r.mum_at_zero) {
        r.final_data = r.extracted;
        r.notes.push_back("exponents at 0 already coincide; the series is kept in the argument " +
                          r.extracted.argument_string());
        if (r.normalized)
            r.notes.push_back("the inverted reading " + r.normalized->to_string() +
                              " is also available; its truncations agree with the kept form for psi invertible mod p");
    } else {
        if (!r.normalized)
            throw Error(Errc::NotMUMAtInfinity, "no point of maximally unipotent monodromy at 0 or infinity");
        r.final_data = *r.normalized;
        r.notes.push_back("exponents at 0 are distinct; inverting the argument gives the normalized series");
    }
    if (family.id == FamilyId::GroupI)
        r.notes.push_back("intermediate series computed here is " + r.extracted.to_string() +
                          "; the frequently quoted intermediate 3F2(1/3,1/3,1/3;1/3,1/6 | -psi^3/108) lists the "
                          "exponents themselves as lower parameters, which does not match the 1 - e reading");
    if (!r.final_data.same_parameters(family.hypergeometric) || r.final_data.c != family.hypergeometric.c ||
        r.final_data.e != family.hypergeometric.e)
        r.notes.push_back("final data differs from the family's stored series " + family.hypergeometric.to_string());
    return r;
}

} // namespace hwmt

#endif
