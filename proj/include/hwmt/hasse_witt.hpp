#ifndef HWMT_HASSE_WITT_HPP
#define HWMT_HASSE_WITT_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "pencil.hpp"

namespace hwmt {

/// Enumerates a in Z_{>=0}^l with sum(a) = e and sum(a_i * w_i) = target, where
/// w_i are the given exponent vectors. The linear system is put in reduced echelon
/// form once; the search then runs over the free coordinates only and solves for
/// the pivot coordinates.
class ExponentSolver {
  public:
    explicit ExponentSolver(std::vector<IntVector> exponents, std::optional<IntVector> target = std::nullopt)
        : w_(std::move(exponents)) {
        ell_ = w_.size();
        n_ = ell_ ? w_[0].size() : (target ? target->size() : 0);
        target_ = target ? *target : IntVector(n_, 0);
        const std::size_t rows = n_ + 1;
        // [A | I] with A = (w_1 .. w_l ; 1 .. 1).
        RationalMatrix m(rows, std::vector<Rational>(ell_ + rows));
        for (std::size_t i = 0; i < ell_; ++i) {
            if (w_[i].size() != n_) throw Error(Errc::InvalidArgument, "exponent length mismatch");
            for (std::size_t r = 0; r < n_; ++r) m[r][i] = w_[i][r];
            m[n_][i] = 1;
        }
        for (std::size_t r = 0; r < rows; ++r) m[r][ell_ + r] = 1;
        std::size_t rank = 0;
        std::vector<bool> is_pivot(ell_, false);
        for (std::size_t c = 0; c < ell_ && rank < rows; ++c) {
            std::size_t piv = rank;
            while (piv < rows && m[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(m[rank], m[piv]);
            const Rational s = m[rank][c];
            for (auto& x : m[rank]) x /= s;
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == rank || m[r][c] == 0) continue;
                const Rational f = m[r][c];
                for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[rank][k];
            }
            pivots_.push_back(c);
            is_pivot[c] = true;
            ++rank;
        }
        for (std::size_t c = 0; c < ell_; ++c)
            if (!is_pivot[c]) free_.push_back(c);
        // Integer form: scale_r * a_{pivot_r} = T_r . (target, e) - sum_f R_rf a_f.
        for (std::size_t r = 0; r < rows; ++r) {
            Integer l = 1;
            for (const auto& x : m[r]) l = boost::multiprecision::lcm(l, denominator(x));
            IntVector rf, t;
            for (auto f : free_) rf.push_back(to_int(m[r][f] * l));
            for (std::size_t k = 0; k < rows; ++k) t.push_back(to_int(m[r][ell_ + k] * l));
            if (r < rank) {
                scale_.push_back(to_int(Rational(l)));
                coef_free_.push_back(std::move(rf));
                transform_.push_back(std::move(t));
            } else {
                consistency_.push_back(std::move(t));
            }
        }
    }

    std::size_t num_terms() const { return ell_; }
    std::size_t num_free() const { return free_.size(); }

    /// Calls visit(a) for every solution, in lexicographic order of the free coordinates.
    void for_each(std::int64_t e, const std::function<void(const std::vector<std::int64_t>&)>& visit) const {
        if (e < 0) return;
        IntVector rhs = target_;
        rhs.push_back(e);
        for (const auto& row : consistency_)
            if (dot(row, rhs) != 0) return;
        IntVector base;
        for (const auto& row : transform_) base.push_back(dot(row, rhs));
        std::vector<std::int64_t> a(ell_, 0);
        std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
            if (i == free_.size()) {
                for (std::size_t r = 0; r < pivots_.size(); ++r) {
                    std::int64_t v = base[r];
                    for (std::size_t f = 0; f < free_.size(); ++f) v -= coef_free_[r][f] * a[free_[f]];
                    if (v < 0 || v % scale_[r] != 0) return;
                    a[pivots_[r]] = v / scale_[r];
                }
                visit(a);
                return;
            }
            for (std::int64_t x = 0; x <= left; ++x) {
                a[free_[i]] = x;
                rec(i + 1, left - x);
            }
            a[free_[i]] = 0;
        };
        rec(0, e);
    }

  private:
    static std::int64_t to_int(const Rational& r) {
        if (!is_integer(r)) throw Error(Errc::InvalidArgument, "non-integral entry after scaling");
        const Integer z = numerator(r);
        if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN)) throw Error(Errc::Overflow, "solver coefficient");
        return static_cast<std::int64_t>(z);
    }

    std::vector<IntVector> w_;
    std::size_t ell_ = 0, n_ = 0;
    IntVector target_;
    std::vector<std::size_t> pivots_, free_;
    IntVector scale_;
    IntMatrix coef_free_, transform_, consistency_;
};

namespace detail {

inline Residue multinomial_mod_p(const std::vector<std::int64_t>& a, std::int64_t e, const PrimeField& f) {
    Residue r = f.factorials()[static_cast<std::size_t>(e)];
    for (auto x : a) r = f.mul(r, f.inverse_factorials()[static_cast<std::size_t>(x)]);
    return r;
}

inline void require_exponent(std::int64_t e, const PrimeField& f) {
    if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    if (static_cast<std::uint64_t>(e) >= f.prime())
        throw Error(Errc::ExponentTooLarge, "exponent " + std::to_string(e) + " is not below p = " + std::to_string(f.prime()));
}

} // namespace detail

/// Constant term of f^e mod p, for e < p.
inline Residue constant_term_power(const LaurentPolynomial& f, std::int64_t e, const PrimeField& field) {
    detail::require_exponent(e, field);
    std::vector<IntVector> exps;
    std::vector<Residue> coeffs;
    for (const auto& [x, c] : f.terms()) {
        exps.push_back(x);
        coeffs.push_back(field.from_rational(c));
    }
    if (exps.empty()) return e == 0 ? 1 : 0;
    Residue total = 0;
    ExponentSolver(exps).for_each(e, [&](const std::vector<std::int64_t>& a) {
        Residue t = detail::multinomial_mod_p(a, e, field);
        for (std::size_t i = 0; i < a.size() && t; ++i) t = field.mul(t, field.pow(coeffs[i], static_cast<std::uint64_t>(a[i])));
        total = field.add(total, t);
    });
    return total;
}

inline Residue constant_term_power(const LaurentPolynomial& f, std::int64_t e, std::uint64_t p) {
    return constant_term_power(f, e, PrimeField(p));
}

struct HWInvariant {
    std::uint64_t prime = 0;
    Residue value = 0;
    Rational psi;
};

/// Constant term of the pencil's (p-1)-th power at a rational psi.
inline HWInvariant hasse_witt(const LaurentPencil& pencil, const Rational& psi, const PrimeField& field) {
    return {field.prime(), constant_term_power(pencil.specialize(psi), static_cast<std::int64_t>(field.prime()) - 1, field), psi};
}

inline HWInvariant hasse_witt(const LaurentPencil& pencil, const Rational& psi, std::uint64_t p) {
    return hasse_witt(pencil, psi, PrimeField(p));
}

inline HWInvariant hasse_witt(const LatticePolytope& delta, const Rational& psi, std::uint64_t p) {
    return hasse_witt(build_vertex_pencil(delta), psi, p);
}

/// Hasse-Witt invariant as a polynomial in psi over F_p; entry k multiplies psi^k,
/// so the degree is at most p-1 by construction.
inline std::vector<Residue> hasse_witt_polynomial(const LaurentPencil& pencil, const PrimeField& field) {
    const std::int64_t e = static_cast<std::int64_t>(field.prime()) - 1;
    std::vector<IntVector> exps;
    std::vector<Residue> coeffs;
    for (const auto& t : pencil.terms()) {
        exps.push_back(t.exponent);
        coeffs.push_back(field.from_rational(t.coeff));
    }
    const std::size_t psi = pencil.psi_term_index();
    std::vector<Residue> poly(field.prime(), 0);
    ExponentSolver(exps).for_each(e, [&](const std::vector<std::int64_t>& a) {
        Residue t = detail::multinomial_mod_p(a, e, field);
        for (std::size_t i = 0; i < a.size() && t; ++i) t = field.mul(t, field.pow(coeffs[i], static_cast<std::uint64_t>(a[i])));
        auto& slot = poly[static_cast<std::size_t>(a[psi])];
        slot = field.add(slot, t);
    });
    return poly;
}

inline Residue evaluate_mod_p(const std::vector<Residue>& poly, Residue x, const PrimeField& field) {
    Residue s = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) s = field.add(field.mul(s, x), *it);
    return s;
}

/// Coefficient of (z_1 ... z_N)^(p-1) in F^(p-1) for a polynomial F in N variables.
inline Residue katz_coefficient(const LaurentPolynomial& F, const PrimeField& field) {
    if (!F.is_polynomial()) throw Error(Errc::InvalidArgument, "Katz coefficient needs a polynomial");
    const std::int64_t e = static_cast<std::int64_t>(field.prime()) - 1;
    const std::size_t nv = F.nvars();
    std::vector<IntVector> exps;
    std::vector<Residue> coeffs;
    for (const auto& [x, c] : F.terms()) {
        exps.push_back(x);
        coeffs.push_back(field.from_rational(c));
    }
    // Direct search over term multiplicities with a coordinatewise budget.
    Residue total = 0;
    std::vector<std::int64_t> a(exps.size(), 0);
    IntVector used(nv, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i == exps.size()) {
            if (left != 0) return;
            for (auto u : used)
                if (u != e) return;
            Residue t = detail::multinomial_mod_p(a, e, field);
            for (std::size_t k = 0; k < a.size(); ++k) t = field.mul(t, field.pow(coeffs[k], static_cast<std::uint64_t>(a[k])));
            total = field.add(total, t);
            return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
            bool ok = true;
            for (std::size_t j = 0; j < nv; ++j) ok = ok && used[j] + x * exps[i][j] <= e;
            if (!ok) break;
            for (std::size_t j = 0; j < nv; ++j) used[j] += x * exps[i][j];
            a[i] = x;
            rec(i + 1, left - x);
            for (std::size_t j = 0; j < nv; ++j) used[j] -= x * exps[i][j];
        }
        a[i] = 0;
    };
    rec(0, e);
    return total;
}

struct PeriodCoefficients {
    std::vector<Integer> values;
};

/// b_n = constant term of (pencil without its psi term)^n, n = 0..N, exactly.
inline PeriodCoefficients period_coefficients(const LaurentPencil& pencil, std::size_t N) {
    std::vector<IntVector> exps;
    std::vector<Rational> coeffs;
    for (const auto& t : pencil.terms())
        if (!t.has_psi) {
            exps.push_back(t.exponent);
            coeffs.push_back(t.coeff);
        }
    std::vector<Integer> fact{1};
    for (std::size_t i = 1; i <= N; ++i) fact.push_back(fact.back() * static_cast<unsigned long>(i));
    PeriodCoefficients out;
    const ExponentSolver solver(exps);
    for (std::size_t n = 0; n <= N; ++n) {
        Rational b = 0;
        solver.for_each(static_cast<std::int64_t>(n), [&](const std::vector<std::int64_t>& a) {
            Integer m = fact[n];
            Rational t = 1;
            for (std::size_t i = 0; i < a.size(); ++i) {
                m /= fact[static_cast<std::size_t>(a[i])];
                for (std::int64_t k = 0; k < a[i]; ++k) t *= coeffs[i];
            }
            b += t * m;
        });
        if (!is_integer(b)) throw Error(Errc::InvalidArgument, "non-integral period coefficient");
        out.values.push_back(numerator(b));
    }
    return out;
}

inline PeriodCoefficients period_coefficients(const LatticePolytope& delta, std::size_t N) {
    return period_coefficients(build_vertex_pencil(delta), N);
}

/// sum_{n<p} binom(p-1, n) b_n (s psi)^(p-1-n) mod p, where s is the psi coefficient.
inline Residue binomial_period_sum(const LaurentPencil& pencil, const Rational& psi, const PrimeField& field) {
    const std::uint64_t p = field.prime();
    const auto b = period_coefficients(pencil, p - 1).values;
    const Residue x = field.from_rational(psi * pencil.psi_scale());
    const auto& fact = field.factorials();
    const auto& ifact = field.inverse_factorials();
    Residue s = 0;
    for (std::uint64_t n = 0; n < p; ++n) {
        const Residue binom = field.mul(fact[p - 1], field.mul(ifact[n], ifact[p - 1 - n]));
        s = field.add(s, field.mul(field.mul(binom, field.from_integer(b[n])), field.pow(x, p - 1 - n)));
    }
    return s;
}

struct KeyLemmaResult {
    bool equal = false;
    HWInvariant delta;
    HWInvariant gamma;
};

/// Compares the Hasse-Witt invariants of the vertex pencils of a kernel pair whose
/// duals also form a kernel pair.
inline KeyLemmaResult key_lemma_check(const LatticePolytope& delta, const LatticePolytope& gamma, const Rational& psi,
                                      std::uint64_t p) {
    if (!is_dual_kernel_pair(delta, gamma).holds)
        throw Error(Errc::NotKernelPair, "polytopes and their duals do not form kernel pairs");
    const PrimeField field(p);
    KeyLemmaResult r;
    r.delta = hasse_witt(build_vertex_pencil(delta), psi, field);
    r.gamma = hasse_witt(build_vertex_pencil(gamma), psi, field);
    r.equal = r.delta.value == r.gamma.value;
    return r;
}

struct TruncationCheck {
    bool holds = false;
    Residue hasse_witt = 0;
    Residue binomial_sum = 0;
    std::optional<Residue> hypergeometric;
};

/// Binomial period identity for the vertex pencil of delta.
inline TruncationCheck truncation_relation_check(const LatticePolytope& delta, const Rational& psi, std::uint64_t p) {
    const PrimeField field(p);
    const auto pencil = build_vertex_pencil(delta);
    TruncationCheck r;
    r.hasse_witt = hasse_witt(pencil, psi, field).value;
    r.binomial_sum = binomial_period_sum(pencil, psi, field);
    r.holds = r.hasse_witt == r.binomial_sum;
    return r;
}

} // namespace hwmt

#endif
