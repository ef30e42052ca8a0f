#ifndef HWMT_PENCIL_HPP
#define HWMT_PENCIL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice_polytope.hpp"
#include "polynomial.hpp"

namespace hwmt {

/// coeff * x^exponent, or coeff * psi * x^exponent when has_psi is set.
struct LaurentTerm {
    IntVector exponent;
    Rational coeff = 1;
    bool has_psi = false;

    bool operator==(const LaurentTerm&) const = default;
};

/// One-parameter Laurent family: fixed monomials plus one psi-dependent origin term.
class LaurentPencil {
  public:
    LaurentPencil(std::size_t n, std::vector<LaurentTerm> terms) : n_(n), terms_(std::move(terms)) {
        std::optional<std::size_t> psi;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto& t = terms_[i];
            if (t.exponent.size() != n_) throw Error(Errc::InvalidArgument, "exponent length mismatch");
            if (t.coeff == 0) throw Error(Errc::InvalidArgument, "zero coefficient in pencil");
            for (std::size_t j = 0; j < i; ++j)
                if (terms_[j].exponent == t.exponent) throw Error(Errc::InvalidArgument, "repeated exponent in pencil");
            if (t.has_psi) {
                if (psi) throw Error(Errc::InvalidArgument, "more than one psi term");
                if (t.exponent != IntVector(n_, 0)) throw Error(Errc::InvalidArgument, "psi must multiply the origin monomial");
                psi = i;
            }
        }
        if (!psi) throw Error(Errc::InvalidArgument, "pencil without a psi term");
        psi_index_ = *psi;
    }

    std::size_t nvars() const { return n_; }
    const std::vector<LaurentTerm>& terms() const { return terms_; }
    std::size_t psi_term_index() const { return psi_index_; }
    /// Coefficient multiplying psi in the origin term.
    const Rational& psi_scale() const { return terms_[psi_index_].coeff; }

    /// Exponents of the psi-free terms, in term order.
    std::vector<IntVector> fixed_exponents() const {
        std::vector<IntVector> out;
        for (const auto& t : terms_)
            if (!t.has_psi) out.push_back(t.exponent);
        return out;
    }

    /// The pencil with psi-free terms only.
    LaurentPolynomial fixed_part() const {
        LaurentPolynomial f(n_);
        for (const auto& t : terms_)
            if (!t.has_psi) f.add_term(t.exponent, t.coeff);
        return f;
    }

    LaurentPolynomial specialize(const Rational& psi) const {
        LaurentPolynomial f(n_);
        for (const auto& t : terms_) f.add_term(t.exponent, t.has_psi ? t.coeff * psi : t.coeff);
        return f;
    }

    bool operator==(const LaurentPencil&) const = default;

    std::string to_string() const {
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty()) s += " + ";
            std::string c = t.coeff == 1 ? "" : "(" + hwmt::to_string(t.coeff) + ")*";
            if (t.has_psi)
                s += c + "psi";
            else
                s += c + "x^" + hwmt::to_string(t.exponent);
        }
        return s;
    }

  private:
    std::size_t n_;
    std::vector<LaurentTerm> terms_;
    std::size_t psi_index_ = 0;
};

/// Sum of x^m over the vertices m of the polar dual, plus psi.
inline LaurentPencil build_vertex_pencil(const LatticePolytope& delta) {
    const LatticePolytope dual = polar_dual(delta);
    std::vector<LaurentTerm> terms;
    for (const auto& m : dual.vertices()) terms.push_back({m, 1, false});
    terms.push_back({IntVector(static_cast<std::size_t>(delta.dim()), 0), 1, true});
    return LaurentPencil(static_cast<std::size_t>(delta.dim()), std::move(terms));
}

enum class VariableSet { LatticePoints, Vertices };

/// Polynomial in one variable z_j per chosen point v_j of delta; the monomial of m
/// is prod_j z_j^(<v_j, m> + 1).
struct HomogeneousForm {
    std::vector<LatticePoint> variables;
    std::vector<LatticePoint> monomials;
    IntMatrix exponents;
    std::vector<Rational> coefficients;

    LaurentPolynomial polynomial() const {
        LaurentPolynomial f(variables.size());
        for (std::size_t i = 0; i < monomials.size(); ++i) f.add_term(exponents[i], coefficients[i]);
        return f;
    }
};

inline HomogeneousForm homogeneous_form(const LatticePolytope& delta, const std::map<LatticePoint, Rational>& coeffs,
                                        VariableSet vars = VariableSet::LatticePoints) {
    if (!is_reflexive(delta)) throw Error(Errc::NotReflexive, "homogeneous form needs a reflexive polytope");
    const LatticePolytope dual = polar_dual(delta);
    HomogeneousForm h;
    if (vars == VariableSet::Vertices) {
        h.variables = delta.vertices();
    } else {
        const IntVector origin(static_cast<std::size_t>(delta.dim()), 0);
        for (auto& v : lattice_points(delta))
            if (v != origin) h.variables.push_back(std::move(v));
    }
    for (const auto& [m, c] : coeffs) {
        if (m.size() != static_cast<std::size_t>(delta.dim()) || !dual.contains(m))
            throw Error(Errc::UnsupportedMonomial, to_string(m) + " is not a lattice point of the dual polytope");
        IntVector e;
        for (const auto& v : h.variables) e.push_back(dot(v, m) + 1);
        h.monomials.push_back(m);
        h.exponents.push_back(std::move(e));
        h.coefficients.push_back(c);
    }
    return h;
}

/// Homogeneous form of a pencil specialized at psi.
inline HomogeneousForm homogeneous_form(const LatticePolytope& delta, const LaurentPencil& pencil, const Rational& psi,
                                        VariableSet vars = VariableSet::LatticePoints) {
    std::map<LatticePoint, Rational> coeffs;
    const LaurentPolynomial f = pencil.specialize(psi);
    for (const auto& [e, c] : f.terms()) coeffs.emplace(e, c);
    return homogeneous_form(delta, coeffs, vars);
}

} // namespace hwmt

#endif
