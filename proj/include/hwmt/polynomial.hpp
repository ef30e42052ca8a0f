#ifndef HWMT_POLYNOMIAL_HPP
#define HWMT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "integer_matrix.hpp"

namespace hwmt {

/// Sparse multivariate Laurent polynomial with rational coefficients. Zero
/// coefficients are never stored, so equality is structural.
class LaurentPolynomial {
  public:
    using Terms = std::map<IntVector, Rational>;

    explicit LaurentPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static LaurentPolynomial monomial(IntVector exponent, Rational coeff = 1) {
        LaurentPolynomial f(exponent.size());
        f.add_term(std::move(exponent), std::move(coeff));
        return f;
    }

    static LaurentPolynomial constant(std::size_t nvars, Rational c) {
        return monomial(IntVector(nvars, 0), std::move(c));
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const IntVector& exponent, const Rational& coeff) {
        if (exponent.size() != nvars_) throw Error(Errc::InvalidArgument, "exponent length mismatch");
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(exponent, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const IntVector& exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(IntVector(nvars_, 0)); }

    bool is_polynomial() const {
        for (const auto& [e, c] : terms_)
            for (auto x : e)
                if (x < 0) return false;
        return true;
    }

    /// Total degree of every monomial when all have the same degree under `weights`.
    std::optional<std::int64_t> weighted_degree(const IntVector& weights) const {
        std::optional<std::int64_t> d;
        for (const auto& [e, c] : terms_) {
            const std::int64_t de = dot(weights, e);
            if (d && *d != de) return std::nullopt;
            d = de;
        }
        return d;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.check_compatible(b);
        LaurentPolynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                IntVector e(a.nvars_);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
                r.add_term(e, ca * cb);
            }
        return r;
    }

    LaurentPolynomial pow(unsigned e) const {
        LaurentPolynomial r = constant(nvars_, 1);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    Rational evaluate(const std::vector<Rational>& x) const {
        Rational s = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (x[i] == 0 && e[i] < 0) throw Error(Errc::BadDenominator, "negative power of zero");
                Rational base = e[i] > 0 ? x[i] : Rational(1) / x[i];
                for (std::int64_t k = 0; k < (e[i] > 0 ? e[i] : -e[i]); ++k) t *= base;
            }
            s += t;
        }
        return s;
    }

    bool operator==(const LaurentPolynomial&) const = default;

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        // Descending exponent order reads more naturally.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < names.size() ? names[i] : "x" + std::to_string(i);
                if (e[i] != 1) mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
            }
            Rational a = c < 0 ? Rational(-c) : c;
            std::string coeff = hwmt::to_string(a);
            if (s.empty())
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            if (mono.empty())
                s += coeff;
            else if (a == 1)
                s += mono;
            else
                s += coeff + "*" + mono;
        }
        return s;
    }

  private:
    void check_compatible(const LaurentPolynomial& o) const {
        if (o.nvars_ != nvars_) throw Error(Errc::InvalidArgument, "polynomials in different variable counts");
    }

    std::size_t nvars_;
    Terms terms_;
};

/// A Laurent polynomial reduced mod p, flattened for fast repeated evaluation.
class ModPEvaluator {
  public:
    ModPEvaluator(const LaurentPolynomial& f, const PrimeField& field) : field_(field), nvars_(f.nvars()) {
        for (const auto& [e, c] : f.terms()) {
            Residue r = field.from_rational(c);
            if (r == 0) continue;
            coeffs_.push_back(r);
            exps_.push_back(e);
        }
    }

    /// f(x) for x with all negative-exponent coordinates nonzero.
    Residue operator()(const std::vector<Residue>& x) const {
        Residue s = 0;
        for (std::size_t t = 0; t < coeffs_.size(); ++t) {
            Residue v = coeffs_[t];
            for (std::size_t i = 0; i < nvars_ && v; ++i) {
                const std::int64_t e = exps_[t][i];
                if (e > 0)
                    v = field_.mul(v, field_.pow(x[i], static_cast<std::uint64_t>(e)));
                else if (e < 0)
                    v = field_.mul(v, field_.pow(field_.inv(x[i]), static_cast<std::uint64_t>(-e)));
            }
            s = field_.add(s, v);
        }
        return s;
    }

    std::size_t nvars() const { return nvars_; }

  private:
    const PrimeField& field_;
    std::size_t nvars_;
    std::vector<Residue> coeffs_;
    std::vector<IntVector> exps_;
};

} // namespace hwmt

#endif
