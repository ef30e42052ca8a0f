#ifndef HWMT_RATIONAL_FUNCTION_HPP
#define HWMT_RATIONAL_FUNCTION_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace hwmt {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i. The leading
/// coefficient is nonzero (the zero polynomial has no coefficients).
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(Rational c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(std::size_t degree, Rational c = 1) {
        std::vector<Rational> v(degree + 1);
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }
    static Polynomial variable() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree, with -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational s = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
        return s;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    /// Quotient and remainder; throws on division by zero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
        Polynomial r = a;
        if (a.degree() < b.degree()) return {Polynomial{}, r};
        std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            Rational f = r.leading() / b.leading();
            q[shift] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
            r.trim();
        }
        return {Polynomial(std::move(q)), r};
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Polynomial r = *this;
        const Rational l = leading();
        for (auto& x : r.c_) x /= l;
        return r;
    }

    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// p(c t).
    Polynomial scale_variable(const Rational& c) const {
        Polynomial r = *this;
        Rational f = 1;
        for (auto& x : r.c_) {
            x *= f;
            f *= c;
        }
        r.trim();
        return r;
    }

    /// t^degree p(1/t).
    Polynomial reversed(std::size_t degree) const {
        std::vector<Rational> v(degree + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) v[degree - i] = c_[i];
        return Polynomial(std::move(v));
    }

    /// p(t^k).
    Polynomial expand_power(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<Rational> v((c_.size() - 1) * k + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
        return Polynomial(std::move(v));
    }

    /// q with p(t) = q(t^k), when every exponent is a multiple of k.
    std::optional<Polynomial> contract_power(std::size_t k) const {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i % k == 0)
                v.push_back(c_[i]);
            else if (c_[i] != 0)
                return std::nullopt;
        }
        return Polynomial(std::move(v));
    }

    /// Exponent of the lowest nonzero term (0 for the zero polynomial).
    std::size_t valuation() const {
        std::size_t i = 0;
        while (i < c_.size() && c_[i] == 0) ++i;
        return i == c_.size() ? 0 : i;
    }

    Polynomial shift_down(std::size_t s) const {
        if (s >= c_.size()) return {};
        return Polynomial(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(s), c_.end()));
    }

    Polynomial derivative() const {
        std::vector<Rational> v;
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<long>(i));
        return Polynomial(std::move(v));
    }

    bool operator==(const Polynomial&) const = default;

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational& c = c_[k];
            if (c == 0) continue;
            Rational a = c < 0 ? Rational(-c) : c;
            if (s.empty())
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
            if (mono.empty())
                s += hwmt::to_string(a);
            else if (a == 1)
                s += mono;
            else
                s += hwmt::to_string(a) + "*" + mono;
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Reduced quotient of univariate polynomials over Q with monic denominator.
class RationalFunction {
  public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    /// Value at a finite point; nullopt at a pole.
    std::optional<Rational> value_at(const Rational& x) const {
        Rational d = den_(x);
        if (d == 0) return std::nullopt;
        return num_(x) / d;
    }

    /// Limit as t -> infinity; nullopt when it diverges.
    std::optional<Rational> value_at_infinity() const {
        if (num_.degree() > den_.degree()) return std::nullopt;
        if (num_.degree() < den_.degree()) return Rational(0);
        return num_.leading() / den_.leading();
    }

    /// f(c t).
    RationalFunction scale_variable(const Rational& c) const {
        return RationalFunction(num_.scale_variable(c), den_.scale_variable(c));
    }

    /// f(1/t).
    RationalFunction invert_variable() const {
        const long dn = std::max(num_.degree(), 0L), dd = den_.degree();
        const std::size_t d = static_cast<std::size_t>(std::max(dn, dd));
        return RationalFunction(num_.reversed(d), den_.reversed(d));
    }

    /// f(t^k).
    RationalFunction expand_power(std::size_t k) const {
        return RationalFunction(num_.expand_power(k), den_.expand_power(k));
    }

    /// g with f(t) = g(t^k), when f is a function of t^k.
    std::optional<RationalFunction> contract_power(std::size_t k) const {
        auto n = num_.contract_power(k);
        auto d = den_.contract_power(k);
        if (!n || !d) return std::nullopt;
        return RationalFunction(*n, *d);
    }

    bool operator==(const RationalFunction&) const = default;

    std::string to_string(const std::string& var = "t") const {
        if (den_ == Polynomial(Rational(1))) return num_.to_string(var);
        auto wrap = [&](const Polynomial& p) {
            std::string s = p.to_string(var);
            bool single = p.coefficients().size() <= 1 ||
                          std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                        [](const Rational& c) { return c != 0; }) == 1;
            return single && s.find('/') == std::string::npos ? s : "(" + s + ")";
        };
        return wrap(num_) + "/" + wrap(den_);
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw Error(Errc::InvalidArgument, "zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const Rational l = den_.leading();
        num_ = num_ * Polynomial(Rational(1) / l);
        den_ = den_.monic();
    }

    Polynomial num_;
    Polynomial den_;
};

} // namespace hwmt

#endif
