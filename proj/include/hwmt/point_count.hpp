#ifndef HWMT_POINT_COUNT_HPP
#define HWMT_POINT_COUNT_HPP

#include <cstdint>
#include <algorithm>
#include <string>
#include <vector>

#include "family.hpp"

namespace hwmt {

struct CountResult {
    std::string model;
    std::uint64_t prime = 0;
    Rational psi;
    std::uint64_t count = 0;
};

namespace detail {

/// Calls visit(x) for every x in F_p^n (or (F_p^*)^n), last coordinate fastest.
template <class Visit>
void for_each_vector(std::size_t n, std::uint64_t p, bool nonzero_only, Visit&& visit) {
    const Residue lo = nonzero_only ? 1 : 0;
    std::vector<Residue> x(n, lo);
    if (n == 0) {
        visit(x);
        return;
    }
    for (;;) {
        visit(x);
        std::size_t j = n;
        while (j > 0 && x[j - 1] == p - 1) {
            x[j - 1] = lo;
            --j;
        }
        if (j == 0) return;
        ++x[j - 1];
    }
}

inline bool is_weighted_homogeneous(const LaurentPolynomial& f, const IntVector& w) {
    return f.is_zero() || f.weighted_degree(w).has_value();
}

} // namespace detail

/// #{x in (F_p^*)^n : f(x) = 0}.
inline std::uint64_t count_torus(const LaurentPolynomial& f, std::uint64_t p) {
    const PrimeField field(p);
    const ModPEvaluator eval(f, field);
    std::uint64_t n = 0;
    detail::for_each_vector(f.nvars(), p, true, [&](const std::vector<Residue>& x) {
        if (eval(x) == 0) ++n;
    });
    return n;
}

/// Points of {F = 0} in P^(N-1)(F_p) for F homogeneous in N variables. Each point
/// is visited once through its representative whose first nonzero coordinate is 1.
inline std::uint64_t count_projective(const LaurentPolynomial& F, std::uint64_t p) {
    if (!F.is_polynomial() || !detail::is_weighted_homogeneous(F, IntVector(F.nvars(), 1)))
        throw Error(Errc::NonHomogeneous, "polynomial is not homogeneous");
    const PrimeField field(p);
    const ModPEvaluator eval(F, field);
    const std::size_t n = F.nvars();
    std::uint64_t count = 0;
    std::vector<Residue> x(n, 0);
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::fill(x.begin(), x.end(), 0);
        x[lead] = 1;
        detail::for_each_vector(n - lead - 1, p, false, [&](const std::vector<Residue>& tail) {
            std::copy(tail.begin(), tail.end(), x.begin() + static_cast<std::ptrdiff_t>(lead + 1));
            if (eval(x) == 0) ++count;
        });
    }
    return count;
}

/// Points of {F = 0} in the weighted projective space P(w)(F_p). Each rational
/// point of the coarse space has twisted lifts whose masses 1/|stabilizer| add up
/// to one, so the count is the number of nonzero affine zeros divided by p-1.
inline std::uint64_t count_weighted_projective(const LaurentPolynomial& F, const IntVector& weights, std::uint64_t p) {
    if (weights.size() != F.nvars()) throw Error(Errc::InvalidArgument, "weight vector length mismatch");
    for (auto w : weights)
        if (w <= 0) throw Error(Errc::InvalidArgument, "weights must be positive");
    if (!F.is_polynomial() || !detail::is_weighted_homogeneous(F, weights))
        throw Error(Errc::NonWeightedHomogeneous, "polynomial is not weighted homogeneous");
    const PrimeField field(p);
    const ModPEvaluator eval(F, field);
    std::uint64_t sum = 0;
    detail::for_each_vector(F.nvars(), p, false, [&](const std::vector<Residue>& x) {
        const bool origin = std::all_of(x.begin(), x.end(), [](Residue r) { return r == 0; });
        if (!origin && eval(x) == 0) ++sum;
    });
    if (sum % (p - 1) != 0)
        throw Error(Errc::NonIntegerOrbitSum, "affine zero count " + std::to_string(sum) + " not divisible by p-1");
    return sum / (p - 1);
}

/// Points of {F = 0} in P1 x P1 (F_p), F in (x0, x1, y0, y1) bihomogeneous.
inline std::uint64_t count_biprojective(const LaurentPolynomial& F, std::uint64_t p) {
    if (F.nvars() != 4 || !F.is_polynomial() || !detail::is_weighted_homogeneous(F, {1, 1, 0, 0}) ||
        !detail::is_weighted_homogeneous(F, {0, 0, 1, 1}))
        throw Error(Errc::NonBihomogeneous, "polynomial is not bihomogeneous in (x0,x1),(y0,y1)");
    const PrimeField field(p);
    const ModPEvaluator eval(F, field);
    std::vector<std::pair<Residue, Residue>> line;
    for (Residue t = 0; t < p; ++t) line.emplace_back(1, t);
    line.emplace_back(0, 1);
    std::uint64_t count = 0;
    std::vector<Residue> x(4);
    for (const auto& [a, b] : line)
        for (const auto& [c, d] : line) {
            x = {a, b, c, d};
            if (eval(x) == 0) ++count;
        }
    return count;
}

inline std::uint64_t count_model(const CountModel& m, const Rational& psi, std::uint64_t p) {
    const LaurentPolynomial F = m.polynomial(psi);
    switch (m.ambient) {
    case AmbientKind::Biprojective: return count_biprojective(F, p);
    case AmbientKind::Projective: return count_projective(F, p);
    case AmbientKind::WeightedProjective: return count_weighted_projective(F, m.weights, p);
    }
    return 0;
}

struct CongruenceResult {
    /// count == 1 + (-1)^dim * truncation mod p.
    bool holds = false;
    /// count == 1 + truncation mod p, regardless of fiber dimension.
    bool holds_with_plus_sign = false;
    std::uint64_t count = 0;
    Residue truncation = 0;
    int sign = 1;
};

/// Counts the family's printed model at its printed parameter psi and compares
/// with the truncated series. The Hasse-Witt invariant enters the point count
/// with sign (-1)^dim, so curves use 1 - truncation and surfaces 1 + truncation.
inline CongruenceResult congruence_check(const FamilyTag& family, const Rational& psi, std::uint64_t p) {
    if (!family.model) throw Error(Errc::UncountableAmbient, family.name + " has no countable ambient model");
    const PrimeField field(p);
    CongruenceResult r;
    r.count = count_model(*family.model, psi, p);
    r.truncation = truncated_pFq(family.model->data, psi, field).value;
    r.sign = family.fiber_dimension % 2 == 0 ? 1 : -1;
    const Residue n = r.count % p;
    const Residue plus = field.add(1, r.truncation);
    const Residue minus = field.sub(1, r.truncation);
    r.holds_with_plus_sign = n == plus;
    r.holds = n == (r.sign > 0 ? plus : minus);
    return r;
}

} // namespace hwmt

#endif
