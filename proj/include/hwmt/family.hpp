#ifndef HWMT_FAMILY_HPP
#define HWMT_FAMILY_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hasse_witt.hpp"
#include "hypergeometric.hpp"
#include "rational_function.hpp"

namespace hwmt {

enum class FamilyId { EllipticP1xP1, Quartic, Sextic, GroupI, GroupII };

enum class AmbientKind { Biprojective, Projective, WeightedProjective };

inline std::string_view to_string(AmbientKind k) {
    switch (k) {
    case AmbientKind::Biprojective: return "biprojective";
    case AmbientKind::Projective: return "projective";
    case AmbientKind::WeightedProjective: return "weighted_projective";
    }
    return "?";
}

/// A family as printed with its own parameter: a homogeneous polynomial in an
/// explicit ambient space. Terms flagged has_psi are multiplied by that parameter.
/// The vertex-pencil parameter equals psi_scale times the printed one.
struct CountModel {
    AmbientKind ambient = AmbientKind::Projective;
    IntVector weights;
    std::vector<std::string> variables;
    std::vector<LaurentTerm> terms;
    Rational psi_scale = 1;
    HypergeometricData data;

    LaurentPolynomial polynomial(const Rational& psi) const {
        LaurentPolynomial f(variables.size());
        for (const auto& t : terms) f.add_term(t.exponent, t.has_psi ? t.coeff * psi : t.coeff);
        return f;
    }
};

/// A named vertex pencil with everything needed to check its hypergeometric
/// description: the polytope, the truncation data in the vertex-pencil
/// parameter, the Picard-Fuchs operator and, where available, a countable model.
struct FamilyTag {
    FamilyId id;
    std::string name;
    std::string label;
    std::optional<long> polytope_id;
    std::vector<LatticePoint> delta_vertices;
    std::size_t fiber_dimension = 2;
    HypergeometricData hypergeometric;
    /// (a, b) with 2F1(a, b; a+b+1/2)^2 = the family's 3F2 as formal series.
    std::optional<std::pair<Rational, Rational>> clausen;
    /// y^(n) + c_{n-1} y^(n-1) + ... + c_0 y = 0, stored as c_0 .. c_{n-1}, 1.
    std::vector<RationalFunction> picard_fuchs;
    std::size_t substitution_power = 1;
    Rational rescale = 1;
    std::optional<CountModel> model;

    LatticePolytope delta() const { return LatticePolytope(delta_vertices, polytope_id); }
    LaurentPencil pencil() const { return build_vertex_pencil(delta()); }
};

namespace detail {

inline RationalFunction poly_ratio(std::vector<Rational> num, std::vector<Rational> den) {
    return RationalFunction(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

inline FamilyTag make_tag(FamilyId id, std::string name, std::string label, std::optional<long> polytope_id,
                          std::vector<LatticePoint> vertices) {
    FamilyTag f;
    f.id = id;
    f.name = std::move(name);
    f.label = std::move(label);
    f.polytope_id = polytope_id;
    f.delta_vertices = std::move(vertices);
    return f;
}

inline std::vector<FamilyTag> build_families() {
    const Rational h(1, 2);
    std::vector<FamilyTag> out;

    {
        FamilyTag f = make_tag(FamilyId::EllipticP1xP1, "elliptic", "elliptic curves in P1 x P1", std::nullopt,
                               {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
        f.fiber_dimension = 1;
        f.hypergeometric = {{h, h}, {1}, Rational(1, 16), 2};
        // psi^3 - 16 psi
        std::vector<Rational> d{0, -16, 0, 1};
        f.picard_fuchs = {poly_ratio({0, 1}, d), poly_ratio({-16, 0, 3}, d), RationalFunction(1)};
        f.substitution_power = 2;
        f.rescale = 16;
        CountModel m;
        m.ambient = AmbientKind::Biprojective;
        m.variables = {"x0", "x1", "y0", "y1"};
        m.terms = {{{2, 0, 2, 0}, 1, false}, {{2, 0, 0, 2}, 1, false}, {{0, 2, 2, 0}, 1, false},
                   {{0, 2, 0, 2}, 1, false}, {{1, 1, 1, 1}, 1, true}};
        m.data = f.hypergeometric;
        f.model = m;
        out.push_back(std::move(f));
    }
    {
        FamilyTag f = make_tag(FamilyId::Quartic, "quartic", "Fermat quartic in P3", 0L,
                               {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
        f.hypergeometric = {{h, Rational(1, 4), Rational(3, 4)}, {1, 1}, 256, -4};
        CountModel m;
        m.ambient = AmbientKind::Projective;
        m.weights = {1, 1, 1, 1};
        m.variables = {"x0", "x1", "x2", "x3"};
        m.terms = {{{4, 0, 0, 0}, 1, false}, {{0, 4, 0, 0}, 1, false}, {{0, 0, 4, 0}, 1, false},
                   {{0, 0, 0, 4}, 1, false}, {{1, 1, 1, 1}, -4, true}};
        m.psi_scale = -4;
        m.data = {{h, Rational(1, 4), Rational(3, 4)}, {1, 1}, 1, -4};
        f.model = m;
        out.push_back(std::move(f));
    }
    {
        FamilyTag f = make_tag(FamilyId::Sextic, "sextic", "sextic in P(1,1,1,3)", 2L,
                               {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-3, -1, -1}});
        f.hypergeometric = {{h, Rational(1, 6), Rational(5, 6)}, {1, 1}, 1728, -6};
        // psi^6 - 1728, psi^8 - 1728 psi^2, psi^7 - 1728 psi
        std::vector<Rational> d0{-1728, 0, 0, 0, 0, 0, 1};
        std::vector<Rational> d1{0, 0, -1728, 0, 0, 0, 0, 0, 1};
        std::vector<Rational> d2{0, -1728, 0, 0, 0, 0, 0, 1};
        f.picard_fuchs = {poly_ratio({0, 0, 0, 1}, d0), poly_ratio({-5184, 0, 0, 0, 0, 0, 7}, d1),
                          poly_ratio({5184, 0, 0, 0, 0, 0, 6}, d2), RationalFunction(1)};
        f.substitution_power = 6;
        f.rescale = 1728;
        CountModel m;
        m.ambient = AmbientKind::WeightedProjective;
        m.weights = {3, 1, 1, 1};
        m.variables = {"x0", "x1", "x2", "x3"};
        m.terms = {{{2, 0, 0, 0}, 1, false}, {{0, 6, 0, 0}, 1, false}, {{0, 0, 6, 0}, 1, false},
                   {{0, 0, 0, 6}, 1, false}, {{1, 1, 1, 1}, -1, true}};
        m.psi_scale = -1;
        m.data = f.hypergeometric;
        f.model = m;
        out.push_back(std::move(f));
    }
    {
        FamilyTag f = make_tag(FamilyId::GroupI, "group1", "Group I", 3L,
                               {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {-1, 0, -1}});
        f.hypergeometric = {{h, Rational(1, 3), Rational(2, 3)}, {1, 1}, -108, -3};
        f.clausen = std::make_pair(Rational(1, 6), Rational(1, 3));
        // psi^4 + 108 psi
        std::vector<Rational> d{0, 108, 0, 0, 1};
        f.picard_fuchs = {poly_ratio({0, 1}, d), poly_ratio({0, 0, 7}, d), poly_ratio({162, 0, 0, 6}, d),
                          RationalFunction(1)};
        f.substitution_power = 3;
        f.rescale = -108;
        out.push_back(std::move(f));
    }
    {
        FamilyTag f = make_tag(FamilyId::GroupII, "group2", "Group II", 10L,
                               {{1, 0, 0}, {0, 1, 0}, {-2, -1, 0}, {0, 0, 1}, {-2, 0, -1}});
        f.hypergeometric = {{h, Rational(1, 4), Rational(3, 4)}, {1, 1}, 256, -4};
        f.clausen = std::make_pair(Rational(1, 8), Rational(3, 8));
        // psi^4 - 256
        std::vector<Rational> d{-256, 0, 0, 0, 1};
        f.picard_fuchs = {poly_ratio({0, 1}, d), poly_ratio({0, 0, 7}, d), poly_ratio({0, 0, 0, 6}, d),
                          RationalFunction(1)};
        f.substitution_power = 4;
        f.rescale = 256;
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace detail

inline const std::vector<FamilyTag>& all_families() {
    static const std::vector<FamilyTag> families = detail::build_families();
    return families;
}

inline const FamilyTag& family(FamilyId id) {
    for (const auto& f : all_families())
        if (f.id == id) return f;
    throw Error(Errc::UnknownFamily, "unknown family id");
}

/// Accepts the canonical names plus a few spellings (case-insensitive).
inline const FamilyTag& family_by_name(std::string_view name) {
    std::string s;
    for (char c : name)
        if (c != '_' && c != '-' && c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "elliptic" || s == "ellipticp1xp1" || s == "p1xp1") return family(FamilyId::EllipticP1xP1);
    if (s == "quartic" || s == "fermatquartic") return family(FamilyId::Quartic);
    if (s == "sextic") return family(FamilyId::Sextic);
    if (s == "group1" || s == "groupi" || s == "i") return family(FamilyId::GroupI);
    if (s == "group2" || s == "groupii" || s == "ii") return family(FamilyId::GroupII);
    throw Error(Errc::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

/// False at psi = 0 and where the hypergeometric argument equals 1. psi is the
/// vertex-pencil parameter.
inline bool is_smooth_member(const FamilyTag& family, const Rational& psi) {
    if (psi == 0) return false;
    return family.hypergeometric.argument(psi) != 1;
}

inline bool is_smooth_member(std::string_view family_name, const Rational& psi) {
    return is_smooth_member(family_by_name(family_name), psi);
}

inline HWInvariant hasse_witt(const FamilyTag& family, const Rational& psi, std::uint64_t p) {
    if (!is_smooth_member(family, psi))
        throw Error(Errc::SingularMember, family.name + " is singular at psi = " + to_string(psi));
    return hasse_witt(family.pencil(), psi, p);
}

/// Binomial period identity plus agreement with the family's truncated series.
inline TruncationCheck truncation_relation_check(const FamilyTag& family, const Rational& psi, std::uint64_t p) {
    if (!is_smooth_member(family, psi))
        throw Error(Errc::SingularMember, family.name + " is singular at psi = " + to_string(psi));
    TruncationCheck r = truncation_relation_check(family.delta(), psi, p);
    r.hypergeometric = truncated_pFq(family.hypergeometric, psi, p).value;
    r.holds = r.holds && *r.hypergeometric == r.hasse_witt;
    return r;
}

inline ClausenResult clausen_check(const FamilyTag& family, const Rational& psi, std::uint64_t p) {
    if (!family.clausen) throw Error(Errc::InvalidArgument, family.name + " has no Clausen pair");
    const auto& [a, b] = *family.clausen;
    return clausen_check(a, b, family.hypergeometric.c, family.hypergeometric.e, psi, p);
}

} // namespace hwmt

#endif
