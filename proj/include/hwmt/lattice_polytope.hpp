#ifndef HWMT_LATTICE_POLYTOPE_HPP
#define HWMT_LATTICE_POLYTOPE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "integer_matrix.hpp"

namespace hwmt {

using LatticePoint = IntVector;

/// `vertices[i]` of the source polytope maps to `vertices[bijection[i]]` of the target.
using Bijection = std::vector<std::size_t>;

/// Half-space <normal, x> >= -offset. `vertices` lists the incident vertex indices.
struct FacetInequality {
    IntVector normal;
    std::int64_t offset = 0;
    std::vector<std::size_t> vertices;
};

/// Integer relations among an ordered list of points, as a canonical (Hermite) basis.
struct KernelLattice {
    std::size_t ambient_rank = 0;
    IntMatrix basis;

    std::size_t rank() const { return basis.size(); }
    bool operator==(const KernelLattice&) const = default;
};

inline std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(const KernelLattice& k) {
    std::string s = "<";
    for (std::size_t i = 0; i < k.basis.size(); ++i) {
        if (i) s += ", ";
        s += to_string(k.basis[i]);
    }
    return s + ">";
}

/// Full-dimensional convex lattice polytope given by its vertices. Facets are
/// computed on construction, so a value is immutable and safe to share.
class LatticePolytope {
  public:
    explicit LatticePolytope(std::vector<LatticePoint> vertices, std::optional<long> id = std::nullopt)
        : vertices_(std::move(vertices)), id_(id) {
        if (vertices_.empty()) throw Error(Errc::Degenerate, "polytope without vertices");
        dim_ = static_cast<int>(vertices_[0].size());
        if (dim_ < 1) throw Error(Errc::Degenerate, "zero-dimensional ambient lattice");
        for (const auto& v : vertices_)
            if (static_cast<int>(v.size()) != dim_) throw Error(Errc::InvalidArgument, "mixed vertex dimensions");
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (std::size_t j = i + 1; j < vertices_.size(); ++j)
                if (vertices_[i] == vertices_[j])
                    throw Error(Errc::InvalidArgument, "repeated vertex " + to_string(vertices_[i]));
        facets_ = enumerate_facets(vertices_, dim_);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (!is_extreme(i))
                throw Error(Errc::InvalidArgument, to_string(vertices_[i]) + " is not a vertex");
    }

    /// Polytope spanned by arbitrary points; non-extreme points are discarded.
    static LatticePolytope convex_hull(std::vector<LatticePoint> points, std::optional<long> id = std::nullopt) {
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        if (points.empty()) throw Error(Errc::Degenerate, "empty point set");
        const int n = static_cast<int>(points[0].size());
        auto facets = enumerate_facets(points, n);
        std::vector<LatticePoint> verts;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (incident_rank(facets, i) == static_cast<std::size_t>(n)) verts.push_back(points[i]);
        return LatticePolytope(std::move(verts), id);
    }

    int dim() const { return dim_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const LatticePoint& vertex(std::size_t i) const { return vertices_[i]; }
    std::optional<long> id() const { return id_; }

    /// Facets sorted by normal in descending lexicographic order.
    const std::vector<FacetInequality>& facets() const { return facets_; }

    bool origin_strictly_interior() const {
        return std::all_of(facets_.begin(), facets_.end(), [](const FacetInequality& f) { return f.offset > 0; });
    }

    bool contains(const LatticePoint& x) const {
        return std::all_of(facets_.begin(), facets_.end(),
                           [&](const FacetInequality& f) { return dot(f.normal, x) >= -f.offset; });
    }

    /// Same polytope with vertices relabelled: result vertex i is vertex order[i] here.
    LatticePolytope reordered(const Bijection& order) const {
        std::vector<LatticePoint> v;
        v.reserve(order.size());
        for (auto i : order) v.push_back(vertices_.at(i));
        return LatticePolytope(std::move(v), id_);
    }

    std::vector<LatticePoint> sorted_vertices() const {
        auto v = vertices_;
        std::sort(v.begin(), v.end());
        return v;
    }

  private:
    static std::vector<FacetInequality> enumerate_facets(const std::vector<LatticePoint>& pts, int n) {
        {
            IntMatrix diffs;
            for (const auto& p : pts) {
                IntVector d(n);
                for (int j = 0; j < n; ++j) d[j] = checked_sub(p[j], pts[0][j]);
                diffs.push_back(std::move(d));
            }
            if (rank(diffs) != static_cast<std::size_t>(n))
                throw Error(Errc::Degenerate, "vertices do not span a full-dimensional polytope");
        }
        std::set<std::pair<IntVector, std::int64_t>, std::greater<>> found;
        const std::size_t k = pts.size();
        std::vector<std::size_t> idx(n);
        // Every facet contains n affinely independent vertices; try every n-subset.
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
            if (depth == static_cast<std::size_t>(n)) {
                IntMatrix rows;
                for (int j = 1; j < n; ++j) {
                    IntVector d(n);
                    for (int c = 0; c < n; ++c) d[c] = checked_sub(pts[idx[j]][c], pts[idx[0]][c]);
                    rows.push_back(std::move(d));
                }
                IntMatrix ker = integer_kernel(rows, static_cast<std::size_t>(n));
                if (ker.size() != 1) return;
                IntVector u = ker[0];
                const std::int64_t c0 = dot(u, pts[idx[0]]);
                bool ge = true, le = true;
                for (const auto& p : pts) {
                    const std::int64_t v = dot(u, p);
                    ge = ge && v >= c0;
                    le = le && v <= c0;
                }
                if (ge) {
                    found.emplace(u, -c0);
                } else if (le) {
                    for (auto& x : u) x = -x;
                    found.emplace(u, c0);
                }
                return;
            }
            for (std::size_t i = start; i < k; ++i) {
                idx[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
        std::vector<FacetInequality> facets;
        for (const auto& [normal, offset] : found) {
            FacetInequality f{normal, offset, {}};
            for (std::size_t i = 0; i < k; ++i)
                if (dot(normal, pts[i]) == -offset) f.vertices.push_back(i);
            facets.push_back(std::move(f));
        }
        return facets;
    }

    static std::size_t incident_rank(const std::vector<FacetInequality>& facets, std::size_t i) {
        IntMatrix normals;
        for (const auto& f : facets)
            if (std::binary_search(f.vertices.begin(), f.vertices.end(), i)) normals.push_back(f.normal);
        return normals.empty() ? 0 : rank(normals);
    }

    bool is_extreme(std::size_t i) const { return incident_rank(facets_, i) == static_cast<std::size_t>(dim_); }

    int dim_ = 0;
    std::vector<LatticePoint> vertices_;
    std::optional<long> id_;
    std::vector<FacetInequality> facets_;
};

inline void require_interior_origin(const LatticePolytope& p) {
    if (!p.origin_strictly_interior())
        throw Error(Errc::NotInteriorOrigin, "origin is not strictly interior");
}

/// True iff every facet lies at lattice distance one from the origin.
inline bool is_reflexive(const LatticePolytope& p) {
    require_interior_origin(p);
    return std::all_of(p.facets().begin(), p.facets().end(), [](const FacetInequality& f) { return f.offset == 1; });
}

/// Polar dual {w : <v, w> >= -1}. Dual vertex i is the normal of facet i, so the
/// output order is descending lexicographic.
inline LatticePolytope polar_dual(const LatticePolytope& p) {
    require_interior_origin(p);
    std::vector<LatticePoint> dual;
    for (const auto& f : p.facets()) {
        if (f.offset != 1)
            throw Error(Errc::NonLatticeDual, "facet " + to_string(f.normal) + " at distance " +
                                                  std::to_string(f.offset) + " gives a non-lattice dual vertex");
        dual.push_back(f.normal);
    }
    return LatticePolytope(std::move(dual));
}

/// All lattice points, ascending lexicographic.
inline std::vector<LatticePoint> lattice_points(const LatticePolytope& p) {
    const int n = p.dim();
    IntVector lo = p.vertex(0), hi = p.vertex(0);
    for (const auto& v : p.vertices())
        for (int j = 0; j < n; ++j) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    std::vector<LatticePoint> out;
    IntVector x = lo;
    for (;;) {
        if (p.contains(x)) out.push_back(x);
        int j = n - 1;
        while (j >= 0 && x[j] == hi[j]) {
            x[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++x[j];
    }
    return out;
}

inline KernelLattice kernel_of_points(const std::vector<LatticePoint>& points) {
    const std::size_t k = points.size();
    const std::size_t n = k ? points[0].size() : 0;
    IntMatrix b(n, IntVector(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) b[j][i] = points[i][j];
    return KernelLattice{k, integer_kernel(b, k)};
}

/// Integer relations among the vertices, in vertex order.
inline KernelLattice vertex_kernel(const LatticePolytope& p) { return kernel_of_points(p.vertices()); }

namespace detail {

inline std::vector<std::vector<std::size_t>> common_facet_counts(const LatticePolytope& p) {
    const std::size_t k = p.num_vertices();
    std::vector<std::vector<std::size_t>> c(k, std::vector<std::size_t>(k, 0));
    for (const auto& f : p.facets())
        for (auto i : f.vertices)
            for (auto j : f.vertices) ++c[i][j];
    return c;
}

inline std::set<std::vector<std::size_t>> facet_sets(const LatticePolytope& p) {
    std::set<std::vector<std::size_t>> s;
    for (const auto& f : p.facets()) s.insert(f.vertices);
    return s;
}

} // namespace detail

/// Calls `visit(sigma)` for every vertex bijection inducing an isomorphism of
/// vertex-facet incidences (hence of face lattices). Stops when `visit` returns false.
template <class Visitor>
void for_each_combinatorial_isomorphism(const LatticePolytope& p, const LatticePolytope& q, Visitor&& visit) {
    const std::size_t k = p.num_vertices();
    if (p.dim() != q.dim() || k != q.num_vertices() || p.facets().size() != q.facets().size()) return;
    const auto cp = detail::common_facet_counts(p);
    const auto cq = detail::common_facet_counts(q);
    const auto q_facets = detail::facet_sets(q);
    Bijection sigma(k);
    std::vector<bool> used(k, false);
    bool stop = false;

    auto verify = [&]() {
        for (const auto& f : p.facets()) {
            std::vector<std::size_t> image;
            for (auto i : f.vertices) image.push_back(sigma[i]);
            std::sort(image.begin(), image.end());
            if (!q_facets.count(image)) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (stop) return;
        if (i == k) {
            if (verify() && !visit(static_cast<const Bijection&>(sigma))) stop = true;
            return;
        }
        for (std::size_t j = 0; j < k && !stop; ++j) {
            if (used[j] || cq[j][j] != cp[i][i]) continue;
            bool ok = true;
            for (std::size_t prev = 0; prev < i && ok; ++prev) ok = cq[sigma[prev]][j] == cp[prev][i];
            if (!ok) continue;
            used[j] = true;
            sigma[i] = j;
            rec(i + 1);
            used[j] = false;
        }
    };
    rec(0);
}

inline bool is_combinatorial_isomorphism(const LatticePolytope& p, const LatticePolytope& q, const Bijection& sigma) {
    const std::size_t k = p.num_vertices();
    if (p.dim() != q.dim() || k != q.num_vertices() || sigma.size() != k ||
        p.facets().size() != q.facets().size())
        return false;
    std::vector<bool> seen(k, false);
    for (auto j : sigma) {
        if (j >= k || seen[j]) return false;
        seen[j] = true;
    }
    const auto q_facets = detail::facet_sets(q);
    for (const auto& f : p.facets()) {
        std::vector<std::size_t> image;
        for (auto i : f.vertices) image.push_back(sigma[i]);
        std::sort(image.begin(), image.end());
        if (!q_facets.count(image)) return false;
    }
    return true;
}

inline std::optional<Bijection> combinatorially_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
    std::optional<Bijection> out;
    for_each_combinatorial_isomorphism(p, q, [&](const Bijection& s) {
        out = s;
        return false;
    });
    return out;
}

/// Facet bijection induced by a combinatorial isomorphism. Facet i of p maps to
/// facet result[i] of q; for reflexive polytopes this is the bijection of dual vertices.
inline Bijection induced_facet_bijection(const LatticePolytope& p, const LatticePolytope& q, const Bijection& sigma) {
    Bijection out;
    for (const auto& f : p.facets()) {
        std::vector<std::size_t> image;
        for (auto i : f.vertices) image.push_back(sigma[i]);
        std::sort(image.begin(), image.end());
        std::size_t g = 0;
        while (g < q.facets().size() && q.facets()[g].vertices != image) ++g;
        if (g == q.facets().size()) throw Error(Errc::InvalidArgument, "bijection is not combinatorial");
        out.push_back(g);
    }
    return out;
}

struct LatticeIsomorphism {
    Bijection vertex_map;
    /// Unimodular U with U * p.vertex(i) == q.vertex(vertex_map[i]).
    IntMatrix matrix;
};

/// A GL(n,Z) map carrying p onto q, if any.
inline std::optional<LatticeIsomorphism> lattice_isomorphism(const LatticePolytope& p, const LatticePolytope& q) {
    const int n = p.dim();
    if (q.dim() != n || p.num_vertices() != q.num_vertices()) return std::nullopt;
    // n linearly independent vertices of p.
    std::vector<std::size_t> basis;
    {
        IntMatrix rows;
        for (std::size_t i = 0; i < p.num_vertices() && basis.size() < static_cast<std::size_t>(n); ++i) {
            rows.push_back(p.vertex(i));
            if (rank(rows) == rows.size())
                basis.push_back(i);
            else
                rows.pop_back();
        }
    }
    RationalMatrix a(n, std::vector<Rational>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = p.vertex(basis[c])[r];
    const auto a_inv = inverse(a);
    if (!a_inv) return std::nullopt;

    std::optional<LatticeIsomorphism> out;
    for_each_combinatorial_isomorphism(p, q, [&](const Bijection& sigma) {
        IntMatrix u(n, IntVector(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                Rational s = 0;
                for (int t = 0; t < n; ++t) s += Rational(q.vertex(sigma[basis[t]])[r]) * (*a_inv)[t][c];
                if (!is_integer(s)) return true;
                u[r][c] = static_cast<std::int64_t>(numerator(s));
            }
        const Rational det = determinant(to_rational(u));
        if (det != 1 && det != -1) return true;
        for (std::size_t i = 0; i < p.num_vertices(); ++i)
            for (int r = 0; r < n; ++r)
                if (dot(u[r], p.vertex(i)) != q.vertex(sigma[i])[r]) return true;
        out = LatticeIsomorphism{sigma, std::move(u)};
        return false;
    });
    return out;
}

struct KernelPairResult {
    bool holds = false;
    std::optional<Bijection> witness;
};

inline KernelLattice reordered_kernel(const LatticePolytope& q, const Bijection& sigma) {
    std::vector<LatticePoint> pts;
    for (auto j : sigma) pts.push_back(q.vertex(j));
    return kernel_of_points(pts);
}

/// Combinatorially equivalent with equal vertex kernels under some face-lattice
/// respecting ordering of q (or under `ordering` when given).
inline KernelPairResult is_kernel_pair(const LatticePolytope& p, const LatticePolytope& q,
                                       const std::optional<Bijection>& ordering = std::nullopt) {
    const KernelLattice kp = vertex_kernel(p);
    if (ordering) {
        if (is_combinatorial_isomorphism(p, q, *ordering) && reordered_kernel(q, *ordering) == kp)
            return {true, ordering};
        return {};
    }
    KernelPairResult out;
    for_each_combinatorial_isomorphism(p, q, [&](const Bijection& sigma) {
        if (reordered_kernel(q, sigma) != kp) return true;
        out = {true, sigma};
        return false;
    });
    return out;
}

struct DualKernelPairResult {
    bool holds = false;
    std::optional<Bijection> witness;
    /// Induced bijection of polar dual vertices.
    std::optional<Bijection> dual_witness;
};

/// Kernel pair whose polar duals are a kernel pair under the induced ordering.
inline DualKernelPairResult is_dual_kernel_pair(const LatticePolytope& p, const LatticePolytope& q) {
    if (!is_reflexive(p) || !is_reflexive(q)) throw Error(Errc::NotReflexive, "kernel pairs need reflexive polytopes");
    const LatticePolytope pd = polar_dual(p);
    const LatticePolytope qd = polar_dual(q);
    const KernelLattice kp = vertex_kernel(p);
    const KernelLattice kpd = vertex_kernel(pd);
    DualKernelPairResult out;
    for_each_combinatorial_isomorphism(p, q, [&](const Bijection& sigma) {
        if (reordered_kernel(q, sigma) != kp) return true;
        Bijection tau = induced_facet_bijection(p, q, sigma);
        if (reordered_kernel(qd, tau) != kpd) return true;
        out = {true, sigma, std::move(tau)};
        return false;
    });
    return out;
}

struct MirrorKernelPairResult {
    bool holds = false;
    bool lattice_dual = false;
    std::optional<Bijection> witness;
    std::optional<Bijection> dual_witness;
    std::optional<LatticeIsomorphism> dual_isomorphism;
};

/// q is GL(n,Z)-equivalent to the polar dual of p and (p, q) is a kernel pair
/// whose duals form a kernel pair under the induced ordering.
inline MirrorKernelPairResult is_mirror_kernel_pair(const LatticePolytope& p, const LatticePolytope& q) {
    MirrorKernelPairResult out;
    if (!is_reflexive(p) || !is_reflexive(q)) throw Error(Errc::NotReflexive, "kernel pairs need reflexive polytopes");
    if (p.dim() != q.dim() || p.num_vertices() != q.num_vertices()) return out;
    out.dual_isomorphism = lattice_isomorphism(polar_dual(p), q);
    out.lattice_dual = out.dual_isomorphism.has_value();
    if (!out.lattice_dual) return out;
    auto dk = is_dual_kernel_pair(p, q);
    out.holds = dk.holds;
    out.witness = std::move(dk.witness);
    out.dual_witness = std::move(dk.dual_witness);
    return out;
}

} // namespace hwmt

#endif
