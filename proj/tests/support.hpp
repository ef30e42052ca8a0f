#ifndef HWMT_TESTS_SUPPORT_HPP
#define HWMT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <hwmt/hwmt.hpp>

#ifndef HWMT_FIXTURE_DIR
#define HWMT_FIXTURE_DIR "fixtures"
#endif

namespace hwmt::test {

inline std::string fixture(const std::string& name) { return std::string(HWMT_FIXTURE_DIR) + "/" + name; }

inline const std::vector<PolytopeRecord>& tables3d() {
    static const auto records = read_polytopes_file(fixture("tables3d.txt"));
    return records;
}

inline const std::vector<PolytopeRecord>& polygons2d() {
    static const auto records = read_polytopes_file(fixture("polygons2d.txt"));
    return records;
}

inline const LatticePolytope& by_id(const std::vector<PolytopeRecord>& records, long id) {
    for (const auto& r : records)
        if (r.id == id) return r.polytope;
    throw Error(Errc::InvalidArgument, "missing id " + std::to_string(id));
}

/// Polynomial with coefficients listed from the constant term up.
inline Polynomial poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(std::move(v));
}

inline RationalFunction ratio(const Polynomial& n, const Polynomial& d) { return RationalFunction(n, d); }

inline Rational q(long a, long b = 1) { return Rational(a, b); }

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
    return Rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

inline std::uint64_t random_prime(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    for (;;) {
        auto p = static_cast<std::uint64_t>(uniform(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
        if (is_prime(p)) return p;
    }
}

} // namespace hwmt::test

#endif
