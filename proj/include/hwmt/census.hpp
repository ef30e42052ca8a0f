#ifndef HWMT_CENSUS_HPP
#define HWMT_CENSUS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "family.hpp"
#include "polytope_io.hpp"

namespace hwmt {

/// Reads a polytope file and rejects non-reflexive entries.
inline std::vector<PolytopeRecord> load_polytopes(const std::string& path) {
    auto records = read_polytopes_file(path);
    for (const auto& r : records) {
        bool ok = false;
        try {
            ok = is_reflexive(r.polytope);
        } catch (const Error&) {
            ok = false;
        }
        if (!ok) throw Error(Errc::NotReflexive, "polytope " + std::to_string(r.id) + " is not reflexive");
    }
    return records;
}

struct KernelType {
    KernelLattice kernel;
    std::vector<long> members;
    std::optional<std::string> label;
};

namespace detail {

inline std::optional<std::string> kernel_type_label(const LatticePolytope& rep) {
    const auto k = vertex_kernel(rep);
    if (rep.num_vertices() == static_cast<std::size_t>(rep.dim()) + 1 && k.rank() == 1) {
        IntVector w = k.basis[0];
        if (std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x < 0; }))
            for (auto& x : w) x = -x;
        std::sort(w.begin(), w.end());
        return to_string(w);
    }
    for (const auto& f : all_families()) {
        if (!f.polytope_id || static_cast<int>(f.delta_vertices[0].size()) != rep.dim()) continue;
        const auto d = f.delta();
        if (d.num_vertices() == rep.num_vertices() && d.num_vertices() != static_cast<std::size_t>(d.dim()) + 1 &&
            is_kernel_pair(d, rep).holds)
            return f.label;
    }
    return std::nullopt;
}

inline const PolytopeRecord& find_record(const std::vector<PolytopeRecord>& records, long id) {
    for (const auto& r : records)
        if (r.id == id) return r;
    throw Error(Errc::InvalidArgument, "no polytope with id " + std::to_string(id));
}

} // namespace detail

/// Partition into classes of mutually combinatorially equivalent polytopes with
/// equal vertex kernels. Types appear in order of their first member.
inline std::vector<KernelType> classify_kernel_types(const std::vector<PolytopeRecord>& records) {
    std::vector<KernelType> types;
    std::vector<const LatticePolytope*> reps;
    for (const auto& r : records) {
        bool placed = false;
        for (std::size_t t = 0; t < types.size() && !placed; ++t) {
            if (reps[t]->num_vertices() != r.polytope.num_vertices() || reps[t]->dim() != r.polytope.dim()) continue;
            if (is_kernel_pair(*reps[t], r.polytope).holds) {
                types[t].members.push_back(r.id);
                placed = true;
            }
        }
        if (!placed) {
            types.push_back({vertex_kernel(r.polytope), {r.id}, detail::kernel_type_label(r.polytope)});
            reps.push_back(&r.polytope);
        }
    }
    for (auto& t : types) std::sort(t.members.begin(), t.members.end());
    return types;
}

/// Unordered pairs (a <= b) of mirror kernel pairs; self-pairs appear once.
inline std::vector<std::pair<long, long>> find_mirror_kernel_pairs(const std::vector<PolytopeRecord>& records) {
    std::vector<std::pair<long, long>> pairs;
    for (std::size_t i = 0; i < records.size(); ++i)
        for (std::size_t j = 0; j < records.size(); ++j) {
            const auto& a = records[i];
            const auto& b = records[j];
            if (a.id > b.id) continue;
            if (a.polytope.dim() != b.polytope.dim() || a.polytope.num_vertices() != b.polytope.num_vertices() ||
                a.polytope.facets().size() != b.polytope.num_vertices())
                continue;
            if (is_mirror_kernel_pair(a.polytope, b.polytope).holds) pairs.emplace_back(a.id, b.id);
        }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

struct CensusResult {
    std::vector<KernelType> types;
    std::vector<std::pair<long, long>> pairs;

    std::size_t self_dual() const {
        return static_cast<std::size_t>(
            std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.first == p.second; }));
    }

    /// Index into `types` of the type containing `id`, if any.
    std::optional<std::size_t> type_of(long id) const {
        for (std::size_t t = 0; t < types.size(); ++t)
            if (std::binary_search(types[t].members.begin(), types[t].members.end(), id)) return t;
        return std::nullopt;
    }
};

inline CensusResult run_census(const std::vector<PolytopeRecord>& records) {
    return {classify_kernel_types(records), find_mirror_kernel_pairs(records)};
}

/// One mirror kernel pair of polygons with its shape.
struct PolygonPairEntry {
    long first = 0;
    long second = 0;
    std::size_t vertices = 0;
    bool self_dual = false;
};

inline std::vector<PolygonPairEntry> polygon_inventory(const std::vector<PolytopeRecord>& records) {
    std::vector<PolygonPairEntry> out;
    for (const auto& [a, b] : find_mirror_kernel_pairs(records)) {
        const auto& ra = detail::find_record(records, a);
        if (ra.polytope.dim() != 2) continue;
        out.push_back({a, b, ra.polytope.num_vertices(), a == b});
    }
    return out;
}

inline std::string polygon_name(std::size_t k) {
    switch (k) {
    case 3: return "triangle";
    case 4: return "quadrilateral";
    case 5: return "pentagon";
    case 6: return "hexagon";
    default: return std::to_string(k) + "-gon";
    }
}

inline std::string type_name(const KernelType& t) {
    return t.label ? *t.label : "type of " + std::to_string(t.members.front());
}

inline nlohmann::ordered_json census_json(const CensusResult& c) {
    nlohmann::ordered_json j;
    j["pairs"] = c.pairs.size();
    j["self_dual"] = c.self_dual();
    j["types"] = c.types.size();
    auto& pl = j["pair_list"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : c.pairs) pl.push_back({a, b});
    auto& tl = j["type_list"] = nlohmann::ordered_json::array();
    for (const auto& t : c.types) {
        nlohmann::ordered_json e;
        e["label"] = type_name(t);
        e["kernel"] = t.kernel.basis;
        e["members"] = t.members;
        auto& tp = e["mirror_kernel_pairs"] = nlohmann::ordered_json::array();
        for (const auto& [a, b] : c.pairs)
            if (std::binary_search(t.members.begin(), t.members.end(), a)) tp.push_back({a, b});
        tl.push_back(std::move(e));
    }
    return j;
}

/// JSON, CSV or markdown rendering; throws UnknownFormat otherwise.
inline std::string report(const CensusResult& c, const std::string& format) {
    std::ostringstream out;
    if (format == "json") {
        out << census_json(c).dump(2) << '\n';
    } else if (format == "csv") {
        out << "first,second,self_dual,type\n";
        for (const auto& [a, b] : c.pairs) {
            auto t = c.type_of(a);
            out << a << ',' << b << ',' << (a == b ? "true" : "false") << ",\"" << (t ? type_name(c.types[*t]) : "")
                << "\"\n";
        }
    } else if (format == "markdown" || format == "md") {
        out << "| Type | Kernel | Members | Mirror kernel pairs |\n";
        out << "|---|---|---|---|\n";
        for (const auto& t : c.types) {
            std::string members, pairs;
            for (auto m : t.members) members += (members.empty() ? "" : ", ") + std::to_string(m);
            for (const auto& [a, b] : c.pairs)
                if (std::binary_search(t.members.begin(), t.members.end(), a))
                    pairs += (pairs.empty() ? "" : ", ") + ("(" + std::to_string(a) + ", " + std::to_string(b) + ")");
            out << "| " << type_name(t) << " | " << to_string(t.kernel) << " | " << members << " | " << pairs << " |\n";
        }
        out << "\n" << c.pairs.size() << " mirror kernel pairs, " << c.self_dual() << " self-dual, in "
            << c.types.size() << " kernel types.\n";
    } else {
        throw Error(Errc::UnknownFormat, "unknown report format '" + format + "'");
    }
    return out.str();
}

} // namespace hwmt

#endif
