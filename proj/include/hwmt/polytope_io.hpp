#ifndef HWMT_POLYTOPE_IO_HPP
#define HWMT_POLYTOPE_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lattice_polytope.hpp"

namespace hwmt {

struct PolytopeRecord {
    long id = 0;
    LatticePolytope polytope;
    std::string source;
};

namespace detail {

inline std::vector<std::int64_t> parse_int_line(const std::string& line, const std::string& where) {
    std::istringstream in(line);
    std::vector<std::int64_t> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw Error(Errc::ParseError, where + ": bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace detail

/// Reads records "id dim nvertices" followed by nvertices coordinate lines. Blank
/// lines separate records and '#' starts a comment.
inline std::vector<PolytopeRecord> read_polytopes(std::istream& in, const std::string& source = "<stream>") {
    std::vector<PolytopeRecord> out;
    std::string line;
    std::size_t lineno = 0;
    auto next_content = [&](std::vector<std::int64_t>& ints) {
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            ints = detail::parse_int_line(line, source + ":" + std::to_string(lineno));
            if (!ints.empty()) return true;
        }
        return false;
    };
    std::set<long> seen;
    std::vector<std::int64_t> header;
    while (next_content(header)) {
        const std::string where = source + ":" + std::to_string(lineno);
        if (header.size() != 3) throw Error(Errc::ParseError, where + ": expected 'id dim nvertices'");
        const long id = header[0];
        if (header[1] < 1 || header[2] < 1) throw Error(Errc::ParseError, where + ": bad dimensions");
        if (!seen.insert(id).second) throw Error(Errc::ParseError, where + ": duplicate id " + std::to_string(id));
        std::vector<LatticePoint> verts;
        for (std::int64_t i = 0; i < header[2]; ++i) {
            std::vector<std::int64_t> v;
            if (!next_content(v)) throw Error(Errc::ParseError, source + ": record " + std::to_string(id) + " is truncated");
            if (static_cast<std::int64_t>(v.size()) != header[1])
                throw Error(Errc::ParseError, source + ":" + std::to_string(lineno) + ": expected " +
                                                  std::to_string(header[1]) + " coordinates");
            verts.push_back(std::move(v));
        }
        try {
            out.push_back({id, LatticePolytope(std::move(verts), id), source});
        } catch (const Error& e) {
            throw Error(e.code(), "record " + std::to_string(id) + ": " + e.what());
        }
    }
    return out;
}

inline std::vector<PolytopeRecord> read_polytopes_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    auto slash = path.find_last_of('/');
    return read_polytopes(in, slash == std::string::npos ? path : path.substr(slash + 1));
}

inline void write_polytope(std::ostream& out, long id, const LatticePolytope& p) {
    out << id << ' ' << p.dim() << ' ' << p.num_vertices() << '\n';
    for (const auto& v : p.vertices()) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
        out << '\n';
    }
}

inline void write_polytopes(std::ostream& out, const std::vector<PolytopeRecord>& records) {
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i) out << '\n';
        write_polytope(out, records[i].id, records[i].polytope);
    }
}

} // namespace hwmt

#endif
