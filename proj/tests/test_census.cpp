#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace hwmt;
using namespace hwmt::test;

namespace {

const CensusResult& census3d() {
    static const CensusResult c = run_census(tables3d());
    return c;
}

} // namespace

TEST(Census, FixtureIsReflexive) {
    EXPECT_EQ(tables3d().size(), 58u);
    EXPECT_NO_THROW(load_polytopes(fixture("tables3d.txt")));
}

TEST(Census, PairAndTypeCounts) {
    const auto& c = census3d();
    EXPECT_EQ(c.pairs.size(), 32u);
    EXPECT_EQ(c.self_dual(), 6u);
    EXPECT_EQ(c.types.size(), 16u);
}

TEST(Census, EveryPolytopeBelongsToExactlyOneType) {
    const auto& c = census3d();
    std::size_t total = 0;
    for (const auto& t : c.types) total += t.members.size();
    EXPECT_EQ(total, tables3d().size());
    for (const auto& r : tables3d()) EXPECT_TRUE(c.type_of(r.id).has_value()) << r.id;
}

TEST(Census, PairsStayInsideTheirType) {
    const auto& c = census3d();
    for (const auto& [a, b] : c.pairs) EXPECT_EQ(c.type_of(a), c.type_of(b)) << a << "," << b;
}

TEST(Census, NamedTypes) {
    const auto& c = census3d();
    auto label_of = [&](long id) { return type_name(c.types[*c.type_of(id)]); };
    EXPECT_EQ(label_of(0), "(1,1,1,1)");
    EXPECT_EQ(label_of(2), "(1,1,1,3)");
    EXPECT_EQ(label_of(3), "Group I");
    EXPECT_EQ(label_of(10), "Group II");
    const auto& g1 = c.types[*c.type_of(3)];
    EXPECT_EQ(g1.members, (std::vector<long>{3, 753, 754, 4283}));
    const auto& g2 = c.types[*c.type_of(10)];
    EXPECT_EQ(g2.members, (std::vector<long>{10, 433, 436, 3316, 3321, 4314}));
    EXPECT_EQ(to_string(g1.kernel), "<(1,0,0,1,1), (0,1,1,-1,-1)>");
    EXPECT_EQ(to_string(g2.kernel), "<(2,0,0,1,1), (0,1,1,-1,-1)>");
}

TEST(Census, TwoDimensionalInventory) {
    const auto inv = polygon_inventory(polygons2d());
    std::vector<std::tuple<long, long, std::string>> got;
    for (const auto& e : inv) got.emplace_back(e.first, e.second, polygon_name(e.vertices));
    const std::vector<std::tuple<long, long, std::string>> expected{
        {0, 15, "triangle"},  {1, 12, "triangle"},      {3, 14, "quadrilateral"}, {6, 6, "triangle"},
        {7, 7, "quadrilateral"}, {8, 8, "pentagon"}, {9, 9, "hexagon"}};
    EXPECT_EQ(got, expected);
}

TEST(Census, Reports) {
    const auto& c = census3d();
    const auto j = nlohmann::json::parse(report(c, "json"));
    EXPECT_EQ(j["pairs"], 32);
    EXPECT_EQ(j["self_dual"], 6);
    EXPECT_EQ(j["types"], 16);
    EXPECT_EQ(j["pair_list"].size(), 32u);

    std::istringstream csv(report(c, "csv"));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "first,second,self_dual,type");
    std::size_t rows = 0;
    while (std::getline(csv, line)) rows += !line.empty();
    EXPECT_EQ(rows, 32u);

    const auto md = report(c, "markdown");
    EXPECT_NE(md.find("| Group II |"), std::string::npos);
    EXPECT_NE(md.find("32 mirror kernel pairs, 6 self-dual, in 16 kernel types."), std::string::npos);

    try {
        report(c, "xml");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnknownFormat);
    }
}

TEST(Census, RejectsNonReflexiveInput) {
    const auto path = std::filesystem::temp_directory_path() / "hwmt_nonreflexive.txt";
    {
        std::ofstream out(path);
        out << "1 2 3\n2 0\n0 2\n-2 -2\n";
    }
    try {
        load_polytopes(path.string());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotReflexive);
    }
    std::filesystem::remove(path);
}
