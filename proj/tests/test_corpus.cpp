#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <map>

#include "gbs/corpus.hpp"

using namespace gbs;
using namespace gbs::corpus;

TEST_CASE("representative catalogs") {
  SECTION("d=4 has the ten classes") {
    const auto cat = representatives(Dimension{4});
    REQUIRE(cat.entries.size() == 10);
    CHECK(cat.entries.front().first == "K");
    CHECK(cat.entries.front().second ==
          GbsSet(Dimension{4}, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
  }
  SECTION("d=6 has the 31 classes") {
    const auto cat = representatives(Dimension{6});
    REQUIRE(cat.entries.size() == 31);
    std::map<std::string, GbsSet> by_name(cat.entries.begin(), cat.entries.end());
    CHECK(by_name.at("C25") == GbsSet(Dimension{6}, {{0, 0}, {0, 1}, {2, 0}, {4, 0}}));
    CHECK(by_name.at("C31") == GbsSet(Dimension{6}, {{0, 0}, {0, 3}, {3, 0}, {3, 3}}));
  }
  SECTION("other dimensions are unsupported") {
    CHECK_THROWS_AS(representatives(Dimension{5}), UnsupportedDimension);
  }
}

TEST_CASE("catalog sanity") {
  const auto cat = representatives(Dimension{6});
  std::set<std::set<Gpm>> as_sets;
  std::map<std::set<Gpm>, std::set<std::string>> by_delta;
  for (const auto& [name, set] : cat.entries) {
    as_sets.insert({set.elements().begin(), set.elements().end()});
    by_delta[diff_set(set).elements()].insert(name);
  }
  CHECK(as_sets.size() == 31);  // pairwise distinct as sets

  // distinct classes may share a difference set; exactly these groups do
  std::set<std::set<std::string>> collisions;
  for (const auto& [delta, names] : by_delta)
    if (names.size() > 1) collisions.insert(names);
  CHECK(collisions == std::set<std::set<std::string>>{
                          {"C1", "C2", "C8"}, {"C21", "C25"}, {"C29", "C30"}});
  CHECK(by_delta.size() == 27);
}

TEST_CASE("table ids") {
  CHECK(parse_table_id("I") == TableId::I);
  CHECK(parse_table_id("VI") == TableId::VI);
  CHECK_FALSE(parse_table_id("VII").has_value());
  CHECK_FALSE(parse_table_id("vii").has_value());
}

TEST_CASE("every shipped table reproduces") {
  const std::map<TableId, int> cells{{TableId::I, 16},  {TableId::II, 30}, {TableId::III, 25},
                                     {TableId::IV, 36}, {TableId::V, 64},  {TableId::VI, 31}};
  for (const auto id : all_tables()) {
    const auto diff = reproduce_table(id);
    INFO("table " << to_string(id));
    CHECK(diff.cells_total == cells.at(id));
    CHECK(diff.ok());
  }
}

TEST_CASE("a corrupted cell is reported") {
  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path() / "gbs_corpus_test";
  fs::create_directories(tmp);
  std::ofstream(tmp / "mcs_grid_d4.txt") << "0|1|C0,0\n0|2|C0,0\n";  // second cell is wrong
  const auto diff = reproduce_table(TableId::I, tmp);
  CHECK(diff.cells_total == 2);
  REQUIRE(diff.mismatches.size() == 1);
  CHECK(diff.mismatches.front().row == "0");
  CHECK(diff.mismatches.front().col == "2");
  CHECK(diff.mismatches.front().actual == "C0,0;C2,0;C2,1");
  fs::remove_all(tmp);
}
