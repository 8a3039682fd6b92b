#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "gbs/mcs.hpp"

using namespace gbs;

namespace {

// brute-force membership filter: the oracle mcs_containing must match
std::vector<McsId> containing_by_filter(Gpm g, Dimension d) {
  std::vector<McsId> out;
  for (const auto& id : enumerate_mcs(d))
    if (materialize(id, d).members.count(canonical(g, d))) out.push_back(id);
  return out;
}

bool pairwise_commuting(const std::set<Gpm>& members, Dimension d) {
  for (auto a = members.begin(); a != members.end(); ++a)
    for (auto b = std::next(a); b != members.end(); ++b)
      if (!commutes(*a, *b, d)) return false;
  return true;
}

// no GPM outside the set commutes with all of it
bool maximal(const std::set<Gpm>& members, Dimension d) {
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const Gpm g{m, n};
      if (members.count(g)) continue;
      bool commutes_all = true;
      for (const auto& h : members)
        if (!commutes(g, h, d)) { commutes_all = false; break; }
      if (commutes_all) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("enumerate_mcs") {
  CHECK(enumerate_mcs(Dimension{4}) ==
        std::vector<McsId>{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}});
  CHECK(enumerate_mcs(Dimension{5}).size() == 6);
  CHECK(enumerate_mcs(Dimension{6}).size() == 12);
  for (int d = 2; d <= 12; ++d)
    CHECK(static_cast<int>(enumerate_mcs(Dimension{d}).size()) == sigma_divisors(Dimension{d}).sigma);
}

TEST_CASE("materialize") {
  SECTION("C_{2,1} at d=4") {
    CHECK(materialize({2, 1}, Dimension{4}).members ==
          std::set<Gpm>{{0, 0}, {0, 2}, {2, 1}, {2, 3}});
  }
  SECTION("C_{0,0} is the phase column") {
    std::set<Gpm> expected;
    for (int y = 0; y < 6; ++y) expected.insert({0, y});
    CHECK(materialize({0, 0}, Dimension{6}).members == expected);
  }
  SECTION("C_{1,0} is the shift row") {
    for (int d : {3, 5, 8}) {
      std::set<Gpm> expected;
      for (int x = 0; x < d; ++x) expected.insert({x, 0});
      CHECK(materialize({1, 0}, Dimension{d}).members == expected);
    }
  }
  SECTION("the i = d label is canonicalized to C_{0,0}") {
    const auto mcs = materialize({4, 0}, Dimension{4});
    CHECK(mcs.id == McsId{0, 0});
    CHECK(mcs.members == materialize({0, 0}, Dimension{4}).members);
  }
  SECTION("invalid labels are rejected") {
    CHECK_THROWS_AS(materialize({3, 0}, Dimension{4}), std::invalid_argument);
    CHECK_THROWS_AS(materialize({2, 2}, Dimension{4}), std::invalid_argument);
    CHECK_THROWS_AS(materialize({0, 1}, Dimension{4}), std::invalid_argument);
  }
}

TEST_CASE("mcs_containing examples") {
  CHECK(mcs_containing({0, 1}, Dimension{4}) == std::vector<McsId>{{0, 0}});
  CHECK(mcs_containing({2, 2}, Dimension{4}) == std::vector<McsId>{{1, 1}, {1, 3}, {2, 0}});
  CHECK(mcs_containing({3, 0}, Dimension{6}) == std::vector<McsId>{{1, 0}, {1, 2}, {1, 4}, {3, 0}});
  CHECK(mcs_containing({2, 1}, Dimension{5}) == std::vector<McsId>{{1, 3}});
  CHECK(mcs_containing({0, 0}, Dimension{6}) == enumerate_mcs(Dimension{6}));
}

TEST_CASE("mcs_containing equals the brute-force membership filter for d <= 12") {
  for (int d = 2; d <= 12; ++d) {
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n)
        REQUIRE(mcs_containing({m, n}, Dimension{d}) == containing_by_filter({m, n}, Dimension{d}));
  }
}

TEST_CASE("every MCS has d pairwise-commuting members, is maximal, and the union covers") {
  for (int dv : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
    const Dimension d{dv};
    std::set<Gpm> covered;
    std::set<std::set<Gpm>> distinct;
    for (const auto& id : enumerate_mcs(d)) {
      const auto mcs = materialize(id, d);
      REQUIRE(static_cast<int>(mcs.members.size()) == dv);
      REQUIRE(pairwise_commuting(mcs.members, d));
      REQUIRE(maximal(mcs.members, d));
      covered.insert(mcs.members.begin(), mcs.members.end());
      distinct.insert(mcs.members);
    }
    REQUIRE(static_cast<int>(covered.size()) == dv * dv);
    REQUIRE(distinct.size() == enumerate_mcs(d).size());  // labels name distinct sets
  }
}
