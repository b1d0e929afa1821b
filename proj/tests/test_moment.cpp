#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "hilbsplit/moment.hpp"

using namespace hilbsplit;

namespace {

std::multiset<std::pair<int, int>> weightSet(const FixedPoint& fp) {
  const auto w = tangentWeights(fp);
  return {w.begin(), w.end()};
}

}  // namespace

TEST_CASE("fixed point counts are partition numbers") {
  CHECK(enumerateFixedPoints(1).size() == 1);
  CHECK(enumerateFixedPoints(3).size() == 3);
  CHECK(enumerateFixedPoints(5).size() == 7);
  CHECK(enumerateFixedPoints(8).size() == 22);
  CHECK_THROWS_AS(enumerateFixedPoints(0), Error);
}

TEST_CASE("the three fixed points of Hilb^3") {
  const auto points = enumerateFixedPoints(3);
  std::vector<std::vector<std::string>> gens;
  for (const auto& fp : points) gens.push_back(fp.idealGenerators());
  CHECK(gens == std::vector<std::vector<std::string>>{
                    {"y^3", "x"}, {"y^2", "x*y", "x^2"}, {"y", "x^3"}});
}

TEST_CASE("the seven fixed points of Hilb^5 as listed") {
  std::vector<std::vector<std::string>> expected{
      {"y^5", "x"},           {"y^4", "x*y", "x^2"},   {"y^3", "x*y^2", "x^2"},
      {"y^3", "x*y", "x^3"},  {"y^2", "x^2*y", "x^3"}, {"y^2", "x*y", "x^4"},
      {"y", "x^5"}};
  std::vector<std::vector<std::string>> got;
  for (const auto& fp : enumerateFixedPoints(5)) got.push_back(fp.idealGenerators());
  CHECK(got == expected);
}

TEST_CASE("standard set and border of <x^2, x*y^2, y^3>") {
  const FixedPoint fp{{3, 2}};  // <x^2, x y^2, y^3>
  CHECK(fp.idealGenerators() == std::vector<std::string>{"y^3", "x*y^2", "x^2"});
  CHECK(fp.standardSet() ==
        std::set<Box>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}});
  CHECK(fp.border() == std::set<Box>{{2, 0}, {2, 1}, {1, 2}, {0, 3}});
}

TEST_CASE("one-box and column staircases") {
  const FixedPoint point{{1}};
  CHECK(point.standardSet() == std::set<Box>{{0, 0}});
  CHECK(point.border() == std::set<Box>{{1, 0}, {0, 1}});

  const FixedPoint column{{4}};
  CHECK(column.standardSet() == std::set<Box>{{0, 0}, {0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("arm and leg") {
  const FixedPoint fp{{2, 1}};  // <x^2, x y, y^2>
  CHECK(armLeg(fp, {0, 0}) == std::pair<int, int>{1, 1});
  CHECK(armLeg(fp, {1, 0}) == std::pair<int, int>{0, 0});
  CHECK(armLeg(fp, {0, 1}) == std::pair<int, int>{0, 0});
  CHECK_THROWS_AS(armLeg(fp, {1, 1}), Error);
}

TEST_CASE("tangent weights") {
  const FixedPoint fp{{2, 1}};
  CHECK(weightSet(fp) == std::multiset<std::pair<int, int>>{
                             {-1, 2}, {2, -1}, {0, 1}, {1, 0}, {0, 1}, {1, 0}});

  const FixedPoint one{{1}};
  CHECK(weightSet(one) == std::multiset<std::pair<int, int>>{{0, 1}, {1, 0}});

  for (int n = 1; n <= 8; ++n)
    for (const auto& point : enumerateFixedPoints(n))
      CHECK(tangentWeights(point).size() == static_cast<std::size_t>(2 * n));
}

TEST_CASE("transpose symmetry of weights and moment points") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& fp : enumerateFixedPoints(n)) {
      const FixedPoint tr = fp.transpose();
      std::multiset<std::pair<int, int>> swapped;
      for (const auto& [w1, w2] : tangentWeights(fp)) swapped.insert({w2, w1});
      CHECK(weightSet(tr) == swapped);
      const auto [mx, my] = momentPoint(fp);
      CHECK(momentPoint(tr) == std::pair<int, int>{my, mx});
    }
}

TEST_CASE("moment points") {
  CHECK(momentPoint(FixedPoint{{2, 1}}) == std::pair<int, int>{1, 1});
  for (int n = 1; n <= 8; ++n)
    CHECK(momentPoint(FixedPoint{{n}}) == std::pair<int, int>{0, n * (n - 1) / 2});
}

TEST_CASE("punctual directions") {
  CHECK(punctualDirections(5) ==
        std::vector<std::pair<int, int>>{{1, -1}, {1, -2}, {1, -3}, {1, -4}});
  CHECK(punctualDirections(1).empty());
}
