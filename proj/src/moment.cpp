#include "hilbsplit/moment.hpp"

#include <algorithm>

#include "hilbsplit/ring.hpp"

namespace hilbsplit {

int FixedPoint::n() const {
  int total = 0;
  for (int h : columnHeights) total += h;
  return total;
}

std::set<Box> FixedPoint::standardSet() const {
  std::set<Box> out;
  for (std::size_t i = 0; i < columnHeights.size(); ++i)
    for (int j = 0; j < columnHeights[i]; ++j) out.insert({static_cast<int>(i), j});
  return out;
}

std::set<Box> FixedPoint::border() const {
  const std::set<Box> s = standardSet();
  std::set<Box> out;
  for (const auto& [i, j] : s) {
    if (!s.count({i + 1, j})) out.insert({i + 1, j});
    if (!s.count({i, j + 1})) out.insert({i, j + 1});
  }
  return out;
}

FixedPoint FixedPoint::transpose() const {
  if (columnHeights.empty()) return {};
  std::vector<int> rows(static_cast<std::size_t>(columnHeights.front()), 0);
  for (int h : columnHeights)
    for (int j = 0; j < h; ++j) ++rows[static_cast<std::size_t>(j)];
  return FixedPoint{std::move(rows)};
}

std::vector<std::string> FixedPoint::idealGenerators() const {
  std::vector<std::string> out;
  const int width = static_cast<int>(columnHeights.size());
  int prev = -1;
  for (int i = 0; i <= width; ++i) {
    const int h = (i < width) ? columnHeights[static_cast<std::size_t>(i)] : 0;
    if (h == prev) continue;
    prev = h;
    std::string g;
    if (i >= 1) g += (i == 1) ? "x" : "x^" + std::to_string(i);
    if (h >= 1) {
      if (!g.empty()) g += "*";
      g += (h == 1) ? "y" : "y^" + std::to_string(h);
    }
    out.push_back(g);
    if (h == 0) break;
  }
  return out;
}

namespace {

void partitionsInto(int n, int maxPart, std::vector<int>& acc,
                    std::vector<FixedPoint>& out) {
  if (n == 0) {
    out.push_back(FixedPoint{acc});
    return;
  }
  for (int part = std::min(n, maxPart); part >= 1; --part) {
    acc.push_back(part);
    partitionsInto(n - part, part, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<FixedPoint> enumerateFixedPoints(int n) {
  if (n < 1) throw Error("need n >= 1");
  std::vector<FixedPoint> out;
  std::vector<int> acc;
  partitionsInto(n, n, acc, out);
  return out;
}

std::pair<int, int> armLeg(const FixedPoint& fp, Box box) {
  const std::set<Box> s = fp.standardSet();
  if (!s.count(box)) throw Error("box is not in the standard set");
  const auto [i, j] = box;
  int arm = 0, leg = 0;
  for (const auto& [bi, bj] : s) {
    if (bi == i && bj > j) ++arm;
    if (bj == j && bi > i) ++leg;
  }
  return {arm, leg};
}

std::vector<std::pair<int, int>> tangentWeights(const FixedPoint& fp) {
  std::vector<std::pair<int, int>> out;
  for (const Box& box : fp.standardSet()) {
    const auto [a, l] = armLeg(fp, box);
    out.push_back({-l, a + 1});
    out.push_back({l + 1, -a});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, int> momentPoint(const FixedPoint& fp) {
  int x = 0, y = 0;
  for (const auto& [i, j] : fp.standardSet()) {
    x += i;
    y += j;
  }
  return {x, y};
}

std::vector<std::pair<int, int>> punctualDirections(int n) {
  if (n < 1) throw Error("need n >= 1");
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n - 1; ++i) out.push_back({1, -i});
  return out;
}

}  // namespace hilbsplit
