#ifndef HILBSPLIT_MOMENT_HPP
#define HILBSPLIT_MOMENT_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hilbsplit/ring.hpp"

namespace hilbsplit {

using Box = std::pair<int, int>;  // (i, j) with x^i y^j

/// A torus fixed point of Hilb^n(A^2): the staircase of a colength-n monomial
/// ideal, canonicalized as weakly decreasing column heights.
struct FixedPoint {
  std::vector<int> columnHeights;

  int n() const;
  std::set<Box> standardSet() const;
  std::set<Box> border() const;
  FixedPoint transpose() const;
  /// Minimal monomial generators, e.g. {"y^3", "x*y^2", "x^2"}.
  std::vector<std::string> idealGenerators() const;
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

std::vector<FixedPoint> enumerateFixedPoints(int n);

/// Arm: boxes of the standard set above (i,j) in the same column.
/// Leg: boxes to the right in the same row.
std::pair<int, int> armLeg(const FixedPoint& fp, Box box);

/// The 2n tangent weights {(-l, a+1)} u {(l+1, -a)} over the standard set.
std::vector<std::pair<int, int>> tangentWeights(const FixedPoint& fp);

/// Coordinate sum over the standard set.
std::pair<int, int> momentPoint(const FixedPoint& fp);

/// X-ray edge directions leaving the vertex <x, y^n> within the punctual locus.
std::vector<std::pair<int, int>> punctualDirections(int n);

}  // namespace hilbsplit

#endif
