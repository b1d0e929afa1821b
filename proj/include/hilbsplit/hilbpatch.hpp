#ifndef HILBSPLIT_HILBPATCH_HPP
#define HILBSPLIT_HILBPATCH_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hilbsplit/groebner.hpp"

namespace hilbsplit {

/// The coordinate ring of U<x,y^n>: variables a1,b1,...,an,bn with the
/// T^2-grading a_i -> (-1, i-1), b_i -> (0, -i) and the composite order
/// Revlex_{b_n}, Lex_{a_n}, ..., Revlex_{b_1}, Lex_{a_1}.
class PatchRing {
 public:
  explicit PatchRing(int n, std::int64_t p);

  int n() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  const OrderSpec& fullOrder() const { return ring_->defaultOrder(); }
  int aIndex(int i) const;  // 1-based
  int bIndex(int i) const;
  Polynomial aVar(int i) const { return Polynomial::variable(ring_, aIndex(i)); }
  Polynomial bVar(int i) const { return Polynomial::variable(ring_, bIndex(i)); }

 private:
  int n_;
  RingPtr ring_;
};

/// n x n matrix of coefficient polynomials; entry (i,1) = -a_i and
/// (i,j) = -c_{ij} for j >= 2.
class CoeffMatrix {
 public:
  CoeffMatrix(const PatchRing& patch, int level);

  int size() const { return static_cast<int>(entries_.size()); }
  const Polynomial& entry(int i, int j) const;  // 1-based
  Polynomial determinant() const;
  std::vector<Polynomial> minors(int k) const;
  Polynomial minorOf(const std::vector<int>& rows, const std::vector<int>& cols) const;

 private:
  std::vector<std::vector<Polynomial>> entries_;
  RingPtr ring_;
};

/// Closed coefficient forms: c_{i1} = a_i,
/// c_{ij} = sum a_{k+i} b_{k+j-1} for i < j, and
/// c_{ij} = a_{i-j+1} - sum a_{k+i-j+1} b_k for i >= j.  `size` is the matrix
/// level; indices are validated against it.
Polynomial cCoefficient(const PatchRing& patch, int size, int i, int j);

CoeffMatrix buildMatrix(const PatchRing& patch, int level);

/// f_n = -b_n det(M_n); degree 2n; initial form a1 b1 ... an bn.
Polynomial splittingPolynomial(const PatchRing& patch);

Ideal minorsIdeal(const PatchRing& patch, const CoeffMatrix& M, int k);

enum class StratumFlag { Plus0, Plus1 };

/// Validated 4-tuple (s,u,t,flag) naming a compatibly split stratum.
struct StratumLabel {
  int s = 0, u = 0, t = 0;
  StratumFlag flag = StratumFlag::Plus0;

  bool isValid(int n) const;
  int dimension() const;  // s + 2t, plus 1 for the +1 flag
  std::string str() const;
  static StratumLabel parse(const std::string& text);
  friend auto operator<=>(const StratumLabel&, const StratumLabel&) = default;
};

std::vector<StratumLabel> enumerateStrata(int n);

Ideal stratumIdeal(const PatchRing& patch, const StratumLabel& label);

enum class DegenDirection { RevlexBn, LexAnAfterRevlexBn };
enum class LineFactor { Zero, Line, Unused };

struct DegenComponent {
  StratumLabel label;
  int size;  // n or n-1
  LineFactor bn = LineFactor::Unused;
  LineFactor an = LineFactor::Unused;
};

/// Exact transcription of the nine degeneration rules.  Revlex applies to all
/// labels; Lex requires the stratum to lie in {b_n = 0}.
std::vector<DegenComponent> predictedDegeneration(const StratumLabel& label,
                                                  DegenDirection direction, int n);

/// Realizes a predicted component inside the 2n-variable patch ring.
Ideal componentIdeal(const PatchRing& patch, const DegenComponent& component);

/// The n+1 generators of the colength-n ideal in k[x,y] at the given point
/// (a1,b1,...,an,bn).
Ideal specialize(const PatchRing& patch, const std::vector<std::int64_t>& point);

std::vector<std::int64_t> randomPoint(const PatchRing& patch, std::mt19937_64& rng);

}  // namespace hilbsplit

#endif
