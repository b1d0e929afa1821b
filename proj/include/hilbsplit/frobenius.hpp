#ifndef HILBSPLIT_FROBENIUS_HPP
#define HILBSPLIT_FROBENIUS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "hilbsplit/groebner.hpp"

namespace hilbsplit {

/// Tr: additive map sending a monomial m to (x_1...x_d m)^{1/p} / (x_1...x_d)
/// when that product is a p-th power, else 0.  Requires p > 2.
Polynomial trace(const Polynomial& g);

/// Writes h = sum_r (h_r)^p x^r over residues r in [0,p-1]^d; only nonzero
/// components are returned.
std::map<Monomial, Polynomial> pthRootDecompose(const Polynomial& h);

/// True iff Tr(f^{p-1}) = 1, i.e. Tr(f^{p-1} . ) splits the ring.
bool isSplitting(const Polynomial& f);

/// A splitting polynomial f with its cached (p-1)-st power.
class SplittingDatum {
 public:
  explicit SplittingDatum(Polynomial f);

  const Polynomial& splittingPoly() const { return f_; }
  const Polynomial& powerPMinusOne() const;
  bool verifySplitting() const;

 private:
  Polynomial f_;
  mutable std::once_flag powerOnce_;
  mutable std::optional<Polynomial> fPowered_;
  mutable std::once_flag splitOnce_;
  mutable bool isSplit_ = false;
};

struct SplitWitness {
  Polynomial generator;    // offending generator of I
  Monomial residue;        // residue class r of the failing component
  Polynomial normalFormValue;  // nonzero normal form against I's basis
};

struct SplitCheckResult {
  bool compatiblySplit;
  std::optional<SplitWitness> witness;
};

/// Fedder-style test: phi(I) subset I iff every residue component of
/// f^{p-1} g lies in I, for every generator g.
SplitCheckResult isCompatiblySplit(const Ideal& I, const SplittingDatum& datum);
SplitCheckResult isCompatiblySplit(const Ideal& I, const SplittingDatum& datum,
                                   const OrderSpec& membershipOrder);

/// Coefficient of target in g^e via pruned powering (cap = target exponents,
/// plus a remaining-capacity prune).
std::int64_t coefficientInPower(const Polynomial& g, int e, const Monomial& target);

}  // namespace hilbsplit

#endif
