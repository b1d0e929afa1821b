#include "hilbsplit/frobenius.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace hilbsplit {

namespace {

void requireFrobeniusChar(const RingContext& ring) {
  if (ring.characteristic() <= 2)
    throw Error("Frobenius operations require characteristic p > 2");
}

}  // namespace

Polynomial trace(const Polynomial& g) {
  requireFrobeniusChar(*g.ring());
  const std::int64_t p = g.ring()->characteristic();
  Polynomial out(g.ring());
  for (const auto& [m, c] : g.terms()) {
    Monomial root(m.size());
    bool isPower = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if ((m.exp[i] + 1) % p != 0) {
        isPower = false;
        break;
      }
      root.exp[i] = (m.exp[i] + 1) / static_cast<int>(p) - 1;
    }
    if (isPower) out.addTermInPlace(root, c);  // Frobenius fixes F_p coefficients
  }
  return out;
}

std::map<Monomial, Polynomial> pthRootDecompose(const Polynomial& h) {
  const std::int64_t p = h.ring()->characteristic();
  std::map<Monomial, Polynomial> components;
  for (const auto& [m, c] : h.terms()) {
    Monomial residue(m.size());
    Monomial quotient(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      residue.exp[i] = m.exp[i] % static_cast<int>(p);
      quotient.exp[i] = m.exp[i] / static_cast<int>(p);
    }
    auto [it, inserted] = components.emplace(residue, Polynomial(h.ring()));
    it->second.addTermInPlace(quotient, c);
  }
  return components;
}

bool isSplitting(const Polynomial& f) {
  requireFrobeniusChar(*f.ring());
  const int e = static_cast<int>(f.ring()->characteristic()) - 1;
  return trace(f.power(e)).isOne();
}

SplittingDatum::SplittingDatum(Polynomial f) : f_(std::move(f)) {
  requireFrobeniusChar(*f_.ring());
}

const Polynomial& SplittingDatum::powerPMinusOne() const {
  std::call_once(powerOnce_, [this] {
    fPowered_ = f_.power(static_cast<int>(f_.ring()->characteristic()) - 1);
  });
  return *fPowered_;
}

bool SplittingDatum::verifySplitting() const {
  std::call_once(splitOnce_, [this] { isSplit_ = trace(powerPMinusOne()).isOne(); });
  return isSplit_;
}

SplitCheckResult isCompatiblySplit(const Ideal& I, const SplittingDatum& datum) {
  return isCompatiblySplit(I, datum, I.ring()->defaultOrder());
}

SplitCheckResult isCompatiblySplit(const Ideal& I, const SplittingDatum& datum,
                                   const OrderSpec& membershipOrder) {
  if (!datum.verifySplitting()) throw Error("datum polynomial is not a splitting");
  const auto& basis = I.groebnerBasis(membershipOrder);
  const Polynomial& fp = datum.powerPMinusOne();
  for (const auto& g : I.generators()) {
    const Polynomial h = fp * g;
    for (const auto& [residue, component] : pthRootDecompose(h)) {
      const Polynomial nf = normalForm(component, basis, membershipOrder);
      if (!nf.isZero())
        return {false, SplitWitness{g, residue, nf}};
    }
  }
  return {true, std::nullopt};
}

namespace {

// Exponent vectors packed into 64 bits for the coefficient extraction walk.
struct PackedCodec {
  int bits;
  std::size_t nvars;

  static std::optional<PackedCodec> tryMake(std::size_t nvars, int maxExp) {
    int bits = 1;
    while ((1 << bits) <= maxExp) ++bits;
    if (bits * static_cast<int>(nvars) > 63) return std::nullopt;
    return PackedCodec{bits, nvars};
  }
  std::uint64_t pack(const Monomial& m) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      k = (k << bits) | static_cast<std::uint64_t>(m.exp[i]);
    return k;
  }
};

struct PruneData {
  const Monomial& target;
  std::vector<int> maxDeg;
};

// Iterative pruned powering: a partial-product monomial survives only if it
// fits under the target cap and the remaining factors can still close the
// per-variable deficit.
std::int64_t packedWalk(const std::vector<std::pair<Monomial, std::int64_t>>& terms, int e,
                        const PruneData& prune, const PackedCodec& codec, std::int64_t p) {
  const std::size_t nvars = codec.nvars;
  std::unordered_map<std::uint64_t, std::int64_t> current;
  current.emplace(codec.pack(Monomial(nvars)), 1);
  std::vector<int> scratch(nvars);
  const std::uint64_t mask = (std::uint64_t(1) << codec.bits) - 1;

  for (int step = 1; step <= e; ++step) {
    const int remaining = e - step;
    std::unordered_map<std::uint64_t, std::int64_t> next;
    next.reserve(current.size() * 2);
    for (const auto& [key, coeff] : current) {
      std::uint64_t k = key;
      for (std::size_t i = nvars; i-- > 0;) {
        scratch[i] = static_cast<int>(k & mask);
        k >>= codec.bits;
      }
      for (const auto& [mg, cg] : terms) {
        std::uint64_t packed = 0;
        bool keep = true;
        for (std::size_t i = 0; i < nvars; ++i) {
          const int v = scratch[i] + mg.exp[i];
          if (v > prune.target.exp[i] || prune.target.exp[i] - v > remaining * prune.maxDeg[i]) {
            keep = false;
            break;
          }
          packed = (packed << codec.bits) | static_cast<std::uint64_t>(v);
        }
        if (!keep) continue;
        auto [it, inserted] = next.emplace(packed, (coeff * cg) % p);
        if (!inserted) it->second = (it->second + coeff * cg) % p;
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = (it->second % p == 0) ? next.erase(it) : std::next(it);
    current = std::move(next);
    if (current.empty()) return 0;
  }
  auto it = current.find(codec.pack(prune.target));
  return it == current.end() ? 0 : ((it->second % p) + p) % p;
}

// Same walk with map keys, for rings too wide to pack.
std::int64_t mapWalk(const std::vector<std::pair<Monomial, std::int64_t>>& terms, int e,
                     const PruneData& prune, std::int64_t p) {
  const std::size_t nvars = prune.target.size();
  std::map<Monomial, std::int64_t> current{{Monomial(nvars), 1}};
  for (int step = 1; step <= e; ++step) {
    const int remaining = e - step;
    std::map<Monomial, std::int64_t> next;
    for (const auto& [m, coeff] : current)
      for (const auto& [mg, cg] : terms) {
        Monomial product(nvars);
        bool keep = true;
        for (std::size_t i = 0; i < nvars; ++i) {
          const int v = m.exp[i] + mg.exp[i];
          if (v > prune.target.exp[i] || prune.target.exp[i] - v > remaining * prune.maxDeg[i]) {
            keep = false;
            break;
          }
          product.exp[i] = v;
        }
        if (!keep) continue;
        auto [it, inserted] = next.emplace(std::move(product), (coeff * cg) % p);
        if (!inserted) it->second = (it->second + coeff * cg) % p;
      }
    for (auto it = next.begin(); it != next.end();)
      it = (it->second % p == 0) ? next.erase(it) : std::next(it);
    current = std::move(next);
    if (current.empty()) return 0;
  }
  auto it = current.find(prune.target);
  return it == current.end() ? 0 : ((it->second % p) + p) % p;
}

}  // namespace

std::int64_t coefficientInPower(const Polynomial& g, int e, const Monomial& target) {
  if (e < 0) throw Error("negative exponent");
  const RingPtr ring = g.ring();
  if (target.size() != ring->numVars()) throw RingMismatchError("target monomial length mismatch");
  if (e == 0) return target.isConstant() ? 1 : 0;
  if (g.isZero()) return 0;
  const std::int64_t p = ring->characteristic();
  const std::size_t nvars = ring->numVars();

  PruneData prune{target, std::vector<int>(nvars, 0)};
  std::vector<std::pair<Monomial, std::int64_t>> terms(g.terms().begin(), g.terms().end());
  for (const auto& [m, c] : terms)
    for (std::size_t i = 0; i < nvars; ++i) prune.maxDeg[i] = std::max(prune.maxDeg[i], m.exp[i]);
  for (std::size_t i = 0; i < nvars; ++i)
    if (target.exp[i] > e * prune.maxDeg[i]) return 0;

  int maxExp = 0;
  for (int t : target.exp) maxExp = std::max(maxExp, t);
  if (const auto codec = PackedCodec::tryMake(nvars, maxExp))
    return packedWalk(terms, e, prune, *codec, p);
  return mapWalk(terms, e, prune, p);
}

}  // namespace hilbsplit
