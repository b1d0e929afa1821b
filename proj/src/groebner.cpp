#include "hilbsplit/groebner.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace hilbsplit {

namespace {

constexpr std::uint64_t kBoundSaturation = std::uint64_t(1) << 40;

// Counts monomials of a given T^2-weight in a patch-shaped graded ring; used
// only as a reduction-chain cap under non-well-founded orders.  Variables
// graded (0,0) (the elimination t) are handled by the caller via a t-degree
// factor.
class GradedPieceCounter {
 public:
  explicit GradedPieceCounter(const RingContext& ring) {
    for (std::size_t i = 0; i < ring.numVars(); ++i) {
      const Weight w = ring.grading()[i];
      if (w.first == -1)
        aSecond_.push_back(w.second);
      else if (w.first == 0 && w.second < 0)
        bParts_.push_back(-w.second);
    }
  }

  std::uint64_t count(Weight w, int tDegMax) {
    auto it = memo_.find(w);
    std::uint64_t base;
    if (it != memo_.end()) {
      base = it->second;
    } else {
      base = countPatch(w);
      memo_.emplace(w, base);
    }
    const std::uint64_t factor = static_cast<std::uint64_t>(tDegMax) + 1;
    if (base > kBoundSaturation / factor) return kBoundSaturation;
    return base * factor;
  }

 private:
  std::uint64_t countPatch(Weight w) {
    const int aDeg = -w.first;
    if (aDeg < 0) return 0;
    std::uint64_t total = 0;
    std::vector<int> exps(aSecond_.size(), 0);
    enumerateA(0, aDeg, 0, w.second, exps, total);
    return std::min(total, kBoundSaturation);
  }

  void enumerateA(std::size_t idx, int remaining, long long secondAcc, int targetSecond,
                  std::vector<int>& exps, std::uint64_t& total) {
    if (total >= kBoundSaturation) return;
    if (idx == aSecond_.size()) {
      if (remaining != 0) return;
      const long long need = secondAcc - targetSecond;  // sum over b of i*e_i
      if (need < 0) return;
      total += bSolutions(static_cast<std::size_t>(need));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[idx] = e;
      enumerateA(idx + 1, remaining - e, secondAcc + static_cast<long long>(e) * aSecond_[idx],
                 targetSecond, exps, total);
    }
    exps[idx] = 0;
  }

  // coin-style count of ways to write target as a sum of the parts bParts_
  std::uint64_t bSolutions(std::size_t target) {
    if (bCountTable_.size() <= target) {
      std::vector<std::uint64_t> dp(target + 1, 0);
      dp[0] = 1;
      for (int part : bParts_)
        for (std::size_t v = static_cast<std::size_t>(part); v <= target; ++v)
          dp[v] = std::min(dp[v] + dp[v - static_cast<std::size_t>(part)], kBoundSaturation);
      bCountTable_ = std::move(dp);
    }
    return bCountTable_[target];
  }

  std::vector<int> aSecond_;
  std::vector<int> bParts_;
  std::map<Weight, std::uint64_t> memo_;
  std::vector<std::uint64_t> bCountTable_;
};

struct ReductionGuard {
  bool active = false;
  std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t steps = 0;

  void step() {
    if (active && ++steps > cap)
      throw TerminationError("reduction chain exceeded the graded piece bound");
  }
};

int maxVarDegree(const Polynomial& f, int var) {
  int d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, m.exp[static_cast<std::size_t>(var)]);
  return d;
}

ReductionGuard makeGuard(const Polynomial& f, const OrderSpec& order, const RingContext& ring) {
  ReductionGuard guard;
  if (!order.hasMinFirst() || f.isZero()) return guard;
  guard.active = true;
  if (ring.hasPositiveWeights()) {
    GradedPieceCounter counter(ring);
    const auto w = f.t2WeightIfHomogeneous();
    int tDeg = 0;
    const int tIdx = ring.indexOf("t");
    if (tIdx >= 0) tDeg = maxVarDegree(f, tIdx);
    guard.cap = w ? 2 * counter.count(*w, tDeg) + 16 : 0;
  } else {
    guard.cap = 1 << 22;  // non-patch gradings: generous fixed cap
  }
  return guard;
}

void checkWellFoundedOrHomogeneous(const std::vector<const Polynomial*>& polys,
                                   const OrderSpec& order, const RingContext& ring) {
  if (!order.hasMinFirst()) return;
  if (!ring.hasGrading())
    throw Error("non-well-founded order requires a T^2-graded ring");
  for (const auto* f : polys)
    if (!f->isT2Homogeneous())
      throw Error("non-homogeneous input under a non-well-founded order");
}

Polynomial normalFormImpl(const Polynomial& f, const std::vector<Polynomial>& basis,
                          const OrderSpec& order, ReductionGuard& guard) {
  Polynomial p = f;
  Polynomial remainder(f.ring());
  const std::int64_t ch = f.ring()->characteristic();
  while (!p.isZero()) {
    guard.step();
    const Monomial& lm = p.leadingMonomial(order);
    const std::int64_t lc = p.terms().at(lm);
    bool reduced = false;
    for (const auto& g : basis) {
      const Monomial& glm = g.leadingMonomial(order);
      if (!glm.divides(lm)) continue;
      const std::int64_t factor = (lc * modInverse(g.terms().at(glm), ch)) % ch;
      p = p - g.timesTerm(lm.quotientBy(glm), factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.addTermInPlace(lm, lc);
      p.addTermInPlace(lm, -lc);
    }
  }
  return remainder;
}

std::int64_t pairKey(const Monomial& lcm, const RingContext& ring, bool usePositive) {
  return usePositive ? positiveDegree(lcm, ring) : lcm.degree();
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.isZero()) throw Error("ideal generators must be nonzero");
    if (g.ring() != ring_ && g.ring()->variables() != ring_->variables())
      throw RingMismatchError("generator not in the ideal's ring");
    gens_.push_back(std::move(g));
  }
}

Ideal::Ideal(const Ideal& other) : ring_(other.ring_), gens_(other.gens_) {
  std::lock_guard<std::mutex> lock(other.cacheMutex_);
  gbCache_ = other.gbCache_;
}

Ideal::Ideal(Ideal&& other) noexcept
    : ring_(std::move(other.ring_)), gens_(std::move(other.gens_)) {
  std::lock_guard<std::mutex> lock(other.cacheMutex_);
  gbCache_ = std::move(other.gbCache_);
}

Ideal& Ideal::operator=(const Ideal& other) {
  if (this == &other) return *this;
  Ideal copy(other);
  return *this = std::move(copy);
}

Ideal& Ideal::operator=(Ideal&& other) noexcept {
  if (this == &other) return *this;
  ring_ = std::move(other.ring_);
  gens_ = std::move(other.gens_);
  std::scoped_lock lock(cacheMutex_, other.cacheMutex_);
  gbCache_ = std::move(other.gbCache_);
  return *this;
}

const std::vector<Polynomial>& Ideal::groebnerBasis(const OrderSpec& order) const {
  const std::string key = order.key(*ring_);
  {
    std::lock_guard<std::mutex> lock(cacheMutex_);
    auto it = gbCache_.find(key);
    if (it != gbCache_.end()) return it->second;
  }
  auto basis = buchberger(gens_, order);
  std::lock_guard<std::mutex> lock(cacheMutex_);
  return gbCache_.emplace(key, std::move(basis)).first->second;
}

const std::vector<Polynomial>& Ideal::groebnerBasis() const {
  return groebnerBasis(ring_->defaultOrder());
}

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(gens));
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const OrderSpec& order) {
  if (f.isZero() || g.isZero()) throw Error("S-polynomial of the zero polynomial");
  if (!order.coversAllVariables(*f.ring())) throw Error("S-polynomial requires a total order");
  const Monomial& lf = f.leadingMonomial(order);
  const Monomial& lg = g.leadingMonomial(order);
  const Monomial gcd = Monomial::gcd(lf, lg);
  const Monomial mf = lf.quotientBy(gcd);  // m_{i,j}
  const Monomial mg = lg.quotientBy(gcd);  // m_{j,i}
  const Polynomial fm = f.monic(order);
  const Polynomial gm = g.monic(order);
  return fm.timesTerm(mg, 1) - gm.timesTerm(mf, 1);
}

Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis,
                      const OrderSpec& order) {
  if (!order.coversAllVariables(*f.ring())) throw Error("normal form requires a total order");
  std::vector<const Polynomial*> all{&f};
  for (const auto& b : basis) {
    if (b.isZero()) throw Error("zero polynomial in basis");
    all.push_back(&b);
  }
  checkWellFoundedOrHomogeneous(all, order, *f.ring());
  ReductionGuard guard = makeGuard(f, order, *f.ring());
  return normalFormImpl(f, basis, order, guard);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const OrderSpec& order) {
  if (gens.empty()) return {};
  const RingPtr ring = gens.front().ring();
  if (!order.coversAllVariables(*ring)) throw Error("buchberger requires a total order");
  std::vector<const Polynomial*> ptrs;
  for (const auto& g : gens) ptrs.push_back(&g);
  checkWellFoundedOrHomogeneous(ptrs, order, *ring);

  const bool usePositive = order.hasMinFirst() && ring->hasPositiveWeights();

  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (g.isZero()) throw Error("ideal generators must be nonzero");
    basis.push_back(g.monic(order));
  }

  using QueueEntry = std::tuple<std::int64_t, std::size_t, std::size_t>;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> pairs;
  auto pushPairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial lcm =
          Monomial::lcm(basis[i].leadingMonomial(order), basis[j].leadingMonomial(order));
      pairs.emplace(pairKey(lcm, *ring, usePositive), i, j);
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) pushPairs(j);

  while (!pairs.empty()) {
    const auto [key, i, j] = pairs.top();
    pairs.pop();
    const Monomial& li = basis[i].leadingMonomial(order);
    const Monomial& lj = basis[j].leadingMonomial(order);
    if (li.coprimeWith(lj)) continue;  // Buchberger's first criterion
    Polynomial s = sPolynomial(basis[i], basis[j], order);
    if (s.isZero()) continue;
    ReductionGuard guard = makeGuard(s, order, *ring);
    Polynomial r = normalFormImpl(s, basis, order, guard);
    if (r.isZero()) continue;
    basis.push_back(r.monic(order));
    pushPairs(basis.size() - 1);
  }

  // Minimalize: drop generators whose lead is divisible by another lead.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lm = basis[i].leadingMonomial(order);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& other = basis[j].leadingMonomial(order);
      if (other.divides(lm) && (other != lm || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce tails against the other elements.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      const Monomial lm = minimal[i].leadingMonomial(order);
      Polynomial tail = minimal[i];
      tail.addTermInPlace(lm, -1);
      ReductionGuard guard = makeGuard(minimal[i], order, *ring);
      Polynomial reduced = others.empty() ? tail : normalFormImpl(tail, others, order, guard);
      Polynomial replacement = reduced;
      replacement.addTermInPlace(lm, 1);
      if (!(replacement == minimal[i])) {
        minimal[i] = replacement;
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.leadingMonomial(order), b.leadingMonomial(order), order) ==
           std::strong_ordering::less;
  });
  return minimal;
}

Ideal initialIdeal(const Ideal& I, const OrderSpec& fullOrder, std::size_t prefixLength) {
  const OrderSpec pre = fullOrder.prefix(prefixLength);
  std::vector<Polynomial> gens;
  for (const auto& g : I.groebnerBasis(fullOrder)) gens.push_back(g.initialForm(pre));
  return Ideal(I.ring(), std::move(gens));
}

bool contains(const Ideal& I, const Polynomial& f, const OrderSpec& order) {
  if (f.isZero()) return true;
  if (I.isZeroIdeal()) return false;
  return normalForm(f, I.groebnerBasis(order), order).isZero();
}

bool contains(const Ideal& I, const Polynomial& f) {
  return contains(I, f, I.ring()->defaultOrder());
}

bool idealEquals(const Ideal& I, const Ideal& J, const OrderSpec& order) {
  for (const auto& g : J.generators())
    if (!contains(I, g, order)) return false;
  for (const auto& g : I.generators())
    if (!contains(J, g, order)) return false;
  return true;
}

bool idealEquals(const Ideal& I, const Ideal& J) {
  return idealEquals(I, J, I.ring()->defaultOrder());
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  const RingPtr ring = I.ring();
  if (J.ring()->variables() != ring->variables())
    throw RingMismatchError("intersect requires a common ring");
  if (ring->hasEliminationVar()) throw Error("elimination variable t already in use");
  if (I.isZeroIdeal() || J.isZeroIdeal()) return Ideal(ring);

  const RingPtr ext = ring->withEliminationVar();
  const Polynomial t = Polynomial::variable(ext, "t");
  const Polynomial oneMinusT = Polynomial::one(ext) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * g.mapToRing(ext));
  for (const auto& g : J.generators()) gens.push_back(oneMinusT * g.mapToRing(ext));

  const auto basis = buchberger(gens, ext->defaultOrder());
  const int tIdx = ext->indexOf("t");
  std::vector<Polynomial> out;
  for (const auto& g : basis) {
    bool hasT = false;
    for (const auto& [m, c] : g.terms())
      if (m.exp[static_cast<std::size_t>(tIdx)] > 0) {
        hasT = true;
        break;
      }
    if (!hasT) out.push_back(g.mapToRing(ring));
  }
  return Ideal(ring, std::move(out));
}

bool isSquarefreeMonomialIdeal(const Ideal& I, const OrderSpec& order) {
  if (I.isZeroIdeal()) return true;
  for (const auto& g : I.groebnerBasis(order)) {
    if (g.termCount() != 1) return false;
    for (int e : g.terms().begin()->first.exp)
      if (e > 1) return false;
  }
  return true;
}

}  // namespace hilbsplit
