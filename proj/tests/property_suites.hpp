#ifndef HILBSPLIT_PROPERTY_SUITES_HPP
#define HILBSPLIT_PROPERTY_SUITES_HPP

#include <random>
#include <string>
#include <vector>

#include "hilbsplit/frobenius.hpp"
#include "hilbsplit/groebner.hpp"
#include "test_util.hpp"

// Randomized suites shared between the unit tests and the acceptance gate.
// Each returns the number of failing cases out of `cases`.

namespace hilbsplit::propsuite {

inline RingPtr randomRing(std::mt19937_64& rng, bool frobeniusFriendly = false) {
  static const std::vector<std::int64_t> primes{2, 3, 5, 7, 101};
  static const std::vector<std::int64_t> oddPrimes{3, 5, 7};
  const auto& pool = frobeniusFriendly ? oddPrimes : primes;
  const std::int64_t p = pool[rng() % pool.size()];
  const int nvars = 1 + static_cast<int>(rng() % 3);
  std::vector<std::string> names;
  const std::vector<std::string> candidates{"x", "y", "a1", "b1", "a2"};
  for (int i = 0; i < nvars; ++i) names.push_back(candidates[static_cast<std::size_t>(i)]);
  return RingContext::make(names, p);
}

inline OrderSpec randomTotalOrder(const RingPtr& ring, std::mt19937_64& rng) {
  std::vector<int> vars(ring->numVars());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = static_cast<int>(i);
  std::shuffle(vars.begin(), vars.end(), rng);
  std::vector<OrderDirective> dirs;
  for (int v : vars)
    dirs.push_back({v, (rng() & 1) ? Direction::MaxFirst : Direction::MinFirst});
  return OrderSpec(dirs);
}

inline int orderAxioms(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int rep = 0; rep < cases; ++rep) {
    const RingPtr ring = randomRing(rng);
    const OrderSpec order = randomTotalOrder(ring, rng);
    const Monomial a = testutil::randomMonomial(ring, rng);
    const Monomial b = testutil::randomMonomial(ring, rng);
    const Monomial c = testutil::randomMonomial(ring, rng);

    bool ok = true;
    // totality and antisymmetry
    ok &= (compare(a, b, order) == std::strong_ordering::equal) == (a == b);
    if (compare(a, b, order) == std::strong_ordering::greater)
      ok &= compare(b, a, order) == std::strong_ordering::less;
    // transitivity
    if (compare(a, b, order) != std::strong_ordering::less &&
        compare(b, c, order) != std::strong_ordering::less)
      ok &= compare(a, c, order) != std::strong_ordering::less;
    // translation invariance
    ok &= compare(a.times(c), b.times(c), order) == compare(a, b, order);
    if (!ok) ++failures;
  }
  return failures;
}

inline int ringLaws(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int rep = 0; rep < cases; ++rep) {
    const RingPtr ring = randomRing(rng);
    const Polynomial f = testutil::randomPolynomial(ring, rng);
    const Polynomial g = testutil::randomPolynomial(ring, rng);
    const Polynomial h = testutil::randomPolynomial(ring, rng);
    bool ok = true;
    ok &= (f + g) + h == f + (g + h);
    ok &= f + g == g + f;
    ok &= (f * g) * h == f * (g * h);
    ok &= f * g == g * f;
    ok &= f * (g + h) == f * g + f * h;
    ok &= f + (-f) == Polynomial::zero(ring);
    if (!ok) ++failures;
  }
  return failures;
}

inline int powerVersusFold(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int rep = 0; rep < cases; ++rep) {
    const RingPtr ring = randomRing(rng);
    const Polynomial f = testutil::randomPolynomial(ring, rng, 3, 2);
    const int e = static_cast<int>(rng() % 7);
    Polynomial folded = Polynomial::one(ring);
    for (int i = 0; i < e; ++i) folded = folded * f;
    if (!(f.power(e) == folded)) ++failures;
  }
  return failures;
}

inline int traceSemilinearity(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int rep = 0; rep < cases; ++rep) {
    const RingPtr ring = randomRing(rng, /*frobeniusFriendly=*/true);
    const int p = static_cast<int>(ring->characteristic());
    const Polynomial a = testutil::randomPolynomial(ring, rng, 2, 2);
    const Polynomial b = testutil::randomPolynomial(ring, rng, 3, 2 * p);
    const Polynomial c = testutil::randomPolynomial(ring, rng, 3, 2 * p);
    bool ok = trace(a.power(p) * b) == a * trace(b);
    ok &= trace(b + c) == trace(b) + trace(c);
    if (!ok) ++failures;
  }
  return failures;
}

inline int parseFormatRoundTrip(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int rep = 0; rep < cases; ++rep) {
    const RingPtr ring = (rep % 3 == 0) ? testutil::patchLikeRing(2 + rep % 2, 5)
                                        : randomRing(rng);
    const Polynomial f = testutil::randomPolynomial(ring, rng, 6, 5);
    if (!(Polynomial::parse(ring, f.format()) == f)) ++failures;
  }
  return failures;
}

inline int groebnerIdempotence(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int rep = 0; rep < cases; ++rep) {
    const RingPtr ring = randomRing(rng);
    std::vector<OrderDirective> dirs;  // classical orders keep the runs small
    for (std::size_t i = 0; i < ring->numVars(); ++i)
      dirs.push_back({static_cast<int>(i), Direction::MaxFirst});
    const OrderSpec order{dirs};
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) {
      const Polynomial f = testutil::randomPolynomial(ring, rng, 3, 2);
      if (!f.isZero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    const auto basis = buchberger(gens, order);
    const auto again = buchberger(basis, order);
    if (basis.size() != again.size()) {
      ++failures;
      continue;
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!(basis[i] == again[i])) {
        ++failures;
        break;
      }
  }
  return failures;
}

}  // namespace hilbsplit::propsuite

#endif
