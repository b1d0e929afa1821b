#ifndef HILBSPLIT_TEST_UTIL_HPP
#define HILBSPLIT_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "hilbsplit/hilbpatch.hpp"

namespace hilbsplit::testutil {

inline RingPtr patchLikeRing(int n, std::int64_t p) {
  return PatchRing(n, p).ring();
}

/// The ten-variable ring a1..a5, b1..b5 carrying the initial forms behind the
/// punctual-evidence coefficient computation.
inline RingPtr abRing5(std::int64_t p) {
  std::vector<std::string> vars;
  for (int i = 1; i <= 5; ++i) vars.push_back("a" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) vars.push_back("b" + std::to_string(i));
  return RingContext::make(std::move(vars), p);
}

inline Polynomial evidenceInitF1(const RingPtr& ring) {
  return Polynomial::parse(ring,
                           "-a4*b3*b4^2 + a4*b2*b4*b5 + a3*b4*b5 + b1*b5^2 - b3*b5^2");
}

inline Polynomial evidenceInitF2(const RingPtr& ring) {
  return Polynomial::parse(ring, "a1^2*a3 + a1*a2*b1 + a2^2*b2 - 2*a1*a2*b3") *
         Polynomial::parse(ring, "a4") *
         Polynomial::parse(ring, "a3*b2 + b1*b3 - b3^2");
}

inline Monomial conjectureTarget(const RingPtr& ring, std::int64_t p) {
  Monomial target(ring->numVars());
  const int e = static_cast<int>(p) - 1;
  for (const char* name : {"a1", "a2", "a3"})
    target.exp[static_cast<std::size_t>(ring->indexOf(name))] = e;
  target.exp[static_cast<std::size_t>(ring->indexOf("a4"))] = 3 * e / 2;
  for (int i = 1; i <= 5; ++i)
    target.exp[static_cast<std::size_t>(ring->indexOf("b" + std::to_string(i)))] = e;
  return target;
}

inline Monomial randomMonomial(const RingPtr& ring, std::mt19937_64& rng, int maxExp = 3) {
  std::uniform_int_distribution<int> dist(0, maxExp);
  Monomial m(ring->numVars());
  for (auto& e : m.exp) e = dist(rng);
  return m;
}

inline Polynomial randomPolynomial(const RingPtr& ring, std::mt19937_64& rng, int maxTerms = 4,
                                   int maxExp = 3) {
  std::uniform_int_distribution<int> termDist(0, maxTerms);
  std::uniform_int_distribution<std::int64_t> coefDist(1, ring->characteristic() - 1);
  Polynomial f(ring);
  const int terms = termDist(rng);
  for (int i = 0; i < terms; ++i) f.addTermInPlace(randomMonomial(ring, rng, maxExp), coefDist(rng));
  return f;
}

}  // namespace hilbsplit::testutil

#endif
