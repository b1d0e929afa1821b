#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hilbsplit/srcomplex.hpp"
#include "hilbsplit/words.hpp"
#include "test_util.hpp"

using namespace hilbsplit;

namespace {

std::vector<std::string> sixVertices() {
  return {"x1", "x2", "x3", "x4", "x5", "x6"};
}

std::set<std::string> names(std::initializer_list<const char*> xs) {
  std::set<std::string> out;
  for (const char* x : xs) out.insert(x);
  return out;
}

SimplicialComplex strataComplex(const PatchRing& patch, const StratumLabel& label) {
  std::vector<std::set<std::string>> facets;
  for (const auto& w : enumerateFullWords(label, patch.n())) facets.push_back(toFacet(w));
  return SimplicialComplex::fromFacetNames(patch.ring()->variables(), facets);
}

}  // namespace

TEST_CASE("facet decomposition of the six-generator example") {
  const RingPtr ring = RingContext::make(sixVertices(), 5);
  const Ideal I(ring, {Polynomial::parse(ring, "x6"), Polynomial::parse(ring, "x1*x4"),
                       Polynomial::parse(ring, "x1*x5"), Polynomial::parse(ring, "x2*x4"),
                       Polynomial::parse(ring, "x4*x5"), Polynomial::parse(ring, "x1*x2*x3")});
  const SimplicialComplex complex = facetsFromSquarefreeIdeal(I);
  std::set<std::set<std::string>> facets;
  for (const auto& f : complex.facetNames()) facets.insert(f);
  CHECK(facets == std::set<std::set<std::string>>{names({"x3", "x4"}), names({"x1", "x2"}),
                                                  names({"x1", "x3"}),
                                                  names({"x2", "x3", "x5"})});

  // and back: the Stanley-Reisner ideal has exactly the six generators
  const Ideal back = stanleyReisnerIdeal(complex, ring);
  CHECK(back.generators().size() == 6);
  CHECK(idealEquals(back, I));
}

TEST_CASE("squarefree decomposition rejects bad input") {
  const RingPtr ring = RingContext::xy(5);
  CHECK_THROWS_AS(facetsFromSquarefreeIdeal(Ideal(ring, {Polynomial::parse(ring, "x^2")})),
                  Error);
  CHECK_THROWS_AS(facetsFromSquarefreeIdeal(Ideal(ring, {Polynomial::parse(ring, "x + y")})),
                  Error);
}

TEST_CASE("decomposition of a patch initial ideal") {
  const RingPtr ring = testutil::patchLikeRing(2, 5);
  const Ideal I(ring, {Polynomial::parse(ring, "b2"), Polynomial::parse(ring, "b1*a2")});
  const SimplicialComplex complex = facetsFromSquarefreeIdeal(I);
  std::set<std::set<std::string>> facets;
  for (const auto& f : complex.facetNames()) facets.insert(f);
  CHECK(facets ==
        std::set<std::set<std::string>>{names({"a1", "a2"}), names({"a1", "b1"})});
}

TEST_CASE("zero ideal gives the full simplex; full simplex gives the zero ideal") {
  const RingPtr ring = testutil::patchLikeRing(2, 5);
  const SimplicialComplex simplex = facetsFromSquarefreeIdeal(Ideal(ring));
  REQUIRE(simplex.facets().size() == 1);
  CHECK(simplex.facetNames()[0].size() == 4);
  CHECK(stanleyReisnerIdeal(simplex, ring).isZeroIdeal());
}

TEST_CASE("the empty-face complex corresponds to the ideal of all vertices") {
  const RingPtr ring = RingContext::xy(5);
  const SimplicialComplex onlyEmpty = SimplicialComplex::emptyFaceOnly({"x", "y"});
  const Ideal I = stanleyReisnerIdeal(onlyEmpty, ring);
  CHECK(idealEquals(I, Ideal(ring, {Polynomial::variable(ring, "x"),
                                    Polynomial::variable(ring, "y")})));
  CHECK(facetsFromSquarefreeIdeal(I) == onlyEmpty);
}

TEST_CASE("SR maps are mutually inverse on random squarefree ideals") {
  std::mt19937_64 rng(606);
  std::vector<std::string> vars;
  for (int i = 1; i <= 8; ++i) vars.push_back("a" + std::to_string(i));
  const RingPtr ring = RingContext::make(vars, 5);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<Polynomial> gens;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      Monomial m(8);
      bool nonzero = false;
      for (auto& e : m.exp) {
        e = (rng() % 3 == 0) ? 1 : 0;
        nonzero |= (e == 1);
      }
      if (nonzero) gens.push_back(Polynomial::term(ring, m, 1));
    }
    if (gens.empty()) continue;
    const Ideal I(ring, gens);
    const SimplicialComplex complex = facetsFromSquarefreeIdeal(I);
    CHECK(idealEquals(stanleyReisnerIdeal(complex, ring), I));
    CHECK(facetsFromSquarefreeIdeal(stanleyReisnerIdeal(complex, ring)) == complex);
  }
}

TEST_CASE("del, link, star") {
  const SimplicialComplex edge = SimplicialComplex::simplex({"v", "w"});
  const SimplicialComplex delV = deletion(edge, "v");
  CHECK(delV.facetNames() == std::vector<std::set<std::string>>{names({"w"})});

  const SimplicialComplex point =
      SimplicialComplex::fromFacetNames({"v", "w"}, {names({"v"})});
  const SimplicialComplex lk = link(point, "v");
  REQUIRE(lk.facets().size() == 1);
  CHECK(lk.facets()[0] == FaceMask(0));  // the empty face

  CHECK_THROWS_AS(deletion(edge, "z"), Error);
}

TEST_CASE("glueing identity: faces of del and star cover the complex") {
  std::mt19937_64 rng(77);
  std::vector<std::string> universe{"p", "q", "r", "s", "u1"};
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<FaceMask> facets;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) facets.push_back(rng() % 32);
    const SimplicialComplex complex(universe, facets);
    if (complex.isVoid()) continue;
    const std::string v = universe[rng() % universe.size()];
    const SimplicialComplex delV = deletion(complex, v);
    const SimplicialComplex starV = star(complex, v);
    const SimplicialComplex linkV = link(complex, v);
    for (FaceMask face = 0; face < 32; ++face) {
      const bool inComplex = complex.isFace(face);
      CHECK(inComplex == (delV.isFace(face) || starV.isFace(face)));
      const bool both = delV.isFace(face) && starV.isFace(face);
      CHECK(both == linkV.isFace(face));
    }
  }
}

TEST_CASE("vertex decomposability base cases and counterexample") {
  CHECK(isVertexDecomposable(SimplicialComplex::simplex({"a", "b", "c"})).decomposable);
  CHECK(isVertexDecomposable(SimplicialComplex::voidComplex({"a"})).decomposable);
  CHECK(isVertexDecomposable(SimplicialComplex::emptyFaceOnly({"a"})).decomposable);

  // two facets sharing no ridge
  const SimplicialComplex disjoint = SimplicialComplex::fromFacetNames(
      {"v1", "v2", "v3", "v4"}, {names({"v1", "v2"}), names({"v3", "v4"})});
  const VdResult res = isVertexDecomposable(disjoint);
  CHECK_FALSE(res.decomposable);
  CHECK_FALSE(res.reason.empty());

  const SimplicialComplex impure = SimplicialComplex::fromFacetNames(
      {"v1", "v2", "v3"}, {names({"v1", "v2"}), names({"v3"})});
  CHECK_FALSE(isVertexDecomposable(impure).decomposable);
}

TEST_CASE("paths and cycles") {
  const SimplicialComplex path = SimplicialComplex::fromFacetNames(
      {"v1", "v2", "v3"}, {names({"v1", "v2"}), names({"v2", "v3"})});
  const VdResult res = isVertexDecomposable(path);
  CHECK(res.decomposable);
  CHECK(linkInBoundaryAlongWitness(res));

  const SimplicialComplex triangle = SimplicialComplex::fromFacetNames(
      {"v1", "v2", "v3"},
      {names({"v1", "v2"}), names({"v2", "v3"}), names({"v1", "v3"})});
  const VdResult circle = isVertexDecomposable(triangle);
  CHECK(circle.decomposable);  // the 1-sphere is vertex-decomposable
  CHECK(boundary(triangle).isVoid());
}

TEST_CASE("the pinched complex of (2,0,1,+0) has no ball witness") {
  const PatchRing patch(3, 5);
  const SimplicialComplex delta = strataComplex(patch, StratumLabel{2, 0, 1, StratumFlag::Plus0});
  const VdResult res = isVertexDecomposable(delta);
  CHECK(res.decomposable);
  CHECK_FALSE(linkInBoundaryAlongWitness(res));
}

TEST_CASE("boundary") {
  CHECK(boundary(SimplicialComplex::simplex({"v1", "v2"})).facetNames() ==
        std::vector<std::set<std::string>>{names({"v1"}), names({"v2"})});

  const SimplicialComplex twoPoints = SimplicialComplex::fromFacetNames(
      {"v1", "v2"}, {names({"v1"}), names({"v2"})});
  CHECK(boundary(twoPoints).isVoid());

  const SimplicialComplex triangle = SimplicialComplex::fromFacetNames(
      {"v1", "v2", "v3"},
      {names({"v1", "v2"}), names({"v2", "v3"}), names({"v1", "v3"})});
  CHECK(boundary(triangle).isVoid());

  const RingPtr patch = testutil::patchLikeRing(2, 5);
  const SimplicialComplex delta = SimplicialComplex::fromFacetNames(
      patch->variables(), {names({"a1", "a2"}), names({"a1", "b1"})});
  std::set<std::set<std::string>> facets;
  for (const auto& f : boundary(delta).facetNames()) facets.insert(f);
  CHECK(facets == std::set<std::set<std::string>>{names({"a2"}), names({"b1"})});

  const SimplicialComplex impure = SimplicialComplex::fromFacetNames(
      {"v1", "v2", "v3"}, {names({"v1", "v2"}), names({"v3"})});
  CHECK_THROWS_AS(boundary(impure), Error);
}

TEST_CASE("cones preserve vertex decomposability") {
  std::mt19937_64 rng(9090);
  std::vector<std::string> universe{"w1", "w2", "w3", "w4"};
  int tested = 0;
  for (int rep = 0; rep < 300 && tested < 40; ++rep) {
    std::vector<FaceMask> facets;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) facets.push_back(rng() % 16);
    const SimplicialComplex complex(universe, facets);
    if (!isVertexDecomposable(complex).decomposable) continue;
    ++tested;
    CHECK(isVertexDecomposable(cone(complex, "apex")).decomposable);
  }
  CHECK(tested == 40);
}

TEST_CASE("ball families from the degenerate strata (n <= 4)") {
  for (int n = 2; n <= 4; ++n) {
    const PatchRing patch(n, 5);
    std::vector<StratumLabel> family;
    for (int u = 1; u <= n; ++u) family.push_back({0, u, n - u, StratumFlag::Plus0});
    for (int u = 2; u <= n; ++u) family.push_back({0, u, n - u, StratumFlag::Plus1});
    for (int u = 0; u + 1 <= n; ++u)
      if (StratumLabel{1, u, n - u - 1, StratumFlag::Plus0}.isValid(n))
        family.push_back({1, u, n - u - 1, StratumFlag::Plus0});
    for (int u = 2; u + 1 <= n; ++u) family.push_back({1, u, n - u - 1, StratumFlag::Plus1});
    if (n >= 2) family.push_back({1, 0, n - 2, StratumFlag::Plus1});

    for (const auto& label : family) {
      REQUIRE(label.isValid(n));
      const SimplicialComplex complex = strataComplex(patch, label);
      const VdResult res = isVertexDecomposable(complex);
      const std::string name = label.str();
      CAPTURE(name);
      CHECK(res.decomposable);
      CHECK(linkInBoundaryAlongWitness(res));
    }
  }
}

TEST_CASE("simplex families really are simplices") {
  for (int n = 2; n <= 5; ++n) {
    const PatchRing patch(n, 5);
    std::vector<StratumLabel> family;
    for (int u = 0; u <= n; ++u) family.push_back({n - u, u, 0, StratumFlag::Plus0});
    for (int u = 2; u <= n; ++u) family.push_back({n - u, u, 0, StratumFlag::Plus1});
    family.push_back({n - 1, 0, 0, StratumFlag::Plus1});
    family.push_back({0, 0, n, StratumFlag::Plus0});
    family.push_back({0, 0, n - 1, StratumFlag::Plus1});
    for (const auto& label : family) {
      REQUIRE(label.isValid(n));
      CHECK(strataComplex(patch, label).facets().size() == 1);
    }
  }
}

TEST_CASE("del and link of the shedding vertex match the smaller strata") {
  // del(a_n) = Delta_{(0,u-1,n-u,+0)}, link(a_n) = Delta_{(0,u,n-u-1,+1)},
  // facets compared after dropping the unused a_n/b_n coordinates.
  for (int n : {3, 4}) {
    const PatchRing patch(n, 5);
    const PatchRing small(n - 1, 5);
    for (int u = 2; u < n; ++u) {
      const StratumLabel label{0, u, n - u, StratumFlag::Plus0};
      const SimplicialComplex delta = strataComplex(patch, label);
      const std::string an = "a" + std::to_string(n);

      std::set<std::set<std::string>> delFacets;
      for (const auto& f : deletion(delta, an).facetNames()) delFacets.insert(f);
      std::set<std::set<std::string>> expectedDel;
      for (const auto& w : enumerateFullWords({0, u - 1, n - u, StratumFlag::Plus0}, n - 1))
        expectedDel.insert(toFacet(w));
      CHECK(delFacets == expectedDel);

      std::set<std::set<std::string>> linkFacets;
      for (const auto& f : link(delta, an).facetNames()) linkFacets.insert(f);
      std::set<std::set<std::string>> expectedLink;
      for (const auto& w : enumerateFullWords({0, u, n - u - 1, StratumFlag::Plus1}, n - 1))
        expectedLink.insert(toFacet(w));
      CHECK(linkFacets == expectedLink);
    }
  }
}
