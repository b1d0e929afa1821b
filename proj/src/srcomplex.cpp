#include "hilbsplit/srcomplex.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hilbsplit {

namespace {

int popcount(FaceMask m) { return __builtin_popcountll(m); }

std::vector<FaceMask> antichainMaxima(std::vector<FaceMask> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<FaceMask> out;
  for (FaceMask f : faces) {
    bool dominated = false;
    for (FaceMask g : faces)
      if (f != g && (f & g) == f) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> universe,
                                     std::vector<FaceMask> facets)
    : universe_(std::move(universe)) {
  if (universe_.size() > 63) throw Error("vertex universe too large");
  const FaceMask all = universe_.empty() ? 0 : ((FaceMask(1) << universe_.size()) - 1);
  for (FaceMask f : facets)
    if ((f & ~all) != 0) throw Error("facet contains vertices outside the universe");
  facets_ = antichainMaxima(std::move(facets));
}

SimplicialComplex SimplicialComplex::fromFacetNames(
    std::vector<std::string> universe, const std::vector<std::set<std::string>>& facets) {
  SimplicialComplex tmp(universe, {});
  std::vector<FaceMask> masks;
  for (const auto& facet : facets) {
    FaceMask m = 0;
    for (const auto& name : facet) {
      const int idx = tmp.vertexIndex(name);
      if (idx < 0) throw Error("unknown vertex " + name);
      m |= FaceMask(1) << idx;
    }
    masks.push_back(m);
  }
  return SimplicialComplex(std::move(universe), std::move(masks));
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> universe) {
  const FaceMask all = universe.empty() ? 0 : ((FaceMask(1) << universe.size()) - 1);
  return SimplicialComplex(std::move(universe), {all});
}

SimplicialComplex SimplicialComplex::voidComplex(std::vector<std::string> universe) {
  return SimplicialComplex(std::move(universe), {});
}

SimplicialComplex SimplicialComplex::emptyFaceOnly(std::vector<std::string> universe) {
  return SimplicialComplex(std::move(universe), {FaceMask(0)});
}

std::vector<std::set<std::string>> SimplicialComplex::facetNames() const {
  std::vector<std::set<std::string>> out;
  for (FaceMask f : facets_) out.push_back(faceNames(f));
  return out;
}

std::set<std::string> SimplicialComplex::faceNames(FaceMask m) const {
  std::set<std::string> out;
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (m & (FaceMask(1) << i)) out.insert(universe_[i]);
  return out;
}

bool SimplicialComplex::isFace(FaceMask f) const {
  for (FaceMask g : facets_)
    if ((f & g) == f) return true;
  return false;
}

int SimplicialComplex::dimension() const {
  if (isVoid()) return -2;
  int d = -1;
  for (FaceMask f : facets_) d = std::max(d, popcount(f) - 1);
  return d;
}

bool SimplicialComplex::isPure() const {
  if (facets_.size() <= 1) return true;
  const int d = popcount(facets_.front());
  for (FaceMask f : facets_)
    if (popcount(f) != d) return false;
  return true;
}

int SimplicialComplex::vertexIndex(const std::string& name) const {
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (universe_[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

// Minimal transversals of the generator hypergraph = minimal primes.
void minimalHittingSets(const std::vector<FaceMask>& gens, FaceMask chosen,
                        std::vector<FaceMask>& out) {
  const FaceMask* uncovered = nullptr;
  for (const FaceMask& g : gens)
    if ((g & chosen) == 0) {
      uncovered = &g;
      break;
    }
  if (!uncovered) {
    out.push_back(chosen);
    return;
  }
  FaceMask rest = *uncovered;
  while (rest) {
    const FaceMask v = rest & (~rest + 1);
    rest ^= v;
    minimalHittingSets(gens, chosen | v, out);
  }
}

}  // namespace

SimplicialComplex facetsFromSquarefreeIdeal(const Ideal& I) {
  const RingPtr& ring = I.ring();
  std::vector<std::string> universe = ring->variables();
  const FaceMask all = universe.empty() ? 0 : ((FaceMask(1) << universe.size()) - 1);

  std::vector<FaceMask> gens;
  for (const auto& g : I.generators()) {
    if (g.termCount() != 1) throw Error("ideal generator is not a monomial");
    const auto& [m, c] = *g.terms().begin();
    FaceMask mask = 0;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i] > 1) throw Error("ideal generator is not squarefree");
      if (m.exp[i] == 1) mask |= FaceMask(1) << i;
    }
    if (mask == 0) throw Error("ideal contains a unit");
    gens.push_back(mask);
  }
  if (gens.empty()) return SimplicialComplex::simplex(std::move(universe));

  std::vector<FaceMask> primes;
  minimalHittingSets(gens, 0, primes);
  primes = [&] {
    // keep only inclusion-minimal hitting sets
    std::vector<FaceMask> minimal;
    for (FaceMask p : primes) {
      bool hasSmaller = false;
      for (FaceMask q : primes)
        if (p != q && (q & p) == q) {
          hasSmaller = true;
          break;
        }
      if (!hasSmaller) minimal.push_back(p);
    }
    return minimal;
  }();

  std::vector<FaceMask> facets;
  for (FaceMask p : primes) facets.push_back(all & ~p);
  return SimplicialComplex(std::move(universe), std::move(facets));
}

Ideal stanleyReisnerIdeal(const SimplicialComplex& complex, const RingPtr& ring) {
  if (complex.universe() != ring->variables())
    throw RingMismatchError("complex universe does not match ring variables");
  const std::size_t nv = complex.universe().size();
  std::vector<FaceMask> minimalNonFaces;
  std::vector<FaceMask> bySize;
  for (FaceMask f = 1; f < (FaceMask(1) << nv); ++f) bySize.push_back(f);
  std::sort(bySize.begin(), bySize.end(),
            [](FaceMask a, FaceMask b) { return popcount(a) < popcount(b); });
  for (FaceMask f : bySize) {
    if (complex.isFace(f)) continue;
    bool minimal = true;
    for (FaceMask g : minimalNonFaces)
      if ((g & f) == g) {
        minimal = false;
        break;
      }
    if (minimal) minimalNonFaces.push_back(f);
  }
  if (complex.isVoid()) {
    // The void complex excludes even the empty face; its ideal is the unit
    // ideal, which cannot be represented here.  Callers use the empty-face
    // complex instead, whose ideal is generated by all the vertices.
    throw Error("void complex has no Stanley-Reisner ideal");
  }
  std::vector<Polynomial> gens;
  for (FaceMask f : minimalNonFaces) {
    Monomial m(nv);
    for (std::size_t i = 0; i < nv; ++i)
      if (f & (FaceMask(1) << i)) m.exp[i] = 1;
    gens.push_back(Polynomial::term(ring, std::move(m), 1));
  }
  return Ideal(ring, std::move(gens));
}

SimplicialComplex deletion(const SimplicialComplex& complex, const std::string& v) {
  const int idx = complex.vertexIndex(v);
  if (idx < 0) throw Error("unknown vertex " + v);
  const FaceMask bit = FaceMask(1) << idx;
  std::vector<FaceMask> faces;
  for (FaceMask f : complex.facets()) faces.push_back(f & ~bit);
  return SimplicialComplex(complex.universe(), std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& complex, const std::string& v) {
  const int idx = complex.vertexIndex(v);
  if (idx < 0) throw Error("unknown vertex " + v);
  const FaceMask bit = FaceMask(1) << idx;
  std::vector<FaceMask> faces;
  for (FaceMask f : complex.facets())
    if (f & bit) faces.push_back(f & ~bit);
  return SimplicialComplex(complex.universe(), std::move(faces));
}

SimplicialComplex star(const SimplicialComplex& complex, const std::string& v) {
  const int idx = complex.vertexIndex(v);
  if (idx < 0) throw Error("unknown vertex " + v);
  const FaceMask bit = FaceMask(1) << idx;
  std::vector<FaceMask> faces;
  for (FaceMask f : complex.facets())
    if (f & bit) faces.push_back(f);
  return SimplicialComplex(complex.universe(), std::move(faces));
}

SimplicialComplex boundary(const SimplicialComplex& complex) {
  if (!complex.isPure()) throw Error("boundary requires a pure complex");
  std::map<FaceMask, int> ridgeCount;
  for (FaceMask f : complex.facets()) {
    FaceMask rest = f;
    if (f == 0) continue;
    while (rest) {
      const FaceMask v = rest & (~rest + 1);
      rest ^= v;
      ++ridgeCount[f & ~v];
    }
  }
  std::vector<FaceMask> ridges;
  for (const auto& [ridge, count] : ridgeCount)
    if (count == 1) ridges.push_back(ridge);
  return SimplicialComplex(complex.universe(), std::move(ridges));
}

namespace {

struct VdSearch {
  std::map<std::vector<FaceMask>, VdResult> memo;

  VdResult run(const SimplicialComplex& complex) {
    auto it = memo.find(complex.facets());
    if (it != memo.end()) return it->second;
    VdResult result = compute(complex);
    memo.emplace(complex.facets(), result);
    return result;
  }

  bool subcomplexOf(const SimplicialComplex& inner, const SimplicialComplex& outer) {
    for (FaceMask f : inner.facets())
      if (!outer.isFace(f)) return false;
    return true;
  }

  VdResult compute(const SimplicialComplex& complex) {
    VdResult out;
    if (complex.facets().size() <= 1) {  // void, empty or a single simplex
      out.decomposable = true;
      out.witness = std::make_shared<VdWitness>();
      out.witness->leaf = true;
      return out;
    }
    if (!complex.isPure()) {
      out.reason = "complex is not pure";
      return out;
    }
    const int d = complex.dimension();

    struct Candidate {
      std::string vertex;
      SimplicialComplex del, lnk;
      bool linkInBoundary;
    };
    std::vector<Candidate> candidates;
    for (const auto& v : complex.universe()) {
      const int idx = complex.vertexIndex(v);
      const FaceMask bit = FaceMask(1) << idx;
      bool inSome = false, inAll = true;
      for (FaceMask f : complex.facets()) {
        if (f & bit)
          inSome = true;
        else
          inAll = false;
      }
      if (!inSome || inAll) continue;  // proper shedding vertices only
      SimplicialComplex del = deletion(complex, v);
      SimplicialComplex lnk = link(complex, v);
      if (!del.isPure() || del.dimension() != d) continue;
      if (!lnk.isPure() || lnk.dimension() != d - 1) continue;
      const bool lib = subcomplexOf(lnk, boundary(del));
      candidates.push_back({v, std::move(del), std::move(lnk), lib});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return a.linkInBoundary && !b.linkInBoundary;
                     });
    for (auto& cand : candidates) {
      VdResult delResult = run(cand.del);
      if (!delResult.decomposable) continue;
      VdResult lnkResult = run(cand.lnk);
      if (!lnkResult.decomposable) continue;
      out.decomposable = true;
      out.witness = std::make_shared<VdWitness>();
      out.witness->vertex = cand.vertex;
      out.witness->linkInBoundary = cand.linkInBoundary;
      out.witness->del = delResult.witness;
      out.witness->lnk = lnkResult.witness;
      return out;
    }
    out.reason = "no shedding vertex admits a decomposition";
    return out;
  }
};

}  // namespace

VdResult isVertexDecomposable(const SimplicialComplex& complex) {
  VdSearch search;
  return search.run(complex);
}

bool linkInBoundaryAlongWitness(const VdResult& result) {
  if (!result.decomposable || !result.witness) return false;
  std::function<bool(const VdWitness&)> walk = [&](const VdWitness& node) -> bool {
    if (node.leaf) return true;
    if (!node.linkInBoundary) return false;
    return walk(*node.del) && walk(*node.lnk);
  };
  return walk(*result.witness);
}

SimplicialComplex cone(const SimplicialComplex& complex, const std::string& apexName) {
  if (complex.vertexIndex(apexName) >= 0) throw Error("apex already a vertex");
  std::vector<std::string> universe = complex.universe();
  universe.push_back(apexName);
  const FaceMask apex = FaceMask(1) << (universe.size() - 1);
  std::vector<FaceMask> facets;
  for (FaceMask f : complex.facets()) facets.push_back(f | apex);
  if (complex.isVoid()) facets.push_back(apex);
  return SimplicialComplex(std::move(universe), std::move(facets));
}

}  // namespace hilbsplit
