#ifndef HILBSPLIT_SRCOMPLEX_HPP
#define HILBSPLIT_SRCOMPLEX_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hilbsplit/groebner.hpp"

namespace hilbsplit {

using FaceMask = std::uint64_t;

/// Facet-set representation of a simplicial complex on named vertices.  The
/// empty set is a face of every nonvoid complex; the void complex (no faces at
/// all) has an empty facet list.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::vector<std::string> universe, std::vector<FaceMask> facets);

  static SimplicialComplex fromFacetNames(std::vector<std::string> universe,
                                          const std::vector<std::set<std::string>>& facets);
  static SimplicialComplex simplex(std::vector<std::string> universe);
  static SimplicialComplex voidComplex(std::vector<std::string> universe);
  static SimplicialComplex emptyFaceOnly(std::vector<std::string> universe);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<FaceMask>& facets() const { return facets_; }
  std::vector<std::set<std::string>> facetNames() const;
  std::set<std::string> faceNames(FaceMask m) const;

  bool isVoid() const { return facets_.empty(); }
  bool isFace(FaceMask f) const;
  int dimension() const;  // -2 for void, -1 for {empty face}
  bool isPure() const;
  int vertexIndex(const std::string& name) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.universe_ == b.universe_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<FaceMask> facets_;  // inclusion-maximal, sorted
};

/// Facets = complements of the minimal primes, by recursive splitting on a
/// generator's variables.  Errors on a non-squarefree generator.
SimplicialComplex facetsFromSquarefreeIdeal(const Ideal& I);

/// Minimal non-face generators only; inverse to facetsFromSquarefreeIdeal.
Ideal stanleyReisnerIdeal(const SimplicialComplex& complex, const RingPtr& ring);

SimplicialComplex deletion(const SimplicialComplex& complex, const std::string& v);
SimplicialComplex link(const SimplicialComplex& complex, const std::string& v);
SimplicialComplex star(const SimplicialComplex& complex, const std::string& v);

/// Codimension-1 faces contained in exactly one facet.  Requires a pure complex.
SimplicialComplex boundary(const SimplicialComplex& complex);

struct VdWitness {
  bool leaf = false;              // single simplex / empty complex base case
  std::string vertex;             // shedding vertex otherwise
  bool linkInBoundary = false;    // link(v) inside boundary(del(v)) at this step
  std::shared_ptr<VdWitness> del;
  std::shared_ptr<VdWitness> lnk;
};

struct VdResult {
  bool decomposable = false;
  std::string reason;  // set when not decomposable (e.g. non-pure)
  std::shared_ptr<VdWitness> witness;
};

/// Exhaustive shedding-vertex search with memoization on facet sets.  Vertices
/// are tried in universe order, preferring sheds whose link lies in the
/// boundary of the deletion (the ball-certificate obligation).
VdResult isVertexDecomposable(const SimplicialComplex& complex);

/// True when every internal node of the witness tree satisfies
/// link(v) subset-of boundary(del(v)).
bool linkInBoundaryAlongWitness(const VdResult& result);

SimplicialComplex cone(const SimplicialComplex& complex, const std::string& apexName);

}  // namespace hilbsplit

#endif
