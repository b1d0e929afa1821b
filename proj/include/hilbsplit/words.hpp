#ifndef HILBSPLIT_WORDS_HPP
#define HILBSPLIT_WORDS_HPP

#include <set>
#include <string>
#include <vector>

#include "hilbsplit/hilbpatch.hpp"

namespace hilbsplit {

/// Segments of full words.  Serialization: 'a' for a, 'A' for a-hat, 'u' for
/// the up arrow (e.g. "aauAu" for aa^ A^ with arrows).
enum class Segment { AUp, AHatUp, AAUp, AA, AHat };

/// Zone-1 word in {a^, A^, aa^}, zone-2 word in {aa, A}, optional lone
/// trailing a.  #a + #A = n.
struct FullWord {
  std::vector<Segment> zone1;
  std::vector<Segment> zone2;
  bool trailingA = false;

  int letterCount() const;
  std::string str() const;
  friend bool operator==(const FullWord&, const FullWord&) = default;
};

/// A string over {a, A, u}: first letter not u, no two consecutive u.
struct RawWord {
  std::string letters;

  static RawWord fromString(const std::string& text);  // validates AW membership
  int letterCount() const;
  friend auto operator<=>(const RawWord&, const RawWord&) = default;
};

/// All full words associated to the label, ordered as in the source lists
/// (descending segment-lexicographic).
std::vector<FullWord> enumerateFullWords(const StratumLabel& label, int n);

/// Number the a/A letters 1..n, replace each arrow by b_i of the letter to its
/// left, drop the A letters; returns the surviving variable names.
std::set<std::string> toFacet(const FullWord& word);
std::set<std::string> toFacet(const RawWord& word);

struct WordClassification {
  bool full;
  StratumLabel label;  // owning stratum (via fill-up for partial words)
};

WordClassification classifyWord(const RawWord& word);

/// Left-to-right arrow insertion in zone 1 and A->a flips in zone 2 at each
/// failure point; the result is a full word of the same stratum whose facet
/// contains the input's face.
FullWord fillUp(const RawWord& word);

RawWord flatten(const FullWord& word);

/// The inverse of the facet map on AW: subsets of {a_i, b_i} correspond
/// one-to-one with raw words.
RawWord wordFromSubset(const std::set<std::string>& subset, int n);

}  // namespace hilbsplit

#endif
