#ifndef HILBSPLIT_RING_HPP
#define HILBSPLIT_RING_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbsplit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RingMismatchError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Thrown when a reduction chain under a non-well-founded order exceeds the
// size of its graded piece.
struct TerminationError : Error {
  using Error::Error;
};

using Weight = std::pair<int, int>;

enum class Direction { MaxFirst, MinFirst };

struct OrderDirective {
  int var;
  Direction dir;
  friend bool operator==(const OrderDirective&, const OrderDirective&) = default;
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// A sequence of per-variable comparison directives.  (v, MaxFirst) realizes
/// Lex_v, (v, MinFirst) realizes Revlex_v; later directives break earlier ties.
class OrderSpec {
 public:
  OrderSpec() = default;
  explicit OrderSpec(std::vector<OrderDirective> directives);

  const std::vector<OrderDirective>& directives() const { return directives_; }
  std::size_t size() const { return directives_.size(); }
  bool empty() const { return directives_.empty(); }

  OrderSpec prefix(std::size_t len) const;
  bool hasMinFirst() const;
  bool coversAllVariables(const RingContext& ring) const;

  /// Stable string form, used as a cache key.
  std::string key(const RingContext& ring) const;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

 private:
  std::vector<OrderDirective> directives_;
};

/// Variable names, characteristic, optional T^2-multigrading and the ring's
/// default total order.  Shared immutably by everything built on top.
class RingContext : public std::enable_shared_from_this<RingContext> {
 public:
  static RingPtr make(std::vector<std::string> vars, std::int64_t p,
                      std::optional<std::vector<Weight>> grading = std::nullopt,
                      std::optional<OrderSpec> defaultOrder = std::nullopt);

  /// k[x, y] with Lex x >> y.
  static RingPtr xy(std::int64_t p);

  std::size_t numVars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variableName(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
  int indexOf(const std::string& name) const;  // -1 when absent
  std::int64_t characteristic() const { return p_; }

  bool hasGrading() const { return grading_.has_value(); }
  const std::vector<Weight>& grading() const;
  Weight variableWeight(int i) const { return grading().at(static_cast<std::size_t>(i)); }

  const OrderSpec& defaultOrder() const { return defaultOrder_; }

  /// Strictly positive grading derived from a patch-shaped T^2-grading
  /// (a_i -> (-1, i-1), b_i -> (0, -i), elimination t -> (0, 0)).
  bool hasPositiveWeights() const { return positiveWeights_.has_value(); }
  const std::vector<std::int64_t>& positiveWeights() const;

  bool hasEliminationVar() const { return indexOf("t") >= 0; }

  /// Same ring with a fresh elimination variable t ordered above everything.
  RingPtr withEliminationVar() const;

 private:
  RingContext() = default;

  std::vector<std::string> vars_;
  std::int64_t p_ = 0;
  std::optional<std::vector<Weight>> grading_;
  OrderSpec defaultOrder_;
  std::optional<std::vector<std::int64_t>> positiveWeights_;
};

/// Dense exponent vector; length always matches the ring context it is used with.
struct Monomial {
  std::vector<int> exp;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exp(n, 0) {}
  explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

  std::size_t size() const { return exp.size(); }
  int degree() const;
  bool isConstant() const;
  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial quotientBy(const Monomial& other) const;  // requires divisibility
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprimeWith(const Monomial& other) const;

  // Container ordering only; mathematical comparisons go through compare().
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exp <=> b.exp; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Compare m1 and m2 under the directive sequence.  Total preorder; a total
/// OrderSpec never ties on distinct monomials.
std::strong_ordering compare(const Monomial& m1, const Monomial& m2, const OrderSpec& order);

/// Positive integer grading from the patch T^2-weights: sum of
/// (N - (i-1)) deg_{a_i} + i deg_{b_i}, N = n + 1.  Zero exactly on constants
/// (monomials in t excluded; t is graded zero).
std::int64_t positiveDegree(const Monomial& m, const RingContext& ring);

Weight t2Weight(const Monomial& m, const RingContext& ring);

std::string formatMonomial(const Monomial& m, const RingContext& ring);

}  // namespace hilbsplit

#endif
