#ifndef HILBSPLIT_POLYNOMIAL_HPP
#define HILBSPLIT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbsplit/ring.hpp"

namespace hilbsplit {

/// Sparse polynomial over F_p: monomial -> nonzero canonical residue in [1, p).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }
  static Polynomial variable(const RingPtr& ring, int var);
  static Polynomial variable(const RingPtr& ring, const std::string& name);
  static Polynomial term(RingPtr ring, Monomial m, std::int64_t c);

  const RingPtr& ring() const { return ring_; }
  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  std::size_t termCount() const { return terms_.size(); }
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(const Monomial& m) const;
  int degree() const;  // -1 for the zero polynomial

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(std::int64_t c) const;
  Polynomial timesTerm(const Monomial& m, std::int64_t c) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// f^e by repeated squaring.  With a prune cap, every intermediate term
  /// exceeding the cap in some variable is discarded; sound for extracting
  /// coefficients of capped targets because multiplication only grows exponents.
  Polynomial power(int e, const std::optional<Monomial>& prune = std::nullopt) const;

  /// All terms maximal under the (possibly partial) order.  Single term when
  /// the order is total.  Errors on the zero polynomial.
  Polynomial initialForm(const OrderSpec& order) const;
  const Monomial& leadingMonomial(const OrderSpec& order) const;
  std::int64_t leadingCoefficient(const OrderSpec& order) const;
  Polynomial monic(const OrderSpec& order) const;

  bool isT2Homogeneous() const;
  std::optional<Weight> t2WeightIfHomogeneous() const;

  /// Terms with a positive exponent on var are dropped (substitute var := 0).
  Polynomial substituteZero(int var) const;
  std::int64_t evaluate(const std::vector<std::int64_t>& point) const;
  /// Rename-preserving transport into a ring containing all of this one's
  /// variables (by name).
  Polynomial mapToRing(const RingPtr& target) const;

  std::string format() const;
  static Polynomial parse(const RingPtr& ring, const std::string& text);

  void addTermInPlace(const Monomial& m, std::int64_t c);

 private:
  void requireSameRing(const Polynomial& other) const;

  RingPtr ring_;
  std::map<Monomial, std::int64_t> terms_;
};

std::int64_t modInverse(std::int64_t a, std::int64_t p);

}  // namespace hilbsplit

#endif
