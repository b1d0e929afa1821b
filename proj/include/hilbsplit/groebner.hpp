#ifndef HILBSPLIT_GROEBNER_HPP
#define HILBSPLIT_GROEBNER_HPP

#include <map>
#include <mutex>
#include <vector>

#include "hilbsplit/polynomial.hpp"

namespace hilbsplit {

/// Generator list with per-order reduced Groebner basis cache (write-once per
/// order key; concurrent readers see either absent or the final basis).
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  Ideal(const Ideal& other);
  Ideal(Ideal&& other) noexcept;
  Ideal& operator=(const Ideal& other);
  Ideal& operator=(Ideal&& other) noexcept;

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool isZeroIdeal() const { return gens_.empty(); }

  const std::vector<Polynomial>& groebnerBasis(const OrderSpec& order) const;
  const std::vector<Polynomial>& groebnerBasis() const;  // ring default order

  Ideal operator+(const Ideal& other) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::mutex cacheMutex_;
  mutable std::map<std::string, std::vector<Polynomial>> gbCache_;
};

/// S(g_i, g_j) = m_{j,i} g_i - m_{i,j} g_j with monic leading terms cancelled.
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const OrderSpec& order);

/// Remainder of division by basis: no term divisible by a basis leading
/// monomial, f - remainder in <basis>.  Under an order with a MinFirst
/// directive the inputs must be T^2-homogeneous and reduction chains are
/// capped by the size of the graded piece.
Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis,
                      const OrderSpec& order);

/// Buchberger's algorithm; returns the reduced basis, generators sorted by
/// leading monomial, leading coefficients 1.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const OrderSpec& order);

/// Ideal generated by initialForm(g, first prefixLength directives) over the
/// reduced basis under fullOrder.  Full prefix yields a monomial ideal.
Ideal initialIdeal(const Ideal& I, const OrderSpec& fullOrder, std::size_t prefixLength);

bool contains(const Ideal& I, const Polynomial& f, const OrderSpec& order);
bool contains(const Ideal& I, const Polynomial& f);
bool idealEquals(const Ideal& I, const Ideal& J, const OrderSpec& order);
bool idealEquals(const Ideal& I, const Ideal& J);

/// I cap J via the elimination ideal of t*I + (1-t)*J, t ordered above all.
Ideal intersect(const Ideal& I, const Ideal& J);

bool isSquarefreeMonomialIdeal(const Ideal& I, const OrderSpec& order);

}  // namespace hilbsplit

#endif
