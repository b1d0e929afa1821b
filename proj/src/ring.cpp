#include "hilbsplit/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hilbsplit {

namespace {

bool isPrime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Detects the patch grading shape and derives the strictly positive weights.
// a-like variables carry weight (-1, k), b-like (0, -k) with k >= 1, and an
// elimination variable may carry (0, 0).  Anything else disables positiveDegree.
std::optional<std::vector<std::int64_t>> derivePositiveWeights(
    const std::vector<Weight>& grading) {
  int aCount = 0;
  for (const auto& [w1, w2] : grading) {
    if (w1 == -1 && w2 >= 0)
      ++aCount;
    else if (w1 == 0 && (w2 <= -1 || w2 == 0))
      continue;
    else
      return std::nullopt;
  }
  const std::int64_t bigN = aCount + 1;
  std::vector<std::int64_t> out;
  out.reserve(grading.size());
  for (const auto& [w1, w2] : grading) {
    if (w1 == -1)
      out.push_back(bigN - w2);
    else
      out.push_back(-w2);  // b_i -> i, elimination t -> 0
  }
  for (std::size_t i = 0; i < grading.size(); ++i)
    if (out[i] <= 0 && !(grading[i].first == 0 && grading[i].second == 0)) return std::nullopt;
  return out;
}

}  // namespace

OrderSpec::OrderSpec(std::vector<OrderDirective> directives) : directives_(std::move(directives)) {
  std::set<int> seen;
  for (const auto& d : directives_) {
    if (!seen.insert(d.var).second) throw Error("order directive repeats a variable");
  }
}

OrderSpec OrderSpec::prefix(std::size_t len) const {
  if (len > directives_.size()) throw Error("order prefix longer than directive sequence");
  return OrderSpec(std::vector<OrderDirective>(directives_.begin(),
                                               directives_.begin() + static_cast<long>(len)));
}

bool OrderSpec::hasMinFirst() const {
  return std::any_of(directives_.begin(), directives_.end(),
                     [](const OrderDirective& d) { return d.dir == Direction::MinFirst; });
}

bool OrderSpec::coversAllVariables(const RingContext& ring) const {
  std::set<int> mentioned;
  for (const auto& d : directives_) mentioned.insert(d.var);
  return mentioned.size() == ring.numVars();
}

std::string OrderSpec::key(const RingContext& ring) const {
  std::ostringstream os;
  for (const auto& d : directives_)
    os << (d.dir == Direction::MaxFirst ? "L" : "R") << ring.variableName(d.var) << ";";
  return os.str();
}

RingPtr RingContext::make(std::vector<std::string> vars, std::int64_t p,
                          std::optional<std::vector<Weight>> grading,
                          std::optional<OrderSpec> defaultOrder) {
  if (!isPrime(p)) throw Error("characteristic must be prime, got " + std::to_string(p));
  {
    std::set<std::string> names(vars.begin(), vars.end());
    if (names.size() != vars.size()) throw Error("duplicate variable names");
  }
  if (grading && grading->size() != vars.size())
    throw Error("grading must assign a weight pair to every variable");

  auto ring = std::shared_ptr<RingContext>(new RingContext());
  ring->vars_ = std::move(vars);
  ring->p_ = p;
  ring->grading_ = std::move(grading);
  if (defaultOrder) {
    ring->defaultOrder_ = std::move(*defaultOrder);
  } else {
    std::vector<OrderDirective> dirs;
    for (int i = 0; i < static_cast<int>(ring->vars_.size()); ++i)
      dirs.push_back({i, Direction::MaxFirst});
    ring->defaultOrder_ = OrderSpec(std::move(dirs));
  }
  for (const auto& d : ring->defaultOrder_.directives())
    if (d.var < 0 || d.var >= static_cast<int>(ring->vars_.size()))
      throw Error("default order references an unknown variable");
  if (ring->grading_) ring->positiveWeights_ = derivePositiveWeights(*ring->grading_);
  return ring;
}

RingPtr RingContext::xy(std::int64_t p) {
  return make({"x", "y"}, p);
}

int RingContext::indexOf(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

const std::vector<Weight>& RingContext::grading() const {
  if (!grading_) throw Error("ring has no T^2-grading");
  return *grading_;
}

const std::vector<std::int64_t>& RingContext::positiveWeights() const {
  if (!positiveWeights_) throw Error("ring grading does not induce a positive grading");
  return *positiveWeights_;
}

RingPtr RingContext::withEliminationVar() const {
  if (hasEliminationVar()) throw Error("elimination variable t already in use");
  std::vector<std::string> vars = vars_;
  vars.push_back("t");
  const int tIndex = static_cast<int>(vars.size()) - 1;

  std::optional<std::vector<Weight>> grading;
  if (grading_) {
    grading = *grading_;
    grading->push_back({0, 0});  // keeps per-polynomial homogeneity intact
  }
  std::vector<OrderDirective> dirs;
  dirs.push_back({tIndex, Direction::MaxFirst});
  for (const auto& d : defaultOrder_.directives()) dirs.push_back(d);
  return make(std::move(vars), p_, std::move(grading), OrderSpec(std::move(dirs)));
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exp) d += e;
  return d;
}

bool Monomial::isConstant() const {
  return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (exp.size() != other.exp.size()) throw RingMismatchError("monomial length mismatch");
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (exp.size() != other.exp.size()) throw RingMismatchError("monomial length mismatch");
  Monomial out(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) out.exp[i] = exp[i] + other.exp[i];
  return out;
}

Monomial Monomial::quotientBy(const Monomial& other) const {
  if (!other.divides(*this)) throw Error("monomial quotient is not polynomial");
  Monomial out(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) out.exp[i] = exp[i] - other.exp[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.exp.size() != b.exp.size()) throw RingMismatchError("monomial length mismatch");
  Monomial out(a.exp.size());
  for (std::size_t i = 0; i < a.exp.size(); ++i) out.exp[i] = std::max(a.exp[i], b.exp[i]);
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.exp.size() != b.exp.size()) throw RingMismatchError("monomial length mismatch");
  Monomial out(a.exp.size());
  for (std::size_t i = 0; i < a.exp.size(); ++i) out.exp[i] = std::min(a.exp[i], b.exp[i]);
  return out;
}

bool Monomial::coprimeWith(const Monomial& other) const {
  if (exp.size() != other.exp.size()) throw RingMismatchError("monomial length mismatch");
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > 0 && other.exp[i] > 0) return false;
  return true;
}

std::strong_ordering compare(const Monomial& m1, const Monomial& m2, const OrderSpec& order) {
  if (m1.size() != m2.size()) throw RingMismatchError("comparing monomials of different rings");
  for (const auto& d : order.directives()) {
    if (d.var < 0 || d.var >= static_cast<int>(m1.size()))
      throw RingMismatchError("order references a variable outside the ring");
    const int e1 = m1.exp[static_cast<std::size_t>(d.var)];
    const int e2 = m2.exp[static_cast<std::size_t>(d.var)];
    if (e1 == e2) continue;
    const bool firstLarger = (d.dir == Direction::MaxFirst) ? (e1 > e2) : (e1 < e2);
    return firstLarger ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::int64_t positiveDegree(const Monomial& m, const RingContext& ring) {
  const auto& w = ring.positiveWeights();
  if (m.size() != w.size()) throw RingMismatchError("monomial length mismatch");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * m.exp[i];
  return d;
}

Weight t2Weight(const Monomial& m, const RingContext& ring) {
  const auto& g = ring.grading();
  Weight w{0, 0};
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    w.first += g[i].first * m.exp[i];
    w.second += g[i].second * m.exp[i];
  }
  return w;
}

std::string formatMonomial(const Monomial& m, const RingContext& ring) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!first) os << "*";
    os << ring.variableName(static_cast<int>(i));
    if (m.exp[i] > 1) os << "^" << m.exp[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

}  // namespace hilbsplit
