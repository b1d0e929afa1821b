#include "hilbsplit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hilbsplit {

std::int64_t modInverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, newT = 1, r = p, newR = ((a % p) + p) % p;
  while (newR != 0) {
    const std::int64_t q = r / newR;
    std::swap(t -= q * newT, newT);
    std::swap(r -= q * newR, newR);
  }
  if (r != 1) throw Error("element not invertible mod p");
  return ((t % p) + p) % p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial f(std::move(ring));
  f.addTermInPlace(Monomial(f.ring_->numVars()), c);
  return f;
}

Polynomial Polynomial::variable(const RingPtr& ring, int var) {
  if (var < 0 || var >= static_cast<int>(ring->numVars())) throw Error("variable index out of range");
  Monomial m(ring->numVars());
  m.exp[static_cast<std::size_t>(var)] = 1;
  return term(ring, std::move(m), 1);
}

Polynomial Polynomial::variable(const RingPtr& ring, const std::string& name) {
  const int idx = ring->indexOf(name);
  if (idx < 0) throw Error("unknown variable " + name);
  return variable(ring, idx);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, std::int64_t c) {
  Polynomial f(std::move(ring));
  if (m.size() != f.ring_->numVars()) throw RingMismatchError("monomial length mismatch");
  f.addTermInPlace(m, c);
  return f;
}

bool Polynomial::isOne() const {
  return terms_.size() == 1 && terms_.begin()->first.isConstant() && terms_.begin()->second == 1;
}

std::int64_t Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Polynomial::addTermInPlace(const Monomial& m, std::int64_t c) {
  const std::int64_t p = ring_->characteristic();
  c = ((c % p) + p) % p;
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % p;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::requireSameRing(const Polynomial& other) const {
  if (ring_ != other.ring_) {
    if (!ring_ || !other.ring_ || ring_->variables() != other.ring_->variables() ||
        ring_->characteristic() != other.ring_->characteristic())
      throw RingMismatchError("polynomials belong to different rings");
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  requireSameRing(other);
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.addTermInPlace(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  requireSameRing(other);
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.addTermInPlace(m, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) out.addTermInPlace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  requireSameRing(other);
  Polynomial out(ring_);
  if (terms_.empty() || other.terms_.empty()) return out;
  const std::int64_t p = ring_->characteristic();
  // sort-and-combine beats repeated map insertion on the large products that
  // show up in determinants and powers
  std::vector<std::pair<Monomial, std::int64_t>> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_)
      products.emplace_back(m1.times(m2), (c1 * c2) % p);
  std::sort(products.begin(), products.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto hint = out.terms_.end();
  std::size_t i = 0;
  while (i < products.size()) {
    std::int64_t c = 0;
    const std::size_t start = i;
    while (i < products.size() && products[i].first == products[start].first)
      c = (c + products[i++].second) % p;
    if (c != 0)
      hint = out.terms_.emplace_hint(hint, std::move(products[start].first), c);
  }
  return out;
}

Polynomial Polynomial::scaled(std::int64_t c) const {
  Polynomial out(ring_);
  for (const auto& [m, cm] : terms_) out.addTermInPlace(m, cm * c);
  return out;
}

Polynomial Polynomial::timesTerm(const Monomial& m, std::int64_t c) const {
  Polynomial out(ring_);
  for (const auto& [mm, cm] : terms_) out.addTermInPlace(mm.times(m), cm * c);
  return out;
}

namespace {

Polynomial pruned(const Polynomial& f, const Monomial& cap) {
  Polynomial out(f.ring());
  for (const auto& [m, c] : f.terms())
    if (m.divides(cap)) out.addTermInPlace(m, c);
  return out;
}

}  // namespace

Polynomial Polynomial::power(int e, const std::optional<Monomial>& prune) const {
  if (e < 0) throw Error("negative exponent");
  Polynomial result = Polynomial::one(ring_);
  Polynomial base = prune ? pruned(*this, *prune) : *this;
  while (e > 0) {
    if (e & 1) {
      result = result * base;
      if (prune) result = pruned(result, *prune);
    }
    e >>= 1;
    if (e > 0) {
      base = base * base;
      if (prune) base = pruned(base, *prune);
    }
  }
  return result;
}

Polynomial Polynomial::initialForm(const OrderSpec& order) const {
  if (isZero()) throw Error("initial form of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : terms_) {
    if (!best || compare(m, *best, order) == std::strong_ordering::greater) best = &m;
  }
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_)
    if (compare(m, *best, order) == std::strong_ordering::equal) out.addTermInPlace(m, c);
  return out;
}

const Monomial& Polynomial::leadingMonomial(const OrderSpec& order) const {
  if (isZero()) throw Error("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : terms_) {
    if (!best || compare(m, *best, order) == std::strong_ordering::greater) best = &m;
  }
  return *best;
}

std::int64_t Polynomial::leadingCoefficient(const OrderSpec& order) const {
  return terms_.at(leadingMonomial(order));
}

Polynomial Polynomial::monic(const OrderSpec& order) const {
  return scaled(modInverse(leadingCoefficient(order), ring_->characteristic()));
}

bool Polynomial::isT2Homogeneous() const {
  return isZero() || t2WeightIfHomogeneous().has_value();
}

std::optional<Weight> Polynomial::t2WeightIfHomogeneous() const {
  if (isZero()) return std::nullopt;
  std::optional<Weight> w;
  for (const auto& [m, c] : terms_) {
    const Weight wm = t2Weight(m, *ring_);
    if (!w)
      w = wm;
    else if (*w != wm)
      return std::nullopt;
  }
  return w;
}

Polynomial Polynomial::substituteZero(int var) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_)
    if (m.exp[static_cast<std::size_t>(var)] == 0) out.addTermInPlace(m, c);
  return out;
}

std::int64_t Polynomial::evaluate(const std::vector<std::int64_t>& point) const {
  if (point.size() != ring_->numVars()) throw Error("evaluation point has wrong length");
  const std::int64_t p = ring_->characteristic();
  std::int64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::int64_t v = c;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int e = 0; e < m.exp[i]; ++e) v = (v * (((point[i] % p) + p) % p)) % p;
    acc = (acc + v) % p;
  }
  return acc;
}

Polynomial Polynomial::mapToRing(const RingPtr& target) const {
  if (target->characteristic() != ring_->characteristic())
    throw RingMismatchError("target ring has different characteristic");
  std::vector<int> where(ring_->numVars());
  for (std::size_t i = 0; i < ring_->numVars(); ++i)
    where[i] = target->indexOf(ring_->variableName(static_cast<int>(i)));
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Monomial mm(target->numVars());
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i] == 0) continue;
      if (where[i] < 0)
        throw RingMismatchError("target ring lacks variable " +
                                ring_->variableName(static_cast<int>(i)));
      mm.exp[static_cast<std::size_t>(where[i])] = m.exp[i];
    }
    out.addTermInPlace(mm, c);
  }
  return out;
}

std::string Polynomial::format() const {
  if (isZero()) return "0";
  const std::int64_t p = ring_->characteristic();
  std::vector<std::pair<Monomial, std::int64_t>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    return compare(a.first, b.first, ring_->defaultOrder()) == std::strong_ordering::greater;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    // Balanced residue: residues above p/2 print with a minus sign.
    const bool neg = 2 * c > p;
    const std::int64_t mag = neg ? p - c : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (m.isConstant())
      os << mag;
    else if (mag == 1)
      os << formatMonomial(m, *ring_);
    else
      os << mag << "*" << formatMonomial(m, *ring_);
    first = false;
  }
  return os.str();
}

namespace {

struct Parser {
  const RingPtr& ring;
  const std::string& text;
  std::size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool atEnd() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() {
    skipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::int64_t parseInteger() {
    skipSpace();
    const std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw ParseError("expected integer", pos);
    return v;
  }

  std::string parseName() {
    skipSpace();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])))) {
      if (std::isdigit(static_cast<unsigned char>(text[pos])) && pos == start)
        break;
      ++pos;
    }
    if (pos == start) throw ParseError("expected variable name", pos);
    return text.substr(start, pos - start);
  }

  // factor := INTEGER | varname ['^' INTEGER]
  void parseFactor(Monomial& m, std::int64_t& coeff) {
    skipSpace();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff *= parseInteger() % ring->characteristic();
      coeff %= ring->characteristic();
      return;
    }
    const std::size_t namePos = pos;
    const std::string name = parseName();
    const int idx = ring->indexOf(name);
    if (idx < 0) throw ParseError("unknown variable '" + name + "'", namePos);
    int e = 1;
    skipSpace();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t expPos = pos;
      e = static_cast<int>(parseInteger());
      if (e <= 0) throw ParseError("exponent must be positive", expPos);
    }
    m.exp[static_cast<std::size_t>(idx)] += e;
  }

  void parseTerm(Polynomial& acc, std::int64_t sign) {
    Monomial m(ring->numVars());
    std::int64_t coeff = sign;
    parseFactor(m, coeff);
    while (peek() == '*') {
      ++pos;
      parseFactor(m, coeff);
    }
    acc.addTermInPlace(m, coeff);
  }

  Polynomial run() {
    Polynomial acc(ring);
    std::int64_t sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos;
    } else if (peek() == '+') {
      ++pos;
    }
    parseTerm(acc, sign);
    while (!atEnd()) {
      const char c = peek();
      if (c == '+')
        sign = 1;
      else if (c == '-')
        sign = -1;
      else
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
      ++pos;
      parseTerm(acc, sign);
    }
    return acc;
  }
};

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text) {
  Parser parser{ring, text};
  return parser.run();
}

}  // namespace hilbsplit
