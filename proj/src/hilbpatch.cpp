#include "hilbsplit/hilbpatch.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hilbsplit {

PatchRing::PatchRing(int n, std::int64_t p) : n_(n) {
  if (n < 0) throw Error("patch size must be non-negative");
  std::vector<std::string> vars;
  std::vector<Weight> grading;
  for (int i = 1; i <= n; ++i) {
    vars.push_back("a" + std::to_string(i));
    grading.push_back({-1, i - 1});
    vars.push_back("b" + std::to_string(i));
    grading.push_back({0, -i});
  }
  std::vector<OrderDirective> dirs;
  for (int i = n; i >= 1; --i) {
    dirs.push_back({2 * (i - 1) + 1, Direction::MinFirst});  // Revlex_{b_i}
    dirs.push_back({2 * (i - 1), Direction::MaxFirst});      // Lex_{a_i}
  }
  ring_ = RingContext::make(std::move(vars), p, std::move(grading), OrderSpec(std::move(dirs)));
}

int PatchRing::aIndex(int i) const {
  if (i < 1 || i > n_) throw Error("a-index out of range");
  return 2 * (i - 1);
}

int PatchRing::bIndex(int i) const {
  if (i < 1 || i > n_) throw Error("b-index out of range");
  return 2 * (i - 1) + 1;
}

Polynomial cCoefficient(const PatchRing& patch, int size, int i, int j) {
  if (size < 0 || size > patch.n()) throw Error("matrix level out of range");
  if (i < 1 || i > size || j < 1 || j > size) throw Error("coefficient index out of range");
  const RingPtr& ring = patch.ring();
  if (j == 1) return patch.aVar(i);
  Polynomial c(ring);
  if (i < j) {
    for (int k = 1; k <= size - j + 1; ++k)
      c = c + patch.aVar(k + i) * patch.bVar(k + j - 1);
  } else {
    c = patch.aVar(i - j + 1);
    for (int k = 1; k <= j - 1; ++k)
      c = c - patch.aVar(k + i - j + 1) * patch.bVar(k);
  }
  return c;
}

CoeffMatrix::CoeffMatrix(const PatchRing& patch, int level) : ring_(patch.ring()) {
  if (level < 0 || level > patch.n()) throw Error("matrix level out of range");
  entries_.resize(static_cast<std::size_t>(level));
  for (int i = 1; i <= level; ++i) {
    auto& row = entries_[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= level; ++j) row.push_back(-cCoefficient(patch, level, i, j));
  }
}

const Polynomial& CoeffMatrix::entry(int i, int j) const {
  if (i < 1 || i > size() || j < 1 || j > size()) throw Error("matrix entry out of range");
  return entries_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

namespace {

// Cofactor expansion with subminors memoized on (row set, column set) masks.
class MinorCalculator {
 public:
  explicit MinorCalculator(const CoeffMatrix& m, RingPtr ring)
      : m_(m), ring_(std::move(ring)) {}

  Polynomial minor(std::uint32_t rowMask, std::uint32_t colMask) {
    if (__builtin_popcount(rowMask) != __builtin_popcount(colMask))
      throw Error("minor requires equally many rows and columns");
    if (rowMask == 0) return Polynomial::one(ring_);
    const std::uint64_t key = (static_cast<std::uint64_t>(rowMask) << 32) | colMask;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const int col = __builtin_ctz(colMask);  // expand along the first column
    Polynomial det(ring_);
    int sign = 1;
    for (int row = 0; row < m_.size(); ++row) {
      if (!(rowMask & (1u << row))) continue;
      const Polynomial sub = minor(rowMask & ~(1u << row), colMask & ~(1u << col));
      const Polynomial contrib = m_.entry(row + 1, col + 1) * sub;
      det = (sign > 0) ? det + contrib : det - contrib;
      sign = -sign;
    }
    memo_.emplace(key, det);
    return det;
  }

 private:
  const CoeffMatrix& m_;
  RingPtr ring_;
  std::map<std::uint64_t, Polynomial> memo_;
};

void subsetsOfSize(int n, int k, std::vector<std::uint32_t>& out) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << i;
    out.push_back(mask);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

}  // namespace

Polynomial CoeffMatrix::determinant() const {
  if (size() == 0) return Polynomial::one(ring_);
  MinorCalculator calc(*this, ring_);
  const std::uint32_t full = (size() == 32) ? ~0u : ((1u << size()) - 1);
  return calc.minor(full, full);
}

std::vector<Polynomial> CoeffMatrix::minors(int k) const {
  if (k <= 0) throw Error("minor size must be positive");
  if (k > size() + 1) throw Error("minor size exceeds matrix size + 1");
  std::vector<Polynomial> out;
  if (k == size() + 1) return out;  // zero ideal
  std::vector<std::uint32_t> rowMasks, colMasks;
  subsetsOfSize(size(), k, rowMasks);
  subsetsOfSize(size(), k, colMasks);
  MinorCalculator calc(*this, ring_);
  for (std::uint32_t r : rowMasks)
    for (std::uint32_t c : colMasks) {
      Polynomial m = calc.minor(r, c);
      if (!m.isZero()) out.push_back(std::move(m));
    }
  return out;
}

Polynomial CoeffMatrix::minorOf(const std::vector<int>& rows, const std::vector<int>& cols) const {
  std::uint32_t rm = 0, cm = 0;
  for (int r : rows) rm |= 1u << (r - 1);
  for (int c : cols) cm |= 1u << (c - 1);
  MinorCalculator calc(*this, ring_);
  return calc.minor(rm, cm);
}

CoeffMatrix buildMatrix(const PatchRing& patch, int level) {
  if (level != patch.n() && level != patch.n() - 1)
    throw Error("matrix level must be n or n-1");
  return CoeffMatrix(patch, level);
}

Polynomial splittingPolynomial(const PatchRing& patch) {
  if (patch.n() < 1) throw Error("splitting polynomial needs n >= 1");
  const CoeffMatrix m = buildMatrix(patch, patch.n());
  return -(patch.bVar(patch.n()) * m.determinant());
}

Ideal minorsIdeal(const PatchRing& patch, const CoeffMatrix& M, int k) {
  return Ideal(patch.ring(), M.minors(k));
}

bool StratumLabel::isValid(int n) const {
  if (s < 0 || u < 0 || t < 0) return false;
  if (flag == StratumFlag::Plus0) return s + u + t == n;
  if (u == 1) return false;  // no subvariety is associated to (s,1,t,+1)
  if (u == 0) return s + t + 1 == n;
  return s + u + t == n;
}

int StratumLabel::dimension() const {
  return s + 2 * t + (flag == StratumFlag::Plus1 ? 1 : 0);
}

std::string StratumLabel::str() const {
  std::ostringstream os;
  os << s << "," << u << "," << t << "," << (flag == StratumFlag::Plus0 ? "+0" : "+1");
  return os.str();
}

StratumLabel StratumLabel::parse(const std::string& text) {
  StratumLabel out;
  int flagDigit = -1;
  char plus = '\0';
  std::istringstream is(text);
  char c1, c2, c3, c4;
  if (!(is >> out.s >> c1 >> out.u >> c2 >> out.t >> c3 >> plus >> flagDigit) || c1 != ',' ||
      c2 != ',' || c3 != ',' || plus != '+' || (flagDigit != 0 && flagDigit != 1))
    throw Error("cannot parse stratum label '" + text + "' (expected s,u,t,+0 or s,u,t,+1)");
  is >> c4;
  if (!is.eof()) throw Error("trailing characters in stratum label '" + text + "'");
  out.flag = flagDigit == 0 ? StratumFlag::Plus0 : StratumFlag::Plus1;
  return out;
}

std::vector<StratumLabel> enumerateStrata(int n) {
  std::vector<StratumLabel> out;
  for (int s = 0; s <= n; ++s)
    for (int u = 0; s + u <= n; ++u) {
      StratumLabel l0{s, u, n - s - u, StratumFlag::Plus0};
      out.push_back(l0);
    }
  for (int s = 0; s + 1 <= n; ++s)
    out.push_back({s, 0, n - s - 1, StratumFlag::Plus1});
  for (int u = 2; u <= n; ++u)
    for (int s = 0; s + u <= n; ++s)
      out.push_back({s, u, n - s - u, StratumFlag::Plus1});
  for (const auto& l : out)
    if (!l.isValid(n)) throw Error("internal: invalid stratum " + l.str());
  std::sort(out.begin(), out.end());
  return out;
}

Ideal stratumIdeal(const PatchRing& patch, const StratumLabel& label) {
  const int n = patch.n();
  if (!label.isValid(n)) throw Error("invalid stratum label " + label.str());
  const RingPtr& ring = patch.ring();
  std::vector<Polynomial> gens;
  auto addMinors = [&](const CoeffMatrix& m, int k) {
    for (auto& g : m.minors(k)) gens.push_back(std::move(g));
  };

  if (label.flag == StratumFlag::Plus1 && label.u == 0) {
    if (label.s == 0) {
      gens.push_back(patch.bVar(n));  // (0,0,n-1,+1)
    } else {
      gens.push_back(patch.bVar(n));
      addMinors(buildMatrix(patch, n - 1), n - label.s);
    }
  } else if (label.flag == StratumFlag::Plus0 && label.u == 0) {
    addMinors(buildMatrix(patch, n), n - label.s + 1);
  } else if (label.flag == StratumFlag::Plus0) {  // u >= 1
    const CoeffMatrix m = buildMatrix(patch, n);
    for (int i = n; i >= n - label.u + 1; --i) gens.push_back(patch.bVar(i));
    for (int j = n; j >= n - label.u + 1; --j) {
      const Polynomial& e = m.entry(n, j);
      if (!e.isZero()) gens.push_back(e);
    }
    addMinors(m, n - label.s - label.u + 1);
  } else {  // +1 with u >= 2
    const CoeffMatrix m = buildMatrix(patch, n);
    for (int i = n; i >= n - label.u + 1; --i) gens.push_back(patch.bVar(i));
    for (int j = n; j >= n - label.u + 2; --j) {
      const Polynomial& e = m.entry(n, j);
      if (!e.isZero()) gens.push_back(e);
    }
    addMinors(buildMatrix(patch, n - 1), n - label.s - label.u + 1);
  }
  return Ideal(ring, std::move(gens));
}

std::vector<DegenComponent> predictedDegeneration(const StratumLabel& label,
                                                  DegenDirection direction, int n) {
  if (!label.isValid(n)) throw Error("invalid stratum label " + label.str());
  const bool inBnHyperplane = !(label.flag == StratumFlag::Plus0 && label.u == 0);

  std::vector<DegenComponent> out;
  if (direction == DegenDirection::RevlexBn) {
    if (inBnHyperplane) {  // rule 1: Y x 0_{b_n}
      out.push_back({label, n, LineFactor::Zero, LineFactor::Unused});
      return out;
    }
    const int s = label.s;
    if (s == 0) {  // rule 2
      out.push_back({{0, 0, n - 1, StratumFlag::Plus1}, n, LineFactor::Line, LineFactor::Unused});
    } else if (s < n) {  // rule 3
      out.push_back({{s, 0, n - s - 1, StratumFlag::Plus1}, n, LineFactor::Line, LineFactor::Unused});
      out.push_back({{s - 1, 1, n - s, StratumFlag::Plus0}, n, LineFactor::Line, LineFactor::Unused});
    } else {  // rule 4
      out.push_back({{n - 1, 1, 0, StratumFlag::Plus0}, n, LineFactor::Line, LineFactor::Unused});
    }
    return out;
  }

  if (!inBnHyperplane)
    throw Error("Lex_{a_n} rule not applicable: stratum " + label.str() +
                " is not contained in {b_n = 0}");

  const int s = label.s, u = label.u, t = label.t;
  if (label.flag == StratumFlag::Plus1 && u == 0) {  // rule 5
    out.push_back({{s, 0, t, StratumFlag::Plus0}, n - 1, LineFactor::Zero, LineFactor::Line});
  } else if (label.flag == StratumFlag::Plus1) {  // rule 9, u >= 2
    out.push_back({{s, u - 1, t, StratumFlag::Plus0}, n - 1, LineFactor::Zero, LineFactor::Line});
  } else if (t == 0) {  // rule 8: (n-u, u, 0, +0)
    out.push_back({{s, u - 1, 0, StratumFlag::Plus0}, n - 1, LineFactor::Zero, LineFactor::Zero});
  } else if (u == 1) {  // rule 6
    out.push_back({{s, 0, t, StratumFlag::Plus0}, n - 1, LineFactor::Zero, LineFactor::Zero});
    out.push_back({{s, 0, t - 1, StratumFlag::Plus1}, n - 1, LineFactor::Zero, LineFactor::Line});
  } else {  // rule 7: 2 <= u, t >= 1
    out.push_back({{s, u - 1, t, StratumFlag::Plus0}, n - 1, LineFactor::Zero, LineFactor::Zero});
    out.push_back({{s, u, t - 1, StratumFlag::Plus1}, n - 1, LineFactor::Zero, LineFactor::Line});
  }
  for (const auto& c : out)
    if (!c.label.isValid(c.size))
      throw Error("internal: predicted component " + c.label.str() + " invalid at size " +
                  std::to_string(c.size));
  return out;
}

Ideal componentIdeal(const PatchRing& patch, const DegenComponent& component) {
  const int n = patch.n();
  std::vector<Polynomial> gens;
  if (component.size == n) {
    const Ideal base = stratumIdeal(patch, component.label);
    if (component.bn == LineFactor::Zero) return base;
    // Line factor: sweep the b_n direction by evaluating generators at b_n = 0.
    for (const auto& g : base.generators()) {
      Polynomial h = g.substituteZero(patch.bIndex(n));
      if (!h.isZero()) gens.push_back(std::move(h));
    }
    return Ideal(patch.ring(), std::move(gens));
  }
  if (component.size != n - 1) throw Error("component size must be n or n-1");

  // Ideal of the size-(n-1) stratum built intrinsically inside the 2n-variable
  // ring, plus the b_n/a_n hyperplanes demanded by the factors.
  const PatchRing sub(n - 1, patch.ring()->characteristic());
  const Ideal small = stratumIdeal(sub, component.label);
  for (const auto& g : small.generators()) gens.push_back(g.mapToRing(patch.ring()));
  if (component.bn == LineFactor::Zero) gens.push_back(patch.bVar(n));
  if (component.an == LineFactor::Zero) gens.push_back(patch.aVar(n));
  return Ideal(patch.ring(), std::move(gens));
}

Ideal specialize(const PatchRing& patch, const std::vector<std::int64_t>& point) {
  const int n = patch.n();
  if (point.size() != patch.ring()->numVars()) throw Error("point has wrong length");
  const RingPtr target = RingContext::xy(patch.ring()->characteristic());
  const Polynomial x = Polynomial::variable(target, "x");
  const Polynomial y = Polynomial::variable(target, "y");
  auto yPow = [&](int e) { return y.power(e); };

  std::vector<Polynomial> gens;
  Polynomial f1 = yPow(n);
  for (int k = 1; k <= n; ++k) {
    const std::int64_t b = point[static_cast<std::size_t>(patch.bIndex(k))];
    f1 = f1 - yPow(n - k).scaled(b);
  }
  gens.push_back(f1);
  for (int i = 1; i <= n; ++i) {
    Polynomial f = x * yPow(n - i);
    f = f - yPow(n - 1).scaled(point[static_cast<std::size_t>(patch.aIndex(i))]);
    for (int j = 2; j <= n; ++j) {
      const std::int64_t c = cCoefficient(patch, n, i, j).evaluate(point);
      f = f - yPow(n - j).scaled(c);
    }
    gens.push_back(f);
  }
  return Ideal(target, std::move(gens));
}

std::vector<std::int64_t> randomPoint(const PatchRing& patch, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, patch.ring()->characteristic() - 1);
  std::vector<std::int64_t> point(patch.ring()->numVars());
  for (auto& v : point) v = dist(rng);
  return point;
}

}  // namespace hilbsplit
