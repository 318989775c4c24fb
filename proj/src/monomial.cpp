#include "qcoord/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcoord/errors.hpp"

namespace qcoord {

Word Word::from_indices(int n, std::initializer_list<GenIndex> gens) {
  Word w;
  w.letters.reserve(gens.size());
  for (const auto& g : gens) {
    if (!g.in_range(n)) throw ParameterError("generator index out of range");
    w.letters.push_back(static_cast<Letter>(g.flat(n)));
  }
  return w;
}

Word Word::concat(const Word& rhs) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return w;
}

Weight Weight::operator+(const Weight& rhs) const {
  if (dimension() != rhs.dimension()) throw DimensionError("weight dimension mismatch");
  Weight r = *this;
  for (std::size_t k = 0; k < r.components.size(); ++k) r.components[k] += rhs.components[k];
  return r;
}

Weight weight(const Word& w, int n) {
  Weight r;
  r.components.assign(static_cast<std::size_t>(n * n) + 1, 0);
  r.components[0] = static_cast<int>(w.size());
  for (Letter l : w.letters) {
    if (l >= n * n) throw ParameterError("letter out of range in weight");
    ++r.components[static_cast<std::size_t>(l) + 1];
  }
  return r;
}

Weight weight(const NormalMonomial& m) {
  Weight r;
  r.components.reserve(m.exponents.size() + 1);
  r.components.push_back(m.degree());
  for (auto e : m.exponents) r.components.push_back(e);
  return r;
}

std::strong_ordering lex_compare(const Weight& a, const Weight& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("lex_compare: weights of dimension " +
                         std::to_string(a.dimension()) + " and " +
                         std::to_string(b.dimension()));
  }
  return a.components <=> b.components;
}

int NormalMonomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

int NormalMonomial::n() const {
  int n = 0;
  while (n * n < static_cast<int>(exponents.size())) ++n;
  return n;
}

bool NormalMonomial::is_identity() const {
  return dpower == 0 &&
         std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e == 0; });
}

std::strong_ordering NormalMonomial::operator<=>(const NormalMonomial& rhs) const {
  if (auto c = degree() <=> rhs.degree(); c != 0) return c;
  if (auto c = exponents <=> rhs.exponents; c != 0) return c;
  return dpower <=> rhs.dpower;
}

NormalMonomial NormalMonomial::times(const NormalMonomial& rhs) const {
  if (exponents.size() != rhs.exponents.size()) throw DimensionError("monomial size mismatch");
  NormalMonomial r = *this;
  for (std::size_t k = 0; k < exponents.size(); ++k) r.exponents[k] += rhs.exponents[k];
  r.dpower += rhs.dpower;
  return r;
}

std::size_t NormalMonomialHash::operator()(const NormalMonomial& m) const noexcept {
  std::size_t h = std::hash<int>{}(m.dpower);
  for (auto e : m.exponents) h = h * 1000003u ^ e;
  return h;
}

Region region(GenIndex g, int n) {
  const int anti = n + 1 - g.i;
  if (g.j > anti) return Region::kBelow;
  if (g.j == anti) return Region::kOn;
  return Region::kAbove;
}

GenOrder GenOrder::row_major(int n) {
  if (n < 1) throw ParameterError("n must be positive");
  std::vector<GenIndex> seq;
  for (int f = 0; f < n * n; ++f) seq.push_back(GenIndex::from_flat(f, n));
  return from_sequence(n, seq);
}

GenOrder GenOrder::from_sequence(int n, const std::vector<GenIndex>& sequence,
                                 OrderKind kind) {
  if (n < 1) throw ParameterError("n must be positive");
  if (static_cast<int>(sequence.size()) != n * n) {
    throw ConstraintError("order must list all " + std::to_string(n * n) + " generators");
  }
  GenOrder o;
  o.n_ = n;
  o.kind_ = kind;
  o.rank_.assign(static_cast<std::size_t>(n * n), -1);
  for (std::size_t r = 0; r < sequence.size(); ++r) {
    const GenIndex g = sequence[r];
    if (!g.in_range(n)) throw ConstraintError("order lists an out-of-range generator");
    auto& slot = o.rank_[static_cast<std::size_t>(g.flat(n))];
    if (slot != -1) throw ConstraintError("order lists a generator twice");
    slot = static_cast<int>(r);
    o.by_rank_.push_back(static_cast<Letter>(g.flat(n)));
  }
  if (kind == OrderKind::kOppositeConstrained) validate_opposite(o);
  return o;
}

void validate_opposite(const GenOrder& order) {
  const int n = order.n();
  int last_block = 0;
  for (Letter l : order.sequence()) {
    const int block = static_cast<int>(region(GenIndex::from_flat(l, n), n));
    if (block < last_block) {
      const GenIndex g = GenIndex::from_flat(l, n);
      throw ConstraintError("order violates the below < on < above antidiagonal block "
                            "condition at t[" + std::to_string(g.i) + "," +
                            std::to_string(g.j) + "]");
    }
    last_block = block;
  }
}

GenOrder make_opposite_order(int n, const GenOrder& within_block) {
  if (within_block.n() != n) throw DimensionError("secondary order has different n");
  std::vector<GenIndex> seq;
  for (Region want : {Region::kBelow, Region::kOn, Region::kAbove}) {
    for (Letter l : within_block.sequence()) {
      const GenIndex g = GenIndex::from_flat(l, n);
      if (region(g, n) == want) seq.push_back(g);
    }
  }
  return GenOrder::from_sequence(n, seq, OrderKind::kOppositeConstrained);
}

int inversion_count(const Word& w, const GenOrder& order) {
  int count = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      if (order.rank(w.letters[a]) > order.rank(w.letters[b])) ++count;
    }
  }
  return count;
}

Word to_word(const NormalMonomial& m, const GenOrder& order) {
  Word w;
  for (Letter l : order.sequence()) {
    w.letters.insert(w.letters.end(), m.exponents[l], l);
  }
  return w;
}

NormalMonomial collect(const Word& w, int n, int dpower) {
  NormalMonomial m(n);
  m.dpower = dpower;
  for (Letter l : w.letters) ++m.exponents[l];
  return m;
}

std::string format_monomial(const NormalMonomial& m, const GenOrder& order,
                            std::string_view gen_name, std::string_view det_name) {
  std::ostringstream os;
  const int n = order.n();
  bool first = true;
  for (Letter l : order.sequence()) {
    const int e = m.exponents[l];
    if (e == 0) continue;
    const GenIndex g = GenIndex::from_flat(l, n);
    if (!first) os << ' ';
    first = false;
    os << gen_name << '[' << g.i << ',' << g.j << ']';
    if (e != 1) os << '^' << e;
  }
  if (m.dpower != 0) {
    if (!first) os << ' ';
    first = false;
    os << det_name;
    if (m.dpower != 1) os << '^' << m.dpower;
  }
  return first ? "1" : os.str();
}

std::string format_word(const Word& w, int n) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const GenIndex g = GenIndex::from_flat(w.letters[k], n);
    if (k) os << ' ';
    os << "t[" << g.i << ',' << g.j << ']';
  }
  return os.str();
}

}  // namespace qcoord
