#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qcoord {

/// Generator t[i,j], 1-based.
struct GenIndex {
  int i = 1;
  int j = 1;

  auto operator<=>(const GenIndex&) const = default;

  /// Row-major position 0..n^2-1.
  int flat(int n) const { return (i - 1) * n + (j - 1); }
  static GenIndex from_flat(int f, int n) { return {f / n + 1, f % n + 1}; }
  bool in_range(int n) const { return i >= 1 && i <= n && j >= 1 && j <= n; }
};

/// Flat generator index, see GenIndex::flat.
using Letter = std::uint16_t;

/// Noncommutative word in the generators; the empty word is 1.
struct Word {
  std::vector<Letter> letters;

  auto operator<=>(const Word&) const = default;
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  static Word from_indices(int n, std::initializer_list<GenIndex> gens);
  Word concat(const Word& rhs) const;
};

/// (k, d_11, d_12, ..., d_nn): degree followed by occurrence counts in
/// row-major order. Compared lexicographically.
struct Weight {
  std::vector<int> components;

  bool operator==(const Weight&) const = default;
  std::size_t dimension() const { return components.size(); }
  int degree() const { return components.empty() ? 0 : components.front(); }
  Weight operator+(const Weight& rhs) const;
};

Weight weight(const Word& w, int n);

/// Lexicographic comparison, leftmost component first. Throws DimensionError
/// when the weights come from different n.
std::strong_ordering lex_compare(const Weight& a, const Weight& b);

/// Ordered monomial prod t[i,j]^N[i,j] * D^dpower. Exponents are stored in
/// row-major layout; the factor order is given by the active GenOrder.
///
/// The default comparison is the canonical term order used for output:
/// degree, then exponent vector, then dpower. Degree followed by the
/// exponent vector is exactly the weight, so this refines the weight order.
struct NormalMonomial {
  std::vector<std::uint16_t> exponents;
  int dpower = 0;

  NormalMonomial() = default;
  explicit NormalMonomial(int n) : exponents(static_cast<std::size_t>(n * n), 0) {}
  NormalMonomial(std::vector<std::uint16_t> exps, int d)
      : exponents(std::move(exps)), dpower(d) {}

  int degree() const;
  int n() const;
  std::uint16_t exponent(GenIndex g) const { return exponents[static_cast<std::size_t>(g.flat(n()))]; }
  bool is_identity() const;

  bool operator==(const NormalMonomial&) const = default;
  std::strong_ordering operator<=>(const NormalMonomial& rhs) const;

  /// Product of commuting exponent vectors (no reordering), dpowers add.
  NormalMonomial times(const NormalMonomial& rhs) const;
};

Weight weight(const NormalMonomial& m);

struct NormalMonomialHash {
  std::size_t operator()(const NormalMonomial& m) const noexcept;
};

/// Position of a generator relative to the antidiagonal j = n + 1 - i.
enum class Region {
  kBelow,  // j > n + 1 - i
  kOn,     // j = n + 1 - i
  kAbove,  // j < n + 1 - i
};

Region region(GenIndex g, int n);

enum class OrderKind {
  kAny,
  kOppositeConstrained,
};

/// Total order on the generators, stored as a rank per flat index.
class GenOrder {
 public:
  GenOrder() = default;

  /// (1,1) < (1,2) < ... < (n,n).
  static GenOrder row_major(int n);

  /// Order given by listing every generator once, smallest first. With kind
  /// kOppositeConstrained the block condition is validated.
  static GenOrder from_sequence(int n, const std::vector<GenIndex>& sequence,
                                OrderKind kind = OrderKind::kAny);

  int n() const { return n_; }
  OrderKind kind() const { return kind_; }
  int rank(Letter l) const { return rank_[l]; }
  int rank(GenIndex g) const { return rank_[static_cast<std::size_t>(g.flat(n_))]; }
  Letter at_rank(int r) const { return by_rank_[static_cast<std::size_t>(r)]; }
  std::span<const Letter> sequence() const { return by_rank_; }

  bool operator==(const GenOrder&) const = default;

 private:
  int n_ = 0;
  OrderKind kind_ = OrderKind::kAny;
  std::vector<int> rank_;
  std::vector<Letter> by_rank_;
};

/// Every generator below the antidiagonal precedes every antidiagonal one,
/// which precede every generator above it. Throws ConstraintError otherwise.
void validate_opposite(const GenOrder& order);

/// Opposite-constrained order: blocks below / on / above the antidiagonal,
/// each block ordered by `within_block`.
GenOrder make_opposite_order(int n, const GenOrder& within_block);

/// Number of pairs (a < b) with rank(w[a]) > rank(w[b]).
int inversion_count(const Word& w, const GenOrder& order);

/// The factors of m in order, each repeated by its exponent (D excluded).
Word to_word(const NormalMonomial& m, const GenOrder& order);

/// Collects letters into an exponent vector; order is forgotten.
NormalMonomial collect(const Word& w, int n, int dpower = 0);

/// "t[1,1]^2 t[1,2] D^-1" with factors in GenOrder order; "1" for identity.
std::string format_monomial(const NormalMonomial& m, const GenOrder& order,
                            std::string_view gen_name = "t",
                            std::string_view det_name = "D");

std::string format_word(const Word& w, int n);

}  // namespace qcoord
