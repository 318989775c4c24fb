#pragma once

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qcoord/config.hpp"
#include "qcoord/element.hpp"
#include "qcoord/errors.hpp"
#include "qcoord/permutation.hpp"
#include "qcoord/rewrite.hpp"
#include "qcoord/ring.hpp"

namespace qcoord {

/// How unordered words are brought to ordered form.
enum class Strategy {
  /// Letters are inserted one at a time into an ordered prefix; results of
  /// (ordered monomial) * (generator) are memoized. Default.
  kInsertion,
  /// Worklist rewriting on whole words: the largest-weight pending word has
  /// its leftmost adjacent inversion resolved.
  kLeftmostInversion,
  /// As above, resolving the rightmost adjacent inversion.
  kRightmostInversion,
};

/// Normal-form engine for O_q(M_n), O_q(GL_n), O_q(SL_n) over a coefficient
/// ring. Holds a memo table, so a single engine must not be shared between
/// threads; construct one per worker instead.
template <CoefficientRing Ring>
class Engine {
 public:
  using Coeff = typename Ring::value_type;
  using Elem = Element<Coeff>;
  /// Called for every single rewrite step (word before, word after).
  using StepObserver = std::function<void(const Word&, const Word&)>;

  Engine(AlgebraConfig config, Ring ring) : config_(std::move(config)), ring_(std::move(ring)) {
    config_.validate();
    const int n2 = config_.n * config_.n;
    rules_.assign(static_cast<std::size_t>(n2 * n2), Rule{ring_.zero(), ring_.zero()});
    for (int x = 0; x < n2; ++x) {
      for (int y = 0; y < n2; ++y) {
        auto terms = swap_adjacent(config_.n, GenIndex::from_flat(x, config_.n),
                                   GenIndex::from_flat(y, config_.n));
        if (!terms) continue;
        Rule& r = rules_[static_cast<std::size_t>(x * n2 + y)];
        r.main = relation_image((*terms)[0].coeff);
        if (terms->size() > 1) {
          r.correction = relation_image((*terms)[1].coeff);
          r.a = (*terms)[1].word.letters[0];
          r.b = (*terms)[1].word.letters[1];
          r.has_correction = !ring_.is_zero(r.correction);
        }
      }
    }
  }

  const AlgebraConfig& config() const { return config_; }
  const Ring& ring() const { return ring_; }
  int n() const { return config_.n; }
  const GenOrder& order() const { return config_.order; }

  /// Image of a Laurent polynomial in the relation parameter.
  Coeff relation_image(const LaurentPoly& p) const {
    Coeff r = ring_.zero();
    for (const auto& [e, c] : p.terms()) r += ring_.relation_q_power(e) * ring_.from_laurent(LaurentPoly(c));
    return r;
  }

  /// (-q)^k in the relation parameter.
  Coeff minus_q_power(int k) const {
    Coeff r = ring_.relation_q_power(k);
    return (k % 2 != 0) ? -r : r;
  }

  // ---- element constructors -------------------------------------------

  NormalMonomial identity_monomial() const { return NormalMonomial(config_.n); }

  Elem one() const { return Elem(identity_monomial(), ring_.one()); }
  Elem scalar(const Coeff& c) const { return Elem(identity_monomial(), c); }

  Elem generator(GenIndex g) {
    if (!g.in_range(config_.n)) throw ParameterError("generator index out of range");
    NormalMonomial m = identity_monomial();
    m.exponents[static_cast<std::size_t>(g.flat(config_.n))] = 1;
    return enforce_basis(Elem(m, ring_.one()));
  }

  /// D^z: a dpower shift for GL, 1 for SL; only z = 0 for M_n.
  Elem determinant_power(int z) {
    switch (config_.variant) {
      case Variant::kMn:
        if (z != 0) throw UnsupportedError("D is not invertible (and not a token) in O_q(M_n)");
        return one();
      case Variant::kSLn:
        return one();
      case Variant::kGLn: {
        NormalMonomial m = identity_monomial();
        m.dpower = z;
        return Elem(m, ring_.one());
      }
    }
    return one();
  }

  /// An ordered monomial as an element, reduced to the active basis.
  Elem monomial(const NormalMonomial& m) { return enforce_basis(Elem(m, ring_.one())); }

  // ---- normal forms ----------------------------------------------------

  /// Normal form of c * w * D^dpower.
  Elem normalize(const Word& w, const Coeff& c, int dpower = 0,
                 Strategy strategy = Strategy::kInsertion,
                 const StepObserver* observer = nullptr) {
    Elem ordered = ordered_form(w, c, strategy, observer);
    if (dpower != 0) {
      Elem shifted;
      shifted.add_scaled_shifted(ordered, ring_.one(), dpower);
      ordered = std::move(shifted);
    }
    return enforce_basis(ordered);
  }

  Elem normalize(const Word& w) { return normalize(w, ring_.one()); }

  /// Reorders w into a combination of ordered monomials (dpower 0) without
  /// any determinant reduction.
  Elem ordered_form(const Word& w, const Coeff& c, Strategy strategy = Strategy::kInsertion,
                    const StepObserver* observer = nullptr) {
    check_word(w);
    if (strategy == Strategy::kInsertion) {
      Elem e(identity_monomial(), c);
      for (Letter l : w.letters) e = times_letter(e, l);
      return e;
    }
    return rewrite_words(w, c, strategy == Strategy::kLeftmostInversion, observer);
  }

  /// Normal form of a * b.
  Elem multiply(const Elem& a, const Elem& b) { return enforce_basis(multiply_ordered(a, b)); }

  Elem power(const Elem& a, unsigned k) {
    Elem r = one();
    for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
    return r;
  }

  /// a * b - b * a.
  Elem commutator(const Elem& a, const Elem& b) { return multiply(a, b) - multiply(b, a); }

  /// Product with keys ordered but no determinant reduction applied. D is
  /// central, so dpowers simply add.
  Elem multiply_ordered(const Elem& a, const Elem& b) {
    check_element(a);
    check_element(b);
    Elem r;
    for (const auto& [m1, c1] : a) {
      NormalMonomial left = m1;
      left.dpower = 0;
      for (const auto& [m2, c2] : b) {
        Elem prod(left, ring_.one());
        for (Letter l : order().sequence()) {
          for (int k = 0; k < m2.exponents[l]; ++k) prod = times_letter(prod, l);
        }
        r.add_scaled_shifted(prod, c1 * c2, m1.dpower + m2.dpower);
      }
    }
    return r;
  }

  // ---- determinant ------------------------------------------------------

  /// The monomial t[1,s(1)] ... t[n,s(n)] as a word.
  Word permutation_word(const Permutation& s, bool reversed_rows = false) const {
    Word w;
    for (int k = 1; k <= n(); ++k) {
      const int i = reversed_rows ? n() + 1 - k : k;
      w.letters.push_back(static_cast<Letter>(GenIndex{i, s(i)}.flat(n())));
    }
    return w;
  }

  /// sum over S_n of (-q)^length(s) t[1,s(1)] ... t[n,s(n)], ordered but not
  /// determinant-reduced (an element of the M_n part).
  const Elem& determinant_ordered() {
    if (!det_ordered_) {
      Elem d;
      for (const auto& s : Permutation::all(n())) {
        d += ordered_form(permutation_word(s), minus_q_power(s.length()));
      }
      det_ordered_ = std::move(d);
    }
    return *det_ordered_;
  }

  // ---- GL / SL basis enforcement -----------------------------------------

  /// Generators whose exponents the basis constraint looks at: the diagonal
  /// (standard flavor) or the antidiagonal (opposite flavor).
  std::vector<Letter> constrained_letters() const {
    std::vector<Letter> out;
    for (int i = 1; i <= n(); ++i) {
      const int j = config_.flavor == BasisFlavor::kStandard ? i : n() + 1 - i;
      out.push_back(static_cast<Letter>(GenIndex{i, j}.flat(n())));
    }
    return out;
  }

  /// Whether m is an element of the active PBW basis (B_M, B^v_GL, B_SL or
  /// their opposite versions).
  bool satisfies_basis(const NormalMonomial& m) const {
    if (config_.variant == Variant::kMn) return m.dpower == 0;
    if (config_.variant == Variant::kSLn && m.dpower != 0) return false;
    for (Letter l : constrained_letters()) {
      if (m.exponents[l] == 0) return true;
    }
    return false;
  }

  /// Termination measure of the determinant reduction, compared
  /// lexicographically: the weight for the standard flavor; the antidiagonal
  /// degree followed by the weight for the opposite flavor.
  std::vector<int> reduction_measure(const NormalMonomial& m) const {
    std::vector<int> out;
    if (config_.flavor == BasisFlavor::kOpposite) {
      int h = 0;
      for (Letter l : constrained_letters()) h += m.exponents[l];
      out.push_back(h);
    }
    const Weight w = weight(m);
    out.insert(out.end(), w.components.begin(), w.components.end());
    return out;
  }

  /// One determinant-reduction step for an ordered monomial whose
  /// constrained exponents are all positive: returns an expression
  /// unit * t0 * D + (terms of lower measure) equal to m, where t0 is m with
  /// one factor of the diagonal (antidiagonal) product removed; in SL the D
  /// is replaced by 1. Returns nullopt if the precondition fails or the
  /// variant is M_n.
  std::optional<Elem> reduction_step(const NormalMonomial& m) {
    if (config_.variant == Variant::kMn) return std::nullopt;
    for (Letter l : constrained_letters()) {
      if (m.exponents[l] == 0) return std::nullopt;
    }
    NormalMonomial base = m;
    base.dpower = 0;
    Elem rule = reduction_rule(base);
    Elem out;
    out.add_scaled_shifted(rule, ring_.one(), config_.variant == Variant::kGLn ? m.dpower : 0);
    return out;
  }

  /// Rewrites every term until all keys satisfy the basis constraint.
  Elem enforce_basis(const Elem& e) {
    check_element(e);
    if (config_.variant == Variant::kMn) {
      for (const auto& [m, c] : e) {
        if (m.dpower != 0) throw UnsupportedError("D power in an O_q(M_n) element");
      }
      return e;
    }
    using Key = std::pair<std::vector<int>, NormalMonomial>;
    std::map<Key, Coeff, std::greater<>> work;
    auto push = [&](NormalMonomial m, const Coeff& c) {
      if (config_.variant == Variant::kSLn) m.dpower = 0;
      Key k{reduction_measure(m), std::move(m)};
      auto [it, inserted] = work.try_emplace(std::move(k), c);
      if (!inserted) {
        it->second += c;
        if (ring_.is_zero(it->second)) work.erase(it);
      }
    };
    for (const auto& [m, c] : e) push(m, c);
    Elem out;
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      const NormalMonomial& m = node.key().second;
      const Coeff& c = node.mapped();
      if (satisfies_basis(m)) {
        out.add(m, c);
        continue;
      }
      NormalMonomial base = m;
      base.dpower = 0;
      const Elem& rule = reduction_rule(base);
      for (const auto& [k, v] : rule) {
        NormalMonomial key = k;
        key.dpower += m.dpower;
        push(std::move(key), v * c);
      }
    }
    return out;
  }

  /// Converts a GL element in B^v form (any D power, minimal constrained
  /// exponent 0) to B^^ form: monomials t * D^-N with
  /// min(constrained exponents, N) = 0. Positive D powers are expanded.
  Elem to_wedge_form(const Elem& e) {
    if (config_.variant != Variant::kGLn) throw UnsupportedError("wedge form is defined for GL_n");
    Elem out;
    for (const auto& [m, c] : e) {
      if (m.dpower <= 0) {
        out.add(m, c);
        continue;
      }
      NormalMonomial t = m;
      t.dpower = 0;
      Elem expanded(t, ring_.one());
      for (int k = 0; k < m.dpower; ++k) expanded = multiply_ordered(expanded, determinant_ordered());
      out.add_scaled(expanded, c);
    }
    return out;
  }

  /// Membership in B^^_GL (or its opposite version).
  bool in_wedge_basis(const NormalMonomial& m) const {
    if (m.dpower > 0) return false;
    if (m.dpower == 0) return true;
    for (Letter l : constrained_letters()) {
      if (m.exponents[l] == 0) return true;
    }
    return false;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Rule {
    Coeff main;
    Coeff correction;
    Letter a = 0;
    Letter b = 0;
    bool has_correction = false;
  };

  struct MemoKey {
    std::vector<std::uint16_t> exponents;
    Letter letter;
    bool operator==(const MemoKey&) const = default;
  };
  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
      std::size_t h = k.letter;
      for (auto e : k.exponents) h = h * 1000003u ^ e;
      return h;
    }
  };

  const Rule& rule(Letter x, Letter y) const {
    const int n2 = n() * n();
    return rules_[static_cast<std::size_t>(x * n2 + y)];
  }

  void check_element(const Elem& e) const {
    const auto n2 = static_cast<std::size_t>(n() * n());
    for (const auto& [m, c] : e) {
      if (m.exponents.size() != n2) throw ParameterError("element belongs to a different n");
    }
  }

  void check_word(const Word& w) const {
    const int n2 = n() * n();
    for (Letter l : w.letters) {
      if (l >= n2) throw ParameterError("letter out of range for n = " + std::to_string(n()));
    }
  }

  // Normal form of (ordered monomial u with dpower 0) * generator g.
  const Elem& times_generator(const NormalMonomial& u, Letter g) {
    MemoKey key{u.exponents, g};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int rg = order().rank(g);
    std::optional<Letter> last;
    for (int r = n() * n() - 1; r > rg; --r) {
      const Letter l = order().at_rank(r);
      if (u.exponents[l] > 0) {
        last = l;
        break;
      }
    }
    Elem result;
    if (!last) {
      NormalMonomial v = u;
      ++v.exponents[g];
      result = Elem(v, ring_.one());
    } else {
      // u = u' x with x the last factor; x g = main g x + correction a b
      const Letter x = *last;
      NormalMonomial prefix = u;
      --prefix.exponents[x];
      const Rule& r = rule(x, g);
      const Elem head = times_generator(prefix, g);
      result.add_scaled(times_letter(head, x), r.main);
      if (r.has_correction) {
        const Elem ha = times_generator(prefix, r.a);
        result.add_scaled(times_letter(ha, r.b), r.correction);
      }
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

  // e * letter for e with dpower-0 ordered keys.
  Elem times_letter(const Elem& e, Letter l) {
    Elem out;
    for (const auto& [m, c] : e) {
      if (c.is_one()) {
        out += times_generator(m, l);
      } else {
        out.add_scaled(times_generator(m, l), c);
      }
    }
    return out;
  }

  Elem rewrite_words(const Word& w, const Coeff& c, bool leftmost, const StepObserver* observer) {
    using Key = std::pair<std::vector<int>, Word>;
    std::map<Key, Coeff, std::greater<>> pending;
    auto push = [&](Word word, const Coeff& coeff) {
      if (ring_.is_zero(coeff)) return;
      Key k{weight(word, n()).components, std::move(word)};
      auto [it, inserted] = pending.try_emplace(std::move(k), coeff);
      if (!inserted) {
        it->second += coeff;
        if (ring_.is_zero(it->second)) pending.erase(it);
      }
    };
    push(w, c);
    Elem out;
    while (!pending.empty()) {
      auto node = pending.extract(pending.begin());
      const Word& word = node.key().second;
      const Coeff& coeff = node.mapped();
      std::optional<std::size_t> pos;
      for (std::size_t k = 0; k + 1 < word.size(); ++k) {
        const std::size_t p = leftmost ? k : word.size() - 2 - k;
        if (order().rank(word.letters[p]) > order().rank(word.letters[p + 1])) {
          pos = p;
          break;
        }
      }
      if (!pos) {
        out.add(collect(word, n()), coeff);
        continue;
      }
      const Rule& r = rule(word.letters[*pos], word.letters[*pos + 1]);
      Word swapped = word;
      std::swap(swapped.letters[*pos], swapped.letters[*pos + 1]);
      if (observer) (*observer)(word, swapped);
      push(std::move(swapped), coeff * r.main);
      if (r.has_correction) {
        Word corrected = word;
        corrected.letters[*pos] = r.a;
        corrected.letters[*pos + 1] = r.b;
        if (observer) (*observer)(word, corrected);
        push(std::move(corrected), coeff * r.correction);
      }
    }
    return out;
  }

  // Expression for the ordered monomial m (dpower 0, constrained exponents
  // all positive) as in reduction_step, with D powers relative to m.
  //
  // m factors as prefix * A * suffix up to reordering, where A is the
  // diagonal (antidiagonal) word. Writing D_ord = c_A * A + rest_D for the
  // determinant in ordered form and prefix * A * suffix = c * m + rest_X,
  //   m = c^-1 ( c_A^-1 (prefix suffix D - prefix rest_D suffix) - rest_X ).
  const Elem& reduction_rule(const NormalMonomial& m) {
    if (auto it = reduction_memo_.find(m); it != reduction_memo_.end()) return it->second;

    const auto special = constrained_letters();
    NormalMonomial prefix = m;
    NormalMonomial suffix = identity_monomial();
    Word a_word;
    if (config_.flavor == BasisFlavor::kStandard) {
      for (Letter l : special) {
        --prefix.exponents[l];
        a_word.letters.push_back(l);
      }
    } else {
      for (int f = 0; f < n() * n(); ++f) {
        const GenIndex g = GenIndex::from_flat(f, n());
        if (region(g, n()) == Region::kAbove) {
          suffix.exponents[static_cast<std::size_t>(f)] = m.exponents[static_cast<std::size_t>(f)];
          prefix.exponents[static_cast<std::size_t>(f)] = 0;
        }
      }
      for (int k = 1; k <= n(); ++k) {
        const int i = n() + 1 - k;
        const Letter l = static_cast<Letter>(GenIndex{i, n() + 1 - i}.flat(n()));
        --prefix.exponents[l];
        a_word.letters.push_back(l);
      }
    }
    const Elem prefix_e(prefix, ring_.one());
    const Elem suffix_e(suffix, ring_.one());

    Elem x = multiply_ordered(multiply_ordered(prefix_e, Elem(ordered_form(a_word, ring_.one()))), suffix_e);
    const Coeff* c = x.find(m);
    if (!c) throw std::logic_error("reduction_rule: leading monomial missing");
    const auto c_inv = ring_.unit_inverse(*c);
    if (!c_inv) throw std::logic_error("reduction_rule: leading coefficient is not a unit");
    Elem rest_x = x;
    rest_x.erase(m);

    const NormalMonomial a_mon = collect(a_word, n());
    Elem rest_d = determinant_ordered();
    const Coeff* c_a = rest_d.find(a_mon);
    if (!c_a) throw std::logic_error("reduction_rule: determinant lacks the special monomial");
    const auto c_a_inv = ring_.unit_inverse(*c_a);
    if (!c_a_inv) throw std::logic_error("reduction_rule: special coefficient is not a unit");
    rest_d.erase(a_mon);

    Elem inner;
    inner.add_scaled_shifted(multiply_ordered(prefix_e, suffix_e), ring_.one(),
                             config_.variant == Variant::kGLn ? 1 : 0);
    inner -= multiply_ordered(multiply_ordered(prefix_e, rest_d), suffix_e);

    Elem body = inner.scaled(*c_a_inv);
    body -= rest_x;
    Elem result = body.scaled(*c_inv);
    return reduction_memo_.emplace(m, std::move(result)).first->second;
  }

  AlgebraConfig config_;
  Ring ring_;
  std::vector<Rule> rules_;
  std::unordered_map<MemoKey, Elem, MemoHash> memo_;
  std::unordered_map<NormalMonomial, Elem, NormalMonomialHash> reduction_memo_;
  std::optional<Elem> det_ordered_;
};

}  // namespace qcoord
