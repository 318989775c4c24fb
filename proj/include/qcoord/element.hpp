#pragma once

#include <map>
#include <utility>

#include "qcoord/monomial.hpp"

namespace qcoord {

/// Finite linear combination of ordered monomials. No zero coefficient is
/// ever stored, so structural equality is equality of elements. Iteration
/// follows the canonical monomial order (ascending).
template <class Coeff>
class Element {
 public:
  using Terms = std::map<NormalMonomial, Coeff>;

  Element() = default;
  Element(const NormalMonomial& m, Coeff c) { add(m, std::move(c)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of m, or nullptr when absent (zero).
  const Coeff* find(const NormalMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add(const NormalMonomial& m, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(NormalMonomial&& m, Coeff&& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += c * other
  void add_scaled(const Element& other, const Coeff& c) {
    if (c.is_zero()) return;
    for (const auto& [m, v] : other.terms_) add(m, v * c);
  }

  /// this += c * other with every key's dpower shifted by dshift.
  void add_scaled_shifted(const Element& other, const Coeff& c, int dshift) {
    if (c.is_zero()) return;
    for (const auto& [m, v] : other.terms_) {
      NormalMonomial k = m;
      k.dpower += dshift;
      add(std::move(k), v * c);
    }
  }

  Element scaled(const Coeff& c) const {
    Element r;
    r.add_scaled(*this, c);
    return r;
  }

  void erase(const NormalMonomial& m) { terms_.erase(m); }

  Element& operator+=(const Element& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, c);
    return *this;
  }
  Element& operator-=(const Element& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, -c);
    return *this;
  }
  Element operator-() const {
    Element r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }

  bool operator==(const Element& rhs) const { return terms_ == rhs.terms_; }

  /// Applies f to every coefficient, dropping zeros (used for ring changes).
  template <class F>
  auto map_coefficients(F&& f) const -> Element<decltype(f(std::declval<const Coeff&>()))> {
    Element<decltype(f(std::declval<const Coeff&>()))> r;
    for (const auto& [m, c] : terms_) r.add(m, f(c));
    return r;
  }

 private:
  Terms terms_;
};

}  // namespace qcoord
