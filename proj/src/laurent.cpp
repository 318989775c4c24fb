#include "qcoord/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qcoord/errors.hpp"

namespace qcoord {

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) terms_.emplace_back(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw PreconditionError("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw PreconditionError("max_exponent of zero polynomial");
  return terms_.back().first;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Integer s = a->second + b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  return *this += -rhs;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].second == 1) {
    return b.shifted(a.terms_[0].first);
  }
  if (b.terms_.size() == 1 && b.terms_[0].second == 1) {
    return a.shifted(b.terms_[0].first);
  }
  const int lo = a.min_exponent() + b.min_exponent();
  const long span = static_cast<long>(a.max_exponent()) + b.max_exponent() - lo + 1;
  LaurentPoly r;
  if (span <= 4096) {
    std::vector<Integer> dense(static_cast<std::size_t>(span));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
      }
    }
    for (long k = 0; k < span; ++k) {
      if (dense[k] != 0) r.terms_.emplace_back(lo + static_cast<int>(k), std::move(dense[k]));
    }
    return r;
  }
  std::map<int, Integer> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  }
  for (auto& [e, c] : acc) {
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

std::optional<SignedPower> LaurentPoly::as_signed_power() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = terms_[0];
  if (c == 1) return SignedPower{1, e};
  if (c == -1) return SignedPower{-1, e};
  return std::nullopt;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << ' ';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

Integer specialize_at_one(const LaurentPoly& p) {
  Integer s = 0;
  for (const auto& t : p.terms()) s += t.second;
  return s;
}

}  // namespace qcoord
