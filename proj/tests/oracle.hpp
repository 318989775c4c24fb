// Small, deliberately naive reference implementations used as oracles.
// Nothing here calls into the library's rewriting code.
#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "qcoord/element.hpp"
#include "qcoord/laurent.hpp"

namespace oracle {

// Laurent polynomial: exponent -> coefficient.
using Poly = std::map<int, long long>;

inline void add_to(Poly& p, int e, long long c) {
  if ((p[e] += c) == 0) p.erase(e);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) add_to(r, ea + eb, ca * cb);
  return r;
}

using Gen = std::pair<int, int>;
using Word = std::vector<Gen>;
// Ordered monomial as a row-major exponent vector.
using Key = std::vector<int>;
using Result = std::map<Key, Poly>;

inline void accumulate(Result& r, const Key& k, const Poly& p) {
  Poly& slot = r[k];
  for (auto [e, c] : p) add_to(slot, e, c);
  if (slot.empty()) r.erase(k);
}

// Normal form in the row-major order by straightforward recursive
// rewriting of the leftmost adjacent inversion. Relations, written out:
//   t[i,j] t[i,k] = q t[i,k] t[i,j]          (j < k)
//   t[i,k] t[h,k] = q t[h,k] t[i,k]          (i < h)
//   t[i,l] t[j,k] = t[j,k] t[i,l]            (i < j, k < l)
//   t[i,k] t[j,l] - t[j,l] t[i,k] = (q - q^-1) t[i,l] t[j,k]   (i < j, k < l)
inline void normalize_into(int n, const Word& w, const Poly& coeff, Result& out) {
  auto before = [n](Gen a, Gen b) { return (a.first - 1) * n + a.second < (b.first - 1) * n + b.second; };
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const Gen x = w[p];
    const Gen y = w[p + 1];
    if (x == y || before(x, y)) continue;
    // x is after y in the order: rewrite x y
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    if (x.first == y.first) {
      // same row, y.second < x.second: t[i,k] t[i,j] = q^-1 t[i,j] t[i,k]
      normalize_into(n, swapped, mul(coeff, {{-1, 1}}), out);
    } else if (x.second == y.second) {
      normalize_into(n, swapped, mul(coeff, {{-1, 1}}), out);
    } else if (x.second < y.second) {
      // x = t[j,k], y = t[i,l] with i < j, k < l: commute
      normalize_into(n, swapped, coeff, out);
    } else {
      // x = t[j,l], y = t[i,k]: t[j,l] t[i,k] = t[i,k] t[j,l] - (q - q^-1) t[i,l] t[j,k]
      normalize_into(n, swapped, coeff, out);
      Word corr = w;
      corr[p] = {y.first, x.second};
      corr[p + 1] = {x.first, y.second};
      normalize_into(n, corr, mul(coeff, {{1, -1}, {-1, 1}}), out);
    }
    return;
  }
  Key k(static_cast<std::size_t>(n * n), 0);
  for (auto [i, j] : w) ++k[static_cast<std::size_t>((i - 1) * n + (j - 1))];
  accumulate(out, k, coeff);
}

inline Result normalize(int n, const Word& w, const Poly& coeff = {{0, 1}}) {
  Result r;
  normalize_into(n, w, coeff, r);
  return r;
}

inline Poly from_laurent(const qcoord::LaurentPoly& p) {
  Poly r;
  for (const auto& [e, c] : p.terms()) r[e] = static_cast<long long>(c);
  return r;
}

// Library element (dpower 0) in oracle form.
inline Result from_element(const qcoord::Element<qcoord::LaurentPoly>& e) {
  Result r;
  for (const auto& [m, c] : e) {
    Key k(m.exponents.begin(), m.exponents.end());
    r[k] = from_laurent(c);
  }
  return r;
}

// Row-major word of an ordered monomial.
inline Word key_word(int n, const Key& k) {
  Word w;
  for (int f = 0; f < n * n; ++f)
    for (int e = 0; e < k[static_cast<std::size_t>(f)]; ++e) w.emplace_back(f / n + 1, f % n + 1);
  return w;
}

inline Result product(int n, const Result& a, const Result& b) {
  Result r;
  for (const auto& [ka, pa] : a) {
    for (const auto& [kb, pb] : b) {
      Word w = key_word(n, ka);
      const Word wb = key_word(n, kb);
      w.insert(w.end(), wb.begin(), wb.end());
      normalize_into(n, w, mul(pa, pb), r);
    }
  }
  return r;
}

inline Result sum(Result a, const Result& b) {
  for (const auto& [k, p] : b) accumulate(a, k, p);
  return a;
}

// Inversion count of a permutation given by images.
inline int inversions(const std::vector<int>& s) {
  int c = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) c += s[a] > s[b] ? 1 : 0;
  return c;
}

// Dense integer polynomial helpers (ascending coefficients).
using Dense = std::vector<long long>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact long division by a monic divisor; returns the quotient and asserts
// (via the remainder output) divisibility.
inline Dense dense_div(Dense num, const Dense& den, Dense* remainder = nullptr) {
  Dense quo(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, 0);
  const long d = static_cast<long>(den.size()) - 1;
  for (long k = static_cast<long>(num.size()) - 1; k >= d; --k) {
    const long long c = num[static_cast<std::size_t>(k)];
    quo[static_cast<std::size_t>(k - d)] = c;
    for (long j = 0; j <= d; ++j) num[static_cast<std::size_t>(k - d + j)] -= c * den[static_cast<std::size_t>(j)];
  }
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  if (remainder) *remainder = num;
  return quo;
}


// sum over S_n of sign^length(s) * word(s), where sign is -q^base and the
// rows run 1..n (or n..1 when reversed).
inline Result determinant(int n, int base = 1, bool reversed = false) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i + 1;
  Result r;
  do {
    const int len = inversions(s);
    Word w;
    for (int i = 1; i <= n; ++i) w.emplace_back(i, s[static_cast<std::size_t>(i - 1)]);
    if (reversed) std::reverse(w.begin(), w.end());
    normalize_into(n, w, {{base * len, len % 2 == 0 ? 1 : -1}}, r);
  } while (std::next_permutation(s.begin(), s.end()));
  return r;
}

}  // namespace oracle
