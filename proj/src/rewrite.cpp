#include "qcoord/rewrite.hpp"

#include "qcoord/errors.hpp"

namespace qcoord {

std::optional<std::vector<SwapTerm>> swap_adjacent(int n, GenIndex x, GenIndex y) {
  if (!x.in_range(n) || !y.in_range(n)) throw ParameterError("swap_adjacent: index out of range");
  if (x == y) return std::nullopt;
  const Word swapped = Word::from_indices(n, {y, x});
  const LaurentPoly q_minus_qinv = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
  std::vector<SwapTerm> out;
  if (x.i == y.i) {
    // same row: t[i,b] t[i,d] = q^{+-1} t[i,d] t[i,b]
    out.push_back({swapped, LaurentPoly::q_power(x.j < y.j ? 1 : -1)});
  } else if (x.j == y.j) {
    out.push_back({swapped, LaurentPoly::q_power(x.i < y.i ? 1 : -1)});
  } else if ((x.i < y.i) != (x.j < y.j)) {
    // antidiagonal pair commutes
    out.push_back({swapped, LaurentPoly(1)});
  } else if (x.i < y.i) {
    // x = t[i,k], y = t[j,l]
    out.push_back({swapped, LaurentPoly(1)});
    out.push_back({Word::from_indices(n, {{x.i, y.j}, {y.i, x.j}}), q_minus_qinv});
  } else {
    // x = t[j,l], y = t[i,k]
    out.push_back({swapped, LaurentPoly(1)});
    out.push_back({Word::from_indices(n, {{y.i, x.j}, {x.i, y.j}}), -q_minus_qinv});
  }
  return out;
}

}  // namespace qcoord
