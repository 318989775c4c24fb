#pragma once

#include <optional>
#include <vector>

#include "qcoord/laurent.hpp"
#include "qcoord/monomial.hpp"

namespace qcoord {

/// One summand of a two-letter rewrite.
struct SwapTerm {
  Word word;
  LaurentPoly coeff;
};

/// Rewrites the two-letter word x*y as c * (y*x) [+ d * (a*b)] using the
/// defining relations:
///
///   t[i,j] t[i,k] = q t[i,k] t[i,j]                    (j < k)
///   t[i,k] t[h,k] = q t[h,k] t[i,k]                    (i < h)
///   t[i,l] t[j,k] = t[j,k] t[i,l]                      (i < j, k < l)
///   t[i,k] t[j,l] - t[j,l] t[i,k] = (q - q^-1) t[i,l] t[j,k]
///
/// The identity holds for either orientation of the pair; the engine only
/// applies it when rank(x) > rank(y). Returns nullopt for x == y.
std::optional<std::vector<SwapTerm>> swap_adjacent(int n, GenIndex x, GenIndex y);

}  // namespace qcoord
