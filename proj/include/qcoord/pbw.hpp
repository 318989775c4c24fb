#pragma once

#include "qcoord/config.hpp"
#include "qcoord/report.hpp"

namespace qcoord {

/// Every word of length <= max_length is normalized by insertion and by
/// leftmost- and rightmost-inversion rewriting; a case fails if the three
/// disagree, if some rewrite step does not strictly decrease
/// (weight, inversion count), or if the normal form contains a monomial of
/// weight above the word's. One case per word length.
CheckReport check_confluence(const AlgebraConfig& config, int max_length);

/// Normal forms of every word of length <= max_length specialize at q = 1
/// to the commutative product of the letters. One case per word length.
CheckReport check_specialization_at_one(const AlgebraConfig& config, int max_length);

/// All words of the given length over n^2 letters, in lexicographic order.
std::vector<Word> all_words(int n, int length);

}  // namespace qcoord
