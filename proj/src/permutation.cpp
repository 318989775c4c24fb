#include "qcoord/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "qcoord/errors.hpp"

namespace qcoord {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw ParameterError("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (images_[static_cast<std::size_t>(a)] > images_[static_cast<std::size_t>(b)]) ++length_;
    }
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int n) {
  if (n < 1) throw ParameterError("n must be positive");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace qcoord
