#pragma once

#include <vector>

namespace qcoord {

/// Bijection of {1..n}, stored by images.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// i -> n + 1 - i.
  static Permutation longest(int n);
  /// All of S_n in lexicographic order of the image sequence.
  static std::vector<Permutation> all(int n);

  int n() const { return static_cast<int>(images_.size()); }
  /// sigma(i) for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }
  /// Number of inversions.
  int length() const { return length_; }

  bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }

 private:
  std::vector<int> images_;
  int length_ = 0;
};

}  // namespace qcoord
