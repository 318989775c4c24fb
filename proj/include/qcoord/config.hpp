#pragma once

#include <string>

#include "qcoord/monomial.hpp"

namespace qcoord {

enum class Variant { kMn, kGLn, kSLn };

/// Which determinant-reduction basis the GL/SL normal forms use: minimal
/// diagonal exponent zero (standard) or minimal antidiagonal exponent zero
/// (opposite).
enum class BasisFlavor { kStandard, kOpposite };

struct AlgebraConfig {
  int n = 2;
  Variant variant = Variant::kMn;
  GenOrder order = GenOrder::row_major(2);
  BasisFlavor flavor = BasisFlavor::kStandard;

  /// Throws ConstraintError/ParameterError if the fields are inconsistent.
  void validate() const;

  static AlgebraConfig standard(int n, Variant variant = Variant::kMn);
  /// Opposite flavor with the row-major secondary order inside each block.
  static AlgebraConfig opposite(int n, Variant variant);
};

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

}  // namespace qcoord
