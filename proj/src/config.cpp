#include "qcoord/config.hpp"

#include "qcoord/errors.hpp"

namespace qcoord {

void AlgebraConfig::validate() const {
  if (n < 1) throw ParameterError("n must be positive");
  if (order.n() != n) throw ConstraintError("generator order built for a different n");
  if (flavor == BasisFlavor::kOpposite) {
    if (order.kind() != OrderKind::kOppositeConstrained) {
      throw ConstraintError("opposite basis flavor requires an opposite-constrained order");
    }
    validate_opposite(order);
  }
}

AlgebraConfig AlgebraConfig::standard(int n, Variant variant) {
  AlgebraConfig c{n, variant, GenOrder::row_major(n), BasisFlavor::kStandard};
  c.validate();
  return c;
}

AlgebraConfig AlgebraConfig::opposite(int n, Variant variant) {
  AlgebraConfig c{n, variant, make_opposite_order(n, GenOrder::row_major(n)),
                  BasisFlavor::kOpposite};
  c.validate();
  return c;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kMn: return "m";
    case Variant::kGLn: return "gl";
    case Variant::kSLn: return "sl";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "m" || s == "M" || s == "mn") return Variant::kMn;
  if (s == "gl" || s == "GL" || s == "gln") return Variant::kGLn;
  if (s == "sl" || s == "SL" || s == "sln") return Variant::kSLn;
  throw ParameterError("unknown variant '" + s + "' (expected m, gl or sl)");
}

}  // namespace qcoord
