#pragma once

#include <concepts>
#include <memory>
#include <optional>
#include <string>

#include "qcoord/cyclotomic.hpp"
#include "qcoord/laurent.hpp"

namespace qcoord {

// Coefficient rings for the rewriting engine. A ring supplies scalars and
// the powers of the relation parameter used by the quadratic relations;
// scalar_q_power is the image of q as a scalar, relation_q_power the
// parameter inside the relations. They differ only for the classical ring
// (commuting generators over Z_eps), where the relations use q = 1.

template <class R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& v,
                                   const LaurentPoly& p, int k) {
  typename R::value_type;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.scalar_q_power(k) } -> std::same_as<typename R::value_type>;
  { r.relation_q_power(k) } -> std::same_as<typename R::value_type>;
  { r.from_laurent(p) } -> std::same_as<typename R::value_type>;
  { r.is_zero(v) } -> std::same_as<bool>;
  { r.unit_inverse(v) } -> std::same_as<std::optional<typename R::value_type>>;
  { r.format(v) } -> std::same_as<std::string>;
};

/// Z_q = Z[q, q^-1].
class LaurentRing {
 public:
  using value_type = LaurentPoly;

  value_type zero() const { return {}; }
  value_type one() const { return LaurentPoly(1); }
  value_type scalar_q_power(int k) const { return LaurentPoly::q_power(k); }
  value_type relation_q_power(int k) const { return LaurentPoly::q_power(k); }
  value_type from_laurent(const LaurentPoly& p) const { return p; }
  bool is_zero(const value_type& v) const { return v.is_zero(); }
  std::optional<value_type> unit_inverse(const value_type& v) const {
    if (auto sp = v.as_signed_power()) return LaurentPoly::monomial(sp->sign, -sp->exponent);
    return std::nullopt;
  }
  std::string format(const value_type& v) const { return v.to_string(); }
  std::optional<int> ell() const { return std::nullopt; }
};

/// Z_eps = Z[q] / (phi_ell). With commuting = true the relation parameter
/// is 1 (the classical coordinate ring with Z_eps scalars).
class CycloRing {
 public:
  using value_type = CycloElem;

  explicit CycloRing(int ell, bool commuting = false)
      : modulus_(cyclotomic(ell)), commuting_(commuting) {}

  value_type zero() const { return CycloElem(modulus_); }
  value_type one() const { return reduce_mod(LaurentPoly(1), modulus_); }
  value_type scalar_q_power(int k) const { return reduce_mod(LaurentPoly::q_power(k), modulus_); }
  value_type relation_q_power(int k) const {
    return commuting_ ? one() : scalar_q_power(k);
  }
  value_type from_laurent(const LaurentPoly& p) const { return reduce_mod(p, modulus_); }
  bool is_zero(const value_type& v) const { return v.is_zero(); }
  /// Inverse of +-eps^k; other units of Z_eps are not recognized.
  std::optional<value_type> unit_inverse(const value_type& v) const {
    if (auto sp = v.as_signed_power()) {
      return scalar_q_power(-sp->exponent) * (sp->sign < 0 ? -one() : one());
    }
    return std::nullopt;
  }
  std::string format(const value_type& v) const { return v.to_string(); }

  std::optional<int> ell() const { return modulus_->ell; }
  bool commuting() const { return commuting_; }
  const std::shared_ptr<const CyclotomicModulus>& modulus() const { return modulus_; }
  /// Same scalars, commuting generators.
  CycloRing classical() const { return CycloRing(modulus_->ell, true); }

 private:
  std::shared_ptr<const CyclotomicModulus> modulus_;
  bool commuting_ = false;
};

static_assert(CoefficientRing<LaurentRing>);
static_assert(CoefficientRing<CycloRing>);

}  // namespace qcoord
