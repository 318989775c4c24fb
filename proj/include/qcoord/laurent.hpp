#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcoord/integer.hpp"

namespace qcoord {

/// A signed power of the ring parameter: sign * q^exponent.
struct SignedPower {
  int sign = 1;
  int exponent = 0;
  bool operator==(const SignedPower&) const = default;
};

/// Laurent polynomial in q with integer coefficients, an element of
/// Z[q, q^-1]. Terms are kept sorted by exponent with no zero coefficients,
/// so structural equality is ring equality.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& c, int exponent);
  static LaurentPoly q_power(int exponent) { return monomial(1, exponent); }
  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  int min_exponent() const;
  int max_exponent() const;
  Integer coefficient(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& rhs) const = default;

  LaurentPoly pow(unsigned k) const;

  /// Returns the exponent shift q^k * p, exact.
  LaurentPoly shifted(int k) const;

  /// If this is +-q^k, returns it; the only units of Z[q, q^-1].
  std::optional<SignedPower> as_signed_power() const;

  /// Textual form, e.g. "q^-1 + 2 - q^3"; ascending exponents; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Evaluation at q = 1 (sum of the coefficients).
Integer specialize_at_one(const LaurentPoly& p);

}  // namespace qcoord
