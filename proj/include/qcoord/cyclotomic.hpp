#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcoord/integer.hpp"
#include "qcoord/laurent.hpp"

namespace qcoord {

/// The ell-th cyclotomic polynomial phi_ell(q) for odd ell.
struct CyclotomicModulus {
  int ell = 1;
  /// Ascending dense coefficients; monic, size = totient(ell) + 1.
  std::vector<Integer> phi;

  int degree() const { return static_cast<int>(phi.size()) - 1; }
};

/// Computes phi_ell by exact division of q^ell - 1 by phi_d for all proper
/// divisors d of ell. Throws ParameterError unless ell is odd and positive.
std::shared_ptr<const CyclotomicModulus> cyclotomic(int ell);

/// Element of Z_eps = Z[q] / (phi_ell(q)); eps is the class of q and is a
/// primitive ell-th root of unity.
class CycloElem {
 public:
  explicit CycloElem(std::shared_ptr<const CyclotomicModulus> modulus);
  CycloElem(std::shared_ptr<const CyclotomicModulus> modulus,
            std::vector<Integer> residue);

  const std::vector<Integer>& residue() const { return residue_; }
  const std::shared_ptr<const CyclotomicModulus>& modulus() const { return modulus_; }
  int ell() const { return modulus_->ell; }

  bool is_zero() const;
  bool is_one() const;

  CycloElem& operator+=(const CycloElem& rhs);
  CycloElem& operator-=(const CycloElem& rhs);
  CycloElem& operator*=(const CycloElem& rhs);
  CycloElem operator-() const;

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  bool operator==(const CycloElem& rhs) const;

  CycloElem pow(unsigned k) const;

  /// If this equals +-eps^k, returns it with k in [0, ell).
  std::optional<SignedPower> as_signed_power() const;

  /// The residue read back as a polynomial in q of degree < deg(phi_ell).
  LaurentPoly to_laurent() const;
  std::string to_string() const { return to_laurent().to_string(); }

 private:
  void check_same(const CycloElem& rhs) const;
  std::shared_ptr<const CyclotomicModulus> modulus_;
  std::vector<Integer> residue_;
};

/// Canonical residue of p modulo phi_ell. Negative exponents are shifted by
/// multiples of ell first, using eps^ell = 1.
CycloElem reduce_mod(const LaurentPoly& p,
                     const std::shared_ptr<const CyclotomicModulus>& m);

}  // namespace qcoord
