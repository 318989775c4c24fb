#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qcoord/detloc.hpp"
#include "qcoord/engine.hpp"
#include "qcoord/report.hpp"

namespace qcoord {

using EpsEngine = Engine<CycloRing>;
using EpsElement = Element<CycloElem>;
/// Element of the classical coordinate ring over Z_eps: keys are commutative
/// monomials prod tbar^a * Dbar^b (b = 0 outside GL), in Bv form for GL.
using ClassicalElement = Element<CycloElem>;
/// Residue monomial (all exponents in [0, ell), dpower 0) -> classical
/// coefficient.
using ModuleExpansion = std::map<NormalMonomial, ClassicalElement>;

/// Coefficientwise reduction mod phi_ell; keys unchanged.
EpsElement specialize(const QElement& e, int ell);

/// O_eps(G) for G = M_n or GL_n together with the classical ring it is a
/// module over. Owns two engines, so an instance must not be used from
/// several threads at once.
class RootSpecialization {
 public:
  /// Row-major order, standard flavor. SL is rejected (UnsupportedError).
  RootSpecialization(int n, int ell, Variant variant);

  int n() const { return n_; }
  int ell() const { return ell_; }
  Variant variant() const { return variant_; }
  EpsEngine& quantum() { return quantum_; }
  EpsEngine& classical() { return classical_; }
  const CycloRing& ring() const { return quantum_.ring(); }

  /// Fr: tbar^a Dbar^b -> t^(ell a) D^(ell b), in normal form.
  EpsElement frobenius_image(const NormalMonomial& c);
  EpsElement frobenius_image(const ClassicalElement& c);

  /// Splits e over the residue basis: e = sum_key key * Fr(coefficient).
  ModuleExpansion module_expand(const EpsElement& e);
  /// sum_key key * Fr(coefficient), normalized.
  EpsElement recombine(const ModuleExpansion& x);

  /// Residue key and classical monomial of an ordered M_n monomial.
  std::pair<NormalMonomial, NormalMonomial> split(const NormalMonomial& m) const;

 private:
  int n_;
  int ell_;
  Variant variant_;
  EpsEngine quantum_;
  EpsEngine classical_;
};

/// Lazily enumerates the residue monomials prod t^r, 0 <= r < ell, in
/// lexicographic order of the row-major exponent vector. SL is rejected (UnsupportedError).
class ResidueBasis {
 public:
  ResidueBasis(int n, int ell, Variant variant);
  std::optional<NormalMonomial> next();
  std::size_t size() const;

 private:
  int n_;
  int ell_;
  std::vector<std::uint16_t> digits_;
  bool done_ = false;
};

/// All residue monomials in canonical order.
std::vector<NormalMonomial> enumerate_basis(int n, int ell, Variant variant);

/// t[i,j]^ell t[h,k] - t[h,k] t[i,j]^ell over Z_eps for all pairs.
CheckReport check_frobenius_central(int n, int ell);

/// Unit +-eps^k if c is a scalar of that form.
std::optional<SignedPower> as_unit(const ClassicalElement& c);

}  // namespace qcoord
