#pragma once

#include <functional>
#include <optional>

#include "qcoord/report.hpp"
#include "qcoord/rootspec.hpp"

namespace qcoord {

/// Exponent k in nu(t[i,j]) = eps^k t[i,j].
using TwistExponent = std::function<int(GenIndex, int n)>;

/// 2 (i + j - n - 1): the twist stated for the Nakayama automorphism.
int stated_twist_exponent(GenIndex g, int n);
/// 2 (n + 1 - i - j): the twist the pairing actually satisfies with the
/// row-major functional (the inverse of the stated one).
int derived_twist_exponent(GenIndex g, int n);

struct NondegeneracyWitness {
  NormalMonomial key;       // basis monomial of maximal weight in a
  NormalMonomial x;         // dual_witness(key)
  SignedPower unit;         // Phi(x key) = +-eps^k
  ClassicalElement z;       // coefficient of key in a
  ClassicalElement value;   // Phi(x a)
  bool verified = false;    // value == unit * z
};

/// The pairing Phi / B on O_eps(G) over O(G), G = M_n or GL_n, with the
/// row-major order. Not thread-safe (owns engines).
class FrobeniusContext {
 public:
  FrobeniusContext(int n, int ell, Variant variant = Variant::kMn);

  int n() const { return alg_.n(); }
  int ell() const { return alg_.ell(); }
  Variant variant() const { return alg_.variant(); }
  RootSpecialization& algebra() { return alg_; }
  EpsEngine& engine() { return alg_.quantum(); }

  /// prod t[i,j]^(ell-1).
  const NormalMonomial& top() const { return top_; }

  /// Coefficient of the top key in the module expansion.
  ClassicalElement phi(const EpsElement& e);
  /// Phi(x y).
  ClassicalElement bform(const EpsElement& x, const EpsElement& y);
  /// Exponents ell - 1 - N. Throws ParameterError outside [0, ell).
  NormalMonomial dual_witness(const NormalMonomial& m) const;
  /// Throws PreconditionError for a = 0.
  NondegeneracyWitness check_nondegenerate(const EpsElement& a);

  /// nu(t[i,j]) = eps^(2(i+j-n-1)) t[i,j], extended multiplicatively.
  EpsElement nakayama(const EpsElement& e) const;
  EpsElement nakayama_inverse(const EpsElement& e) const;
  /// Rescales every monomial by eps^(sum exponent(g) N_g).
  EpsElement twist(const EpsElement& e, const TwistExponent& exponent) const;

  EpsElement monomial(const NormalMonomial& m) { return alg_.quantum().monomial(m); }

 private:
  RootSpecialization alg_;
  NormalMonomial top_;
};

/// Which twist check_nakayama tests.
enum class NakayamaTwist { kStated, kDerived };

/// Phi(m t) = Phi(nu(t) m) for every generator t and basis monomial m,
/// then B(x, y) = B(nu(y), x) on basis pairs: all pairs when the basis has
/// at most grid_limit elements, otherwise a fixed sample of 500 pairs.
/// Notes carry the engine-derived constants for m = top / t[i,j].
CheckReport check_nakayama(int n, int ell, NakayamaTwist twist = NakayamaTwist::kStated,
                           std::size_t grid_limit = 81);

/// For every basis monomial m: Phi(dual(m) m) is a unit and
/// Phi(dual(m) m') = 0 for every basis monomial m' of smaller weight.
CheckReport check_nondegeneracy(int n, int ell);

}  // namespace qcoord
