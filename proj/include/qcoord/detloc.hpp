#pragma once

#include <optional>

#include "qcoord/engine.hpp"
#include "qcoord/report.hpp"

namespace qcoord {

using QEngine = Engine<LaurentRing>;
using QElement = Element<LaurentPoly>;

/// sum over S_n of (-q)^length(s) t[1,s(1)] ... t[n,s(n)], normalized.
/// In GL this is the single monomial D.
template <CoefficientRing Ring>
typename Engine<Ring>::Elem quantum_determinant(Engine<Ring>& eng) {
  typename Engine<Ring>::Elem d;
  for (const auto& s : Permutation::all(eng.n())) {
    d += eng.normalize(eng.permutation_word(s), eng.minus_q_power(s.length()));
  }
  return d;
}

/// sum over S_n of (-q)^length(s) t[n,s(n)] ... t[1,s(1)], normalized, i.e.
/// the row-reversed expansion with the same signs as quantum_determinant.
/// It does not agree with quantum_determinant for n >= 2; see
/// quantum_determinant_reversed_qinv.
template <CoefficientRing Ring>
typename Engine<Ring>::Elem quantum_determinant_reversed(Engine<Ring>& eng) {
  typename Engine<Ring>::Elem d;
  for (const auto& s : Permutation::all(eng.n())) {
    d += eng.normalize(eng.permutation_word(s, true), eng.minus_q_power(s.length()));
  }
  return d;
}

/// sum over S_n of (-q^-1)^length(s) t[n,s(n)] ... t[1,s(1)], normalized;
/// equals quantum_determinant.
template <CoefficientRing Ring>
typename Engine<Ring>::Elem quantum_determinant_reversed_qinv(Engine<Ring>& eng) {
  typename Engine<Ring>::Elem d;
  for (const auto& s : Permutation::all(eng.n())) {
    d += eng.normalize(eng.permutation_word(s, true), eng.minus_q_power(-s.length()));
  }
  return d;
}

/// One determinant-reduction step: m = unit * t0 * D + (lower terms), D
/// replaced by 1 in SL. nullopt when some diagonal (antidiagonal for the
/// opposite flavor) exponent of m is zero, or for M_n.
template <CoefficientRing Ring>
std::optional<typename Engine<Ring>::Elem> diagonal_reduction(Engine<Ring>& eng,
                                                              const NormalMonomial& m) {
  return eng.reduction_step(m);
}

/// D * t[i,j] - t[i,j] * D for every generator.
CheckReport check_central(const AlgebraConfig& config);

/// The row-reversed determinant expansion (quantum_determinant_reversed)
/// against quantum_determinant.
CheckReport check_reversed_determinant(int n);

/// Determinant identities used by the reductions: the (-q^-1) reversed
/// expansion, and for every reducible monomial up to max_degree in each
/// flavor and variant, that the reduction step re-expands to the monomial.
CheckReport check_identities(int n, int max_degree);

/// Opposite-flavor GL reduction of every ordered monomial of degree at most
/// max_degree whose antidiagonal exponents are all positive. A case passes
/// when the result lies in the opposite basis, re-expands to the input, and
/// every monomial emitted by a reduction step has strictly lower weight
/// than the monomial being reduced. Notes record how many steps violate the
/// weight condition and whether the (antidiagonal degree, weight) measure
/// decreased throughout.
CheckReport check_opposite_reduction(int n, int max_degree);

/// Image under t[i,j] (x) x^z -> D^(-delta(i,1)) t[i,j] D^z of an element
/// of O_q(SL_n) (x) Z_q[x, x^-1]. The tensor is stored as a QElement whose
/// keys are SL basis monomials and whose dpower is the exponent of x. gl
/// must be a GL engine with the same n and order.
QElement sl_gl_image(QEngine& gl, const QElement& tensor);

/// Image of a single word (x) x^z.
QElement sl_gl_image_word(QEngine& gl, const Word& w, int z);

/// Every defining relation of O_q(SL_n) (x) Z_q[x, x^-1] maps to zero. With
/// injectivity set, also checks that images of the SL basis monomials of
/// degree <= 3 times x^z, z in {-1, 0, 1}, are pairwise distinct.
CheckReport check_sl_gl_iso(int n, bool injectivity);

/// Ordered monomials (dpower 0) of total degree at most max_degree.
std::vector<NormalMonomial> monomials_up_to(int n, int max_degree);

}  // namespace qcoord
