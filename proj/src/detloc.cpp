#include "qcoord/detloc.hpp"

#include <algorithm>
#include <set>

#include "qcoord/format.hpp"
#include "qcoord/parallel.hpp"

namespace qcoord {

namespace {

std::string gen_name(GenIndex g) {
  return "t[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
}

void enumerate(int n2, int remaining, int pos, NormalMonomial& cur, std::vector<NormalMonomial>& out) {
  if (pos == n2) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.exponents[static_cast<std::size_t>(pos)] = static_cast<std::uint16_t>(e);
    enumerate(n2, remaining - e, pos + 1, cur, out);
  }
  cur.exponents[static_cast<std::size_t>(pos)] = 0;
}

bool all_positive(const NormalMonomial& m, const std::vector<Letter>& letters) {
  for (Letter l : letters) {
    if (m.exponents[l] == 0) return false;
  }
  return true;
}

// Replaces every D power by the determinant in ordered form (GL, z >= 0)
// or drops it (SL), giving an element of the M_n part.
QElement expand_in_mn(QEngine& eng, const QElement& e) {
  QElement out;
  for (const auto& [m, c] : e) {
    NormalMonomial t = m;
    t.dpower = 0;
    QElement part(t, LaurentPoly(1));
    if (eng.config().variant == Variant::kGLn) {
      if (m.dpower < 0) throw std::logic_error("negative D power in expansion");
      for (int k = 0; k < m.dpower; ++k) part = eng.multiply_ordered(part, eng.determinant_ordered());
    }
    out.add_scaled(part, c);
  }
  return out;
}

}  // namespace

std::vector<NormalMonomial> monomials_up_to(int n, int max_degree) {
  std::vector<NormalMonomial> out;
  NormalMonomial cur(n);
  enumerate(n * n, max_degree, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport check_central(const AlgebraConfig& config) {
  CheckReport report;
  report.check = "central";
  report.n = config.n;
  const int n2 = config.n * config.n;
  std::vector<CheckCase> cases(static_cast<std::size_t>(n2));
  parallel_for(
      cases.size(), [&] { return QEngine(config, LaurentRing{}); },
      [&](QEngine& eng, std::size_t f) {
        const GenIndex g = GenIndex::from_flat(static_cast<int>(f), config.n);
        const QElement d = quantum_determinant(eng);
        const QElement t = eng.generator(g);
        const QElement r = eng.commutator(d, t);
        cases[f] = {"D_q " + gen_name(g) + " - " + gen_name(g) + " D_q",
                    format_element(r, eng.order()), r.is_zero()};
      });
  report.cases = std::move(cases);
  return report;
}

CheckReport check_reversed_determinant(int n) {
  CheckReport report;
  report.check = "reversed-determinant";
  report.n = n;
  QEngine eng(AlgebraConfig::standard(n), LaurentRing{});
  const QElement d = quantum_determinant(eng);
  const QElement r = quantum_determinant_reversed(eng);
  const QElement diff = r - d;
  report.add("sum (-q)^l(s) t[n,s(n)]...t[1,s(1)] - D_q", format_element(diff, eng.order()),
             diff.is_zero());
  return report;
}

CheckReport check_identities(int n, int max_degree) {
  CheckReport report;
  report.check = "identities";
  report.n = n;
  {
    QEngine eng(AlgebraConfig::standard(n), LaurentRing{});
    const QElement diff = quantum_determinant_reversed_qinv(eng) - quantum_determinant(eng);
    report.add("sum (-q^-1)^l(s) t[n,s(n)]...t[1,s(1)] - D_q", format_element(diff, eng.order()),
               diff.is_zero());
  }
  const std::vector<NormalMonomial> mons = monomials_up_to(n, max_degree);
  for (BasisFlavor flavor : {BasisFlavor::kStandard, BasisFlavor::kOpposite}) {
    const AlgebraConfig gl = flavor == BasisFlavor::kStandard
                                 ? AlgebraConfig::standard(n, Variant::kGLn)
                                 : AlgebraConfig::opposite(n, Variant::kGLn);
    QEngine eng(gl, LaurentRing{});
    QEngine sl(
        [&] {
          AlgebraConfig c = gl;
          c.variant = Variant::kSLn;
          return c;
        }(),
        LaurentRing{});
    const std::string tag = flavor == BasisFlavor::kStandard ? "standard " : "opposite ";
    for (const auto& m : mons) {
      if (!all_positive(m, eng.constrained_letters())) continue;
      const auto step = diagonal_reduction(eng, m);
      const QElement back = expand_in_mn(eng, *step);
      const QElement diff = back - QElement(m, LaurentPoly(1));
      report.add(tag + "GL step " + format_monomial(m, eng.order()), format_element(diff, eng.order()),
                 diff.is_zero());

      // The SL step is the GL step with D set to 1.
      const auto sl_step = diagonal_reduction(sl, m);
      QElement expected;
      for (const auto& [k, c] : *step) {
        NormalMonomial key = k;
        key.dpower = 0;
        expected.add(key, c);
      }
      const QElement sl_diff = *sl_step - expected;
      report.add(tag + "SL step " + format_monomial(m, eng.order()),
                 format_element(sl_diff, eng.order()), sl_diff.is_zero());

      // Full GL reduction lies in the basis and re-expands to m.
      const QElement full = eng.monomial(m);
      bool in_basis = true;
      for (const auto& [k, c] : full) in_basis = in_basis && eng.satisfies_basis(k);
      bool nonneg = true;
      for (const auto& [k, c] : full) nonneg = nonneg && k.dpower >= 0;
      QElement full_diff = nonneg ? expand_in_mn(eng, full) - QElement(m, LaurentPoly(1)) : full;
      report.add(tag + "GL normal form " + format_monomial(m, eng.order()),
                 in_basis ? format_element(full_diff, eng.order()) : "not in basis",
                 in_basis && full_diff.is_zero());
    }
  }
  {
    // B^ and Bv forms describe the same elements.
    QEngine eng(AlgebraConfig::standard(n, Variant::kGLn), LaurentRing{});
    std::size_t failures = 0;
    for (const auto& m : mons) {
      for (int z : {-2, -1, 0, 1, 2}) {
        NormalMonomial k = m;
        k.dpower = z;
        const QElement v = eng.monomial(k);
        const QElement w = eng.to_wedge_form(v);
        bool ok = true;
        for (const auto& [key, c] : w) ok = ok && eng.in_wedge_basis(key);
        const QElement back = eng.enforce_basis(w);
        ok = ok && back == v;
        if (!ok) {
          ++failures;
          report.add("wedge/vee " + format_monomial(k, eng.order()),
                     format_element(back - v, eng.order()), false);
        }
      }
    }
    report.add("wedge/vee round trip up to degree " + std::to_string(max_degree),
               std::to_string(failures) + " mismatches", failures == 0);
  }
  return report;
}

CheckReport check_opposite_reduction(int n, int max_degree) {
  CheckReport report;
  report.check = "opposite-reduction";
  report.n = n;
  QEngine eng(AlgebraConfig::opposite(n, Variant::kGLn), LaurentRing{});
  std::size_t steps = 0;
  std::size_t weight_violations = 0;
  std::size_t measure_violations = 0;
  std::string first_violation;
  for (const auto& m : monomials_up_to(n, max_degree)) {
    if (!all_positive(m, eng.constrained_letters())) continue;
    bool weight_ok = true;
    // Worklist over monomials still violating the basis constraint.
    std::set<NormalMonomial> pending{m};
    std::set<NormalMonomial> seen;
    while (!pending.empty()) {
      const NormalMonomial cur = *pending.begin();
      pending.erase(pending.begin());
      if (!seen.insert(cur).second) continue;
      const auto step = diagonal_reduction(eng, cur);
      if (!step) continue;
      ++steps;
      const Weight wc = weight(cur);
      const auto mc = eng.reduction_measure(cur);
      for (const auto& [k, c] : *step) {
        if (lex_compare(weight(k), wc) != std::strong_ordering::less) {
          weight_ok = false;
          ++weight_violations;
          if (first_violation.empty()) {
            first_violation = format_monomial(cur, eng.order()) + " -> " +
                              format_monomial(k, eng.order()) + " (coefficient " + c.to_string() + ")";
          }
        }
        if (!(eng.reduction_measure(k) < mc)) ++measure_violations;
        NormalMonomial next = k;
        next.dpower = 0;
        if (!eng.satisfies_basis(next)) pending.insert(next);
      }
    }
    const QElement full = eng.monomial(m);
    bool in_basis = true;
    for (const auto& [k, c] : full) in_basis = in_basis && eng.satisfies_basis(k);
    const QElement diff = expand_in_mn(eng, full) - QElement(m, LaurentPoly(1));
    std::string residual = format_element(diff, eng.order());
    if (!in_basis) residual = "not in basis";
    if (!weight_ok) residual += ", but a reduction step does not lower the weight";
    report.add(format_monomial(m, eng.order()), residual, in_basis && diff.is_zero() && weight_ok);
  }
  report.notes["reduction_steps"] = steps;
  report.notes["weight_increasing_emissions"] = weight_violations;
  report.notes["measure_violations"] = measure_violations;
  if (!first_violation.empty()) report.notes["first_weight_violation"] = first_violation;
  return report;
}

QElement sl_gl_image_word(QEngine& gl, const Word& w, int z) {
  int first_row = 0;
  for (Letter l : w.letters) first_row += GenIndex::from_flat(l, gl.n()).i == 1 ? 1 : 0;
  return gl.normalize(w, LaurentPoly(1), z - first_row);
}

QElement sl_gl_image(QEngine& gl, const QElement& tensor) {
  QElement out;
  for (const auto& [m, c] : tensor) {
    NormalMonomial t = m;
    t.dpower = 0;
    out.add_scaled(sl_gl_image_word(gl, to_word(t, gl.order()), m.dpower), c);
  }
  return out;
}

CheckReport check_sl_gl_iso(int n, bool injectivity) {
  CheckReport report;
  report.check = "iso";
  report.n = n;
  QEngine gl(AlgebraConfig::standard(n, Variant::kGLn), LaurentRing{});
  const int n2 = n * n;
  // Quadratic relations x y - (rewrite of x y), one per unordered pair.
  for (int x = 0; x < n2; ++x) {
    for (int y = 0; y < n2; ++y) {
      if (gl.order().rank(static_cast<Letter>(x)) <= gl.order().rank(static_cast<Letter>(y))) continue;
      const GenIndex gx = GenIndex::from_flat(x, n);
      const GenIndex gy = GenIndex::from_flat(y, n);
      const auto terms = swap_adjacent(n, gx, gy);
      QElement image = sl_gl_image_word(gl, Word::from_indices(n, {gx, gy}), 0);
      for (const auto& t : *terms) image.add_scaled(sl_gl_image_word(gl, t.word, 0), -t.coeff);
      report.add("relation " + gen_name(gx) + " " + gen_name(gy), format_element(image, gl.order()),
                 image.is_zero());
    }
  }
  // D_q - 1 (x) 1
  {
    QElement image = -gl.one();
    for (const auto& s : Permutation::all(n)) {
      image.add_scaled(sl_gl_image_word(gl, gl.permutation_word(s), 0), gl.minus_q_power(s.length()));
    }
    report.add("D_q - 1", format_element(image, gl.order()), image.is_zero());
  }
  // x is central and invertible
  {
    const QElement x = sl_gl_image_word(gl, Word{}, 1);
    const QElement xinv = sl_gl_image_word(gl, Word{}, -1);
    const QElement r = gl.multiply(x, xinv) - gl.one();
    report.add("x x^-1 - 1", format_element(r, gl.order()), r.is_zero());
    for (int f = 0; f < n2; ++f) {
      const GenIndex g = GenIndex::from_flat(f, n);
      const QElement t = sl_gl_image_word(gl, Word::from_indices(n, {g}), 0);
      const QElement c = gl.commutator(x, t);
      report.add("x " + gen_name(g) + " - " + gen_name(g) + " x", format_element(c, gl.order()),
                 c.is_zero());
    }
  }
  if (injectivity) {
    QEngine sl(AlgebraConfig::standard(n, Variant::kSLn), LaurentRing{});
    std::set<std::string> images;
    std::size_t count = 0;
    bool distinct = true;
    for (const auto& m : monomials_up_to(n, 3)) {
      if (!sl.satisfies_basis(m)) continue;
      for (int z : {-1, 0, 1}) {
        NormalMonomial k = m;
        k.dpower = z;
        const QElement image = sl_gl_image(gl, QElement(k, LaurentPoly(1)));
        ++count;
        distinct = images.insert(format_element(image, gl.order())).second && distinct;
      }
    }
    report.add("images of " + std::to_string(count) + " SL basis monomials (degree <= 3) x x^z pairwise distinct",
               distinct ? "0" : "collision", distinct);
  }
  return report;
}

}  // namespace qcoord
