#include "qcoord/frobext.hpp"

#include <random>

#include "qcoord/format.hpp"
#include "qcoord/parallel.hpp"

namespace qcoord {

namespace {

std::string unit_string(const std::optional<SignedPower>& u) {
  if (!u) return "not a unit";
  std::string s = u->sign < 0 ? "-" : "";
  return s + "eps^" + std::to_string(u->exponent);
}

std::string gen_name(GenIndex g) {
  return "t[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
}

}  // namespace

int stated_twist_exponent(GenIndex g, int n) { return 2 * (g.i + g.j - n - 1); }
int derived_twist_exponent(GenIndex g, int n) { return 2 * (n + 1 - g.i - g.j); }

FrobeniusContext::FrobeniusContext(int n, int ell, Variant variant)
    : alg_(n, ell, variant), top_(n) {
  for (auto& e : top_.exponents) e = static_cast<std::uint16_t>(ell - 1);
}

ClassicalElement FrobeniusContext::phi(const EpsElement& e) {
  if (variant() == Variant::kMn) {
    // only ordered monomials whose exponents are all ell-1 mod ell reach
    // the top key
    ClassicalElement out;
    for (const auto& [m, c] : e) {
      auto [key, cm] = alg_.split(m);
      if (key == top_) out.add(cm, c);
    }
    return out;
  }
  const ModuleExpansion x = alg_.module_expand(e);
  auto it = x.find(top_);
  return it == x.end() ? ClassicalElement{} : it->second;
}

ClassicalElement FrobeniusContext::bform(const EpsElement& x, const EpsElement& y) {
  return phi(alg_.quantum().multiply(x, y));
}

NormalMonomial FrobeniusContext::dual_witness(const NormalMonomial& m) const {
  if (m.dpower != 0 || m.exponents.size() != top_.exponents.size()) {
    throw ParameterError("dual_witness expects a residue monomial of matching size");
  }
  NormalMonomial out(n());
  for (std::size_t k = 0; k < m.exponents.size(); ++k) {
    if (m.exponents[k] >= ell()) throw ParameterError("exponent outside [0, ell)");
    out.exponents[k] = static_cast<std::uint16_t>(ell() - 1 - m.exponents[k]);
  }
  return out;
}

NondegeneracyWitness FrobeniusContext::check_nondegenerate(const EpsElement& a) {
  if (a.is_zero()) throw PreconditionError("check_nondegenerate needs a nonzero element");
  const ModuleExpansion x = alg_.module_expand(a);
  // keys are distinct exponent vectors, so the canonical maximum is the
  // unique key of maximal weight
  const auto best = std::prev(x.end());
  NondegeneracyWitness w;
  w.key = best->first;
  w.z = best->second;
  w.x = dual_witness(w.key);
  const EpsElement xe = monomial(w.x);
  const auto u = as_unit(phi(alg_.quantum().multiply(xe, monomial(w.key))));
  if (!u) return w;
  w.unit = *u;
  w.value = phi(alg_.quantum().multiply(xe, a));
  const CycloElem uc = alg_.ring().scalar_q_power(u->exponent) *
                       (u->sign < 0 ? -alg_.ring().one() : alg_.ring().one());
  w.verified = w.value == w.z.scaled(uc);
  return w;
}

EpsElement FrobeniusContext::twist(const EpsElement& e, const TwistExponent& exponent) const {
  const int nn = n();
  std::vector<int> per(static_cast<std::size_t>(nn * nn));
  for (int f = 0; f < nn * nn; ++f) per[static_cast<std::size_t>(f)] = exponent(GenIndex::from_flat(f, nn), nn);
  EpsElement out;
  for (const auto& [m, c] : e) {
    int s = 0;
    for (std::size_t k = 0; k < per.size(); ++k) s += per[k] * m.exponents[k];
    out.add(m, c * alg_.ring().scalar_q_power(s));
  }
  return out;
}

EpsElement FrobeniusContext::nakayama(const EpsElement& e) const { return twist(e, stated_twist_exponent); }

EpsElement FrobeniusContext::nakayama_inverse(const EpsElement& e) const {
  return twist(e, [](GenIndex g, int n) { return -stated_twist_exponent(g, n); });
}

CheckReport check_nakayama(int n, int ell, NakayamaTwist twist, std::size_t grid_limit) {
  CheckReport report;
  report.check = twist == NakayamaTwist::kStated ? "nakayama" : "nakayama-derived";
  report.n = n;
  report.ell = ell;
  const TwistExponent exponent =
      twist == NakayamaTwist::kStated ? TwistExponent(stated_twist_exponent) : TwistExponent(derived_twist_exponent);
  const std::vector<NormalMonomial> basis = enumerate_basis(n, ell, Variant::kMn);
  const int n2 = n * n;

  // Phi(m t) = Phi(nu(t) m)
  std::vector<CheckCase> gen_cases(static_cast<std::size_t>(n2) * basis.size());
  parallel_for(
      gen_cases.size(), [&] { return FrobeniusContext(n, ell); },
      [&](FrobeniusContext& ctx, std::size_t idx) {
        const GenIndex g = GenIndex::from_flat(static_cast<int>(idx / basis.size()), n);
        const NormalMonomial& m = basis[idx % basis.size()];
        const EpsElement t = ctx.engine().generator(g);
        const EpsElement me = ctx.monomial(m);
        const ClassicalElement lhs = ctx.phi(ctx.engine().multiply(me, t));
        const ClassicalElement rhs = ctx.phi(ctx.engine().multiply(ctx.twist(t, exponent), me));
        const ClassicalElement diff = lhs - rhs;
        gen_cases[idx] = {"Phi(m " + gen_name(g) + ") - Phi(nu(" + gen_name(g) + ") m), m = " +
                              format_monomial(m, ctx.engine().order()),
                          format_classical(diff, n), diff.is_zero()};
      });
  report.cases = std::move(gen_cases);

  // B(x, y) = B(nu(y), x)
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (basis.size() <= grid_limit) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) pairs.emplace_back(a, b);
    }
  } else {
    std::mt19937 rng(20240601u);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int k = 0; k < 500; ++k) pairs.emplace_back(pick(rng), pick(rng));
  }
  std::vector<char> grid_ok(pairs.size(), 1);
  std::vector<std::string> grid_residual(pairs.size());
  parallel_for(
      pairs.size(), [&] { return FrobeniusContext(n, ell); },
      [&](FrobeniusContext& ctx, std::size_t idx) {
        const EpsElement x = ctx.monomial(basis[pairs[idx].first]);
        const EpsElement y = ctx.monomial(basis[pairs[idx].second]);
        const ClassicalElement diff = ctx.bform(x, y) - ctx.bform(ctx.twist(y, exponent), x);
        grid_ok[idx] = diff.is_zero() ? 1 : 0;
        if (!diff.is_zero()) grid_residual[idx] = format_classical(diff, n);
      });
  std::size_t grid_fail = 0;
  {
    FrobeniusContext ctx(n, ell);
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
      if (grid_ok[idx]) continue;
      ++grid_fail;
      if (grid_fail <= 20) {
        report.add("B(x,y) - B(nu(y),x), x = " + format_monomial(basis[pairs[idx].first], ctx.engine().order()) +
                       ", y = " + format_monomial(basis[pairs[idx].second], ctx.engine().order()),
                   grid_residual[idx], false);
      }
    }
  }
  report.add("B(x,y) = B(nu(y),x) on " + std::to_string(pairs.size()) + " basis pairs",
             std::to_string(grid_fail) + " mismatches", grid_fail == 0);

  // engine-derived constants at m = top / t[i,j]
  FrobeniusContext ctx(n, ell);
  for (int f = 0; f < n2; ++f) {
    const GenIndex g = GenIndex::from_flat(f, n);
    NormalMonomial m = ctx.top();
    --m.exponents[static_cast<std::size_t>(f)];
    const EpsElement t = ctx.engine().generator(g);
    const EpsElement me = ctx.monomial(m);
    const auto right = as_unit(ctx.phi(ctx.engine().multiply(me, t)));
    const auto left = as_unit(ctx.phi(ctx.engine().multiply(t, me)));
    std::string derived = "unknown";
    if (right && left && right->sign == left->sign) {
      const int k = ((right->exponent - left->exponent) % ell + ell) % ell;
      derived = "eps^" + std::to_string(k);
    }
    const int stated = ((stated_twist_exponent(g, n) % ell) + ell) % ell;
    report.notes[gen_name(g)] = "Phi(m t) = " + unit_string(right) + ", Phi(t m) = " + unit_string(left) +
                                "; twist from the pairing " + derived + ", stated twist eps^" +
                                std::to_string(stated);
  }
  return report;
}

CheckReport check_nondegeneracy(int n, int ell) {
  CheckReport report;
  report.check = "nondegenerate";
  report.n = n;
  report.ell = ell;
  const std::vector<NormalMonomial> basis = enumerate_basis(n, ell, Variant::kMn);
  std::vector<CheckCase> cases(basis.size());
  parallel_for(
      basis.size(), [&] { return FrobeniusContext(n, ell); },
      [&](FrobeniusContext& ctx, std::size_t idx) {
        const NormalMonomial& m = basis[idx];
        const EpsElement dual = ctx.monomial(ctx.dual_witness(m));
        const auto u = as_unit(ctx.phi(ctx.engine().multiply(dual, ctx.monomial(m))));
        std::size_t nonzero = 0;
        for (const auto& other : basis) {
          if (lex_compare(weight(other), weight(m)) != std::strong_ordering::less) continue;
          if (!ctx.phi(ctx.engine().multiply(dual, ctx.monomial(other))).is_zero()) ++nonzero;
        }
        cases[idx] = {"m = " + format_monomial(m, ctx.engine().order()),
                      "Phi(dual m) = " + unit_string(u) + ", " + std::to_string(nonzero) +
                          " nonzero Phi(dual m') for lighter m'",
                      u.has_value() && nonzero == 0};
      });
  report.cases = std::move(cases);
  return report;
}

}  // namespace qcoord
