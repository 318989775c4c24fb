#include "qcoord/rootspec.hpp"

#include "qcoord/format.hpp"
#include "qcoord/parallel.hpp"

namespace qcoord {

namespace {

void require_supported(Variant variant) {
  if (variant == Variant::kSLn) {
    throw UnsupportedError("the free-module structure is available for M_n and GL_n only");
  }
}

}  // namespace

EpsElement specialize(const QElement& e, int ell) {
  const auto mod = cyclotomic(ell);
  return e.map_coefficients([&](const LaurentPoly& p) { return reduce_mod(p, mod); });
}

RootSpecialization::RootSpecialization(int n, int ell, Variant variant)
    : n_(n),
      ell_(ell),
      variant_((require_supported(variant), variant)),
      quantum_(AlgebraConfig::standard(n, variant), CycloRing(ell)),
      classical_(AlgebraConfig::standard(n, variant), CycloRing(ell, true)) {}

EpsElement RootSpecialization::frobenius_image(const NormalMonomial& c) {
  NormalMonomial m = c;
  for (auto& e : m.exponents) e = static_cast<std::uint16_t>(e * ell_);
  m.dpower = c.dpower * ell_;
  return quantum_.monomial(m);
}

EpsElement RootSpecialization::frobenius_image(const ClassicalElement& c) {
  EpsElement out;
  for (const auto& [m, v] : c) out.add_scaled(frobenius_image(m), v);
  return out;
}

std::pair<NormalMonomial, NormalMonomial> RootSpecialization::split(const NormalMonomial& m) const {
  NormalMonomial key(n_);
  NormalMonomial coeff(n_);
  for (std::size_t k = 0; k < m.exponents.size(); ++k) {
    key.exponents[k] = static_cast<std::uint16_t>(m.exponents[k] % ell_);
    coeff.exponents[k] = static_cast<std::uint16_t>(m.exponents[k] / ell_);
  }
  return {key, coeff};
}

ModuleExpansion RootSpecialization::module_expand(const EpsElement& e) {
  ModuleExpansion out;
  for (const auto& [m, c] : e) {
    // z = ell b + r with 0 <= r < ell; D^(ell b) = Fr(Dbar^b) and D^r is
    // expanded in the M_n part.
    const int z = m.dpower;
    int b = z / ell_;
    if (z % ell_ < 0) --b;
    const int r = z - b * ell_;
    NormalMonomial t = m;
    t.dpower = 0;
    EpsElement part(t, quantum_.ring().one());
    for (int k = 0; k < r; ++k) part = quantum_.multiply_ordered(part, quantum_.determinant_ordered());
    for (const auto& [pm, pc] : part) {
      auto [key, cm] = split(pm);
      cm.dpower = b;
      ClassicalElement coeff = classical_.enforce_basis(ClassicalElement(cm, pc * c));
      auto [it, inserted] = out.try_emplace(key, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

EpsElement RootSpecialization::recombine(const ModuleExpansion& x) {
  EpsElement out;
  for (const auto& [key, coeff] : x) {
    out += quantum_.multiply(quantum_.monomial(key), frobenius_image(coeff));
  }
  return out;
}

ResidueBasis::ResidueBasis(int n, int ell, Variant variant)
    : n_(n), ell_(ell), digits_(static_cast<std::size_t>(n * n), 0) {
  require_supported(variant);
  if (ell < 1 || ell % 2 == 0) throw ParameterError("ell must be odd and positive");
}

std::optional<NormalMonomial> ResidueBasis::next() {
  if (done_) return std::nullopt;
  NormalMonomial out(digits_, 0);
  // odometer, last exponent fastest
  std::size_t k = digits_.size();
  while (k > 0) {
    --k;
    if (++digits_[k] < ell_) break;
    digits_[k] = 0;
    if (k == 0) done_ = true;
  }
  if (digits_.empty()) done_ = true;
  return out;
}

std::size_t ResidueBasis::size() const {
  std::size_t s = 1;
  for (int k = 0; k < n_ * n_; ++k) s *= static_cast<std::size_t>(ell_);
  return s;
}

std::vector<NormalMonomial> enumerate_basis(int n, int ell, Variant variant) {
  ResidueBasis basis(n, ell, variant);
  std::vector<NormalMonomial> out;
  out.reserve(basis.size());
  while (auto m = basis.next()) out.push_back(*m);
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport check_frobenius_central(int n, int ell) {
  CheckReport report;
  report.check = "frobenius";
  report.n = n;
  report.ell = ell;
  const int n2 = n * n;
  std::vector<CheckCase> cases(static_cast<std::size_t>(n2 * n2));
  parallel_for(
      cases.size(), [&] { return EpsEngine(AlgebraConfig::standard(n), CycloRing(ell)); },
      [&](EpsEngine& eng, std::size_t idx) {
        const GenIndex a = GenIndex::from_flat(static_cast<int>(idx) / n2, n);
        const GenIndex b = GenIndex::from_flat(static_cast<int>(idx) % n2, n);
        const EpsElement p = eng.power(eng.generator(a), static_cast<unsigned>(ell));
        const EpsElement r = eng.commutator(p, eng.generator(b));
        const std::string ta = "t[" + std::to_string(a.i) + "," + std::to_string(a.j) + "]";
        const std::string tb = "t[" + std::to_string(b.i) + "," + std::to_string(b.j) + "]";
        cases[idx] = {ta + "^" + std::to_string(ell) + " " + tb + " - " + tb + " " + ta + "^" +
                          std::to_string(ell),
                      format_element(r, eng.order()), r.is_zero()};
      });
  report.cases = std::move(cases);
  return report;
}

std::optional<SignedPower> as_unit(const ClassicalElement& c) {
  if (c.size() != 1) return std::nullopt;
  const auto& [m, v] = *c.begin();
  if (!m.is_identity() || m.dpower != 0) return std::nullopt;
  return v.as_signed_power();
}

}  // namespace qcoord
