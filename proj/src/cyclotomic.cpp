#include "qcoord/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "qcoord/errors.hpp"

namespace qcoord {
namespace {

using Dense = std::vector<Integer>;

Dense multiply_dense(const Dense& a, const Dense& b) {
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Exact quotient by a monic divisor; throws if the remainder is nonzero.
Dense divide_exact(Dense num, const Dense& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("divide_exact: degree");
  Dense quot(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    const Integer c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t k = 0; k < dn; ++k) {
    if (num[k] != 0) throw std::logic_error("divide_exact: nonzero remainder");
  }
  return quot;
}

// Reduces a dense polynomial modulo the monic phi in place; result has
// exactly deg(phi) coefficients.
Dense reduce_dense(Dense p, const Dense& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    const Integer c = p[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) p[k - d + j] -= c * phi[j];
  }
  p.resize(d);
  return p;
}

}  // namespace

std::shared_ptr<const CyclotomicModulus> cyclotomic(int ell) {
  if (ell < 1 || ell % 2 == 0) {
    throw ParameterError("cyclotomic: root order must be odd and positive, got " +
                         std::to_string(ell));
  }
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicModulus>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(ell); it != cache.end()) return it->second;
  }
  Dense num(static_cast<std::size_t>(ell) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(ell)] = 1;
  for (int d = 1; d < ell; ++d) {
    if (ell % d == 0) num = divide_exact(std::move(num), cyclotomic(d)->phi);
  }
  auto m = std::make_shared<CyclotomicModulus>();
  m->ell = ell;
  m->phi = std::move(num);
  std::lock_guard lock(mu);
  return cache.emplace(ell, std::move(m)).first->second;
}

CycloElem::CycloElem(std::shared_ptr<const CyclotomicModulus> modulus)
    : modulus_(std::move(modulus)),
      residue_(static_cast<std::size_t>(modulus_->degree())) {}

CycloElem::CycloElem(std::shared_ptr<const CyclotomicModulus> modulus,
                     std::vector<Integer> residue)
    : modulus_(std::move(modulus)), residue_(std::move(residue)) {
  const auto d = static_cast<std::size_t>(modulus_->degree());
  if (residue_.size() > d) {
    residue_ = reduce_dense(std::move(residue_), modulus_->phi);
  } else {
    residue_.resize(d);
  }
}

void CycloElem::check_same(const CycloElem& rhs) const {
  if (modulus_ != rhs.modulus_ && modulus_->ell != rhs.modulus_->ell) {
    throw ParameterError("CycloElem: mixed root orders " + std::to_string(ell()) +
                         " and " + std::to_string(rhs.ell()));
  }
}

bool CycloElem::is_zero() const {
  for (const auto& c : residue_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElem::is_one() const {
  if (residue_.empty() || residue_[0] != 1) return false;
  for (std::size_t k = 1; k < residue_.size(); ++k) {
    if (residue_[k] != 0) return false;
  }
  return true;
}

CycloElem& CycloElem::operator+=(const CycloElem& rhs) {
  check_same(rhs);
  for (std::size_t k = 0; k < residue_.size(); ++k) residue_[k] += rhs.residue_[k];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& rhs) {
  check_same(rhs);
  for (std::size_t k = 0; k < residue_.size(); ++k) residue_[k] -= rhs.residue_[k];
  return *this;
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& c : r.residue_) c = -c;
  return r;
}

CycloElem& CycloElem::operator*=(const CycloElem& rhs) {
  check_same(rhs);
  residue_ = reduce_dense(multiply_dense(residue_, rhs.residue_), modulus_->phi);
  return *this;
}

bool CycloElem::operator==(const CycloElem& rhs) const {
  return modulus_->ell == rhs.modulus_->ell && residue_ == rhs.residue_;
}

CycloElem CycloElem::pow(unsigned k) const {
  CycloElem result = reduce_mod(LaurentPoly(1), modulus_);
  CycloElem base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::optional<SignedPower> CycloElem::as_signed_power() const {
  for (int k = 0; k < ell(); ++k) {
    const CycloElem p = reduce_mod(LaurentPoly::q_power(k), modulus_);
    if (*this == p) return SignedPower{1, k};
    if (*this == -p) return SignedPower{-1, k};
  }
  return std::nullopt;
}

LaurentPoly CycloElem::to_laurent() const {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t k = 0; k < residue_.size(); ++k) {
    if (residue_[k] != 0) terms.emplace_back(static_cast<int>(k), residue_[k]);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

CycloElem reduce_mod(const LaurentPoly& p,
                     const std::shared_ptr<const CyclotomicModulus>& m) {
  const int ell = m->ell;
  Dense folded(static_cast<std::size_t>(ell));
  for (const auto& [e, c] : p.terms()) {
    const int r = ((e % ell) + ell) % ell;
    folded[static_cast<std::size_t>(r)] += c;
  }
  return CycloElem(m, reduce_dense(std::move(folded), m->phi));
}

}  // namespace qcoord
