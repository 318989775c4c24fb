#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "qcoord/cyclotomic.hpp"
#include "qcoord/detloc.hpp"
#include "qcoord/format.hpp"
#include "qcoord/rootspec.hpp"

using namespace qcoord;

namespace {

const LaurentPoly q = LaurentPoly::q_power(1);

NormalMonomial exps(std::vector<std::uint16_t> e, int dpower = 0) { return NormalMonomial(std::move(e), dpower); }

EpsElement random_element(std::mt19937& rng, RootSpecialization& rs, int max_exp, bool with_d) {
  const int n2 = rs.n() * rs.n();
  std::uniform_int_distribution<int> ex(0, max_exp), co(-2, 2), pw(0, rs.ell() - 1), dp(-2, 2), terms(1, 3);
  EpsElement e;
  for (int k = terms(rng); k > 0; --k) {
    NormalMonomial m(rs.n());
    for (int f = 0; f < n2; ++f) m.exponents[static_cast<std::size_t>(f)] = static_cast<std::uint16_t>(ex(rng));
    if (with_d) m.dpower = dp(rng);
    const CycloElem c = rs.ring().from_laurent(LaurentPoly::monomial(co(rng), pw(rng)));
    e += rs.quantum().monomial(m).scaled(c);
  }
  return e;
}

std::string describe(const ModuleExpansion& x, RootSpecialization& rs) {
  std::string s;
  for (const auto& [k, c] : x) {
    s += format_monomial(k, rs.quantum().order()) + " : " +
         format_element(c, rs.classical().order(), "tbar", "Dbar") + "; ";
  }
  return s;
}

}  // namespace

TEST(Specialize, Examples) {
  const auto m3 = cyclotomic(3);
  const NormalMonomial t11 = exps({1, 0, 0, 0});
  const EpsElement a = specialize(QElement(t11, q), 3);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.find(t11)->to_laurent(), q);
  EXPECT_TRUE(specialize(QElement(exps({0, 1, 0, 0}), LaurentPoly::q_power(3) - 1), 3).is_zero());
  const EpsElement c = specialize(QElement(t11, q - LaurentPoly::q_power(-1)), 3);
  EXPECT_EQ(*c.find(t11), reduce_mod(q - q * q, m3));
  EXPECT_THROW(specialize(QElement(t11, q), 4), ParameterError);
}

TEST(Frobenius, Images) {
  RootSpecialization rs(2, 3, Variant::kMn);
  EXPECT_EQ(rs.frobenius_image(exps({1, 0, 0, 0})), rs.quantum().monomial(exps({3, 0, 0, 0})));
  EXPECT_EQ(rs.frobenius_image(NormalMonomial(2)), rs.quantum().one());
  EXPECT_EQ(rs.frobenius_image(exps({1, 0, 0, 1})), rs.quantum().monomial(exps({3, 0, 0, 3})));
  RootSpecialization gl(2, 3, Variant::kGLn);
  EXPECT_EQ(gl.frobenius_image(exps({0, 0, 0, 0}, -1)), gl.quantum().determinant_power(-3));
  EXPECT_EQ(gl.frobenius_image(exps({0, 0, 0, 0}, 1)),
            gl.quantum().power(quantum_determinant(gl.quantum()), 3));
}

TEST(Frobenius, IsMultiplicative) {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> ex(0, 2), dp(-1, 1);
  for (Variant v : {Variant::kMn, Variant::kGLn}) {
    RootSpecialization rs(2, 3, v);
    for (int it = 0; it < 20; ++it) {
      NormalMonomial a(2), b(2);
      for (int f = 0; f < 4; ++f) {
        a.exponents[static_cast<std::size_t>(f)] = static_cast<std::uint16_t>(ex(rng));
        b.exponents[static_cast<std::size_t>(f)] = static_cast<std::uint16_t>(ex(rng));
      }
      if (v == Variant::kGLn) {
        a.dpower = dp(rng);
        b.dpower = dp(rng);
      }
      const ClassicalElement ca = rs.classical().monomial(a), cb = rs.classical().monomial(b);
      EXPECT_EQ(rs.frobenius_image(rs.classical().multiply(ca, cb)),
                rs.quantum().multiply(rs.frobenius_image(ca), rs.frobenius_image(cb)));
    }
  }
}

TEST(Frobenius, CentralAgainstOracle) {
  // t[i,j]^3 t[h,k] - t[h,k] t[i,j]^3 over Z[q, q^-1] vanishes mod phi_3
  const auto m3 = cyclotomic(3);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const oracle::Gen x{a / 2 + 1, a % 2 + 1}, y{b / 2 + 1, b % 2 + 1};
      oracle::Result r = oracle::normalize(2, {x, x, x, y});
      r = oracle::sum(r, oracle::normalize(2, {y, x, x, x}, {{0, -1}}));
      for (const auto& [k, p] : r) {
        std::vector<LaurentPoly::Term> terms;
        for (auto [e, c] : p) terms.emplace_back(e, Integer(c));
        EXPECT_TRUE(reduce_mod(LaurentPoly::from_terms(terms), m3).is_zero());
      }
    }
  }
}

TEST(Frobenius, CentralSuites) {
  EXPECT_TRUE(check_frobenius_central(1, 3).passed());
  EXPECT_TRUE(check_frobenius_central(2, 1).passed());
  EXPECT_TRUE(check_frobenius_central(2, 3).passed());
  EXPECT_TRUE(check_frobenius_central(2, 5).passed());
  EXPECT_TRUE(check_frobenius_central(3, 3).passed());
  EXPECT_EQ(check_frobenius_central(2, 3).cases.size(), 16u);
}

TEST(ModuleExpand, Examples) {
  RootSpecialization rs(2, 3, Variant::kMn);
  const ModuleExpansion a = rs.module_expand(rs.quantum().monomial(exps({4, 0, 0, 0})));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.begin()->first, exps({1, 0, 0, 0}));
  EXPECT_EQ(a.begin()->second, rs.classical().monomial(exps({1, 0, 0, 0})));

  const NormalMonomial b = exps({2, 0, 1, 2});
  const ModuleExpansion bx = rs.module_expand(rs.quantum().monomial(b));
  ASSERT_EQ(bx.size(), 1u);
  EXPECT_EQ(bx.begin()->first, b);
  EXPECT_EQ(bx.begin()->second, rs.classical().one());

  RootSpecialization gl1(1, 3, Variant::kGLn);
  const ModuleExpansion d = gl1.module_expand(gl1.quantum().determinant_power(-1));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->first, exps({2}));
  EXPECT_EQ(d.begin()->second, gl1.classical().determinant_power(-1));

  RootSpecialization gl2(2, 3, Variant::kGLn);
  const EpsElement dinv = gl2.quantum().determinant_power(-1);
  const ModuleExpansion dx = gl2.module_expand(dinv);
  for (const auto& [k, c] : dx) {
    for (std::uint16_t e : k.exponents) EXPECT_LT(e, 3);
    EXPECT_EQ(k.dpower, 0);
  }
  EXPECT_EQ(gl2.recombine(dx), dinv);
}

TEST(ModuleExpand, RoundTrip) {
  std::mt19937 rng(53);
  RootSpecialization rs(2, 3, Variant::kMn);
  for (int it = 0; it < 200; ++it) {
    const EpsElement e = random_element(rng, rs, 7, false);
    const ModuleExpansion x = rs.module_expand(e);
    for (const auto& [k, c] : x) {
      for (std::uint16_t v : k.exponents) EXPECT_LT(v, 3);
    }
    EXPECT_EQ(rs.recombine(x), e);
  }
  RootSpecialization gl(2, 3, Variant::kGLn);
  for (int it = 0; it < 40; ++it) {
    const EpsElement e = gl.quantum().enforce_basis(random_element(rng, gl, 4, true));
    EXPECT_EQ(gl.recombine(gl.module_expand(e)), e);
  }
}

TEST(ModuleExpand, DistinctMonomialsHaveDistinctExpansions) {
  RootSpecialization rs(2, 3, Variant::kMn);
  std::set<std::string> seen;
  std::size_t count = 0;
  for (int f = 0; f < 7 * 7 * 7 * 7; ++f) {
    const NormalMonomial m = exps({static_cast<std::uint16_t>(f % 7), static_cast<std::uint16_t>(f / 7 % 7),
                                   static_cast<std::uint16_t>(f / 49 % 7), static_cast<std::uint16_t>(f / 343)});
    seen.insert(describe(rs.module_expand(rs.quantum().monomial(m)), rs));
    ++count;
  }
  EXPECT_EQ(seen.size(), count);
}

TEST(Basis, Enumeration) {
  const auto b1 = enumerate_basis(1, 3, Variant::kMn);
  EXPECT_EQ(b1, (std::vector<NormalMonomial>{exps({0}), exps({1}), exps({2})}));
  EXPECT_EQ(enumerate_basis(2, 3, Variant::kMn).size(), 81u);
  EXPECT_EQ(enumerate_basis(2, 3, Variant::kGLn).size(), 81u);
  EXPECT_EQ(enumerate_basis(2, 1, Variant::kMn), std::vector<NormalMonomial>{NormalMonomial(2)});
  EXPECT_THROW(enumerate_basis(2, 3, Variant::kSLn), UnsupportedError);
  EXPECT_THROW(RootSpecialization(2, 3, Variant::kSLn), UnsupportedError);

  ResidueBasis lazy(2, 5, Variant::kMn);
  EXPECT_EQ(lazy.size(), 625u);
  std::size_t k = 0;
  std::optional<NormalMonomial> prev;
  while (auto m = lazy.next()) {
    if (prev) EXPECT_LT(prev->exponents, m->exponents);
    prev = m;
    ++k;
  }
  EXPECT_EQ(k, 625u);
}

TEST(Units, Recognized) {
  RootSpecialization rs(2, 5, Variant::kMn);
  const ClassicalElement u = rs.classical().scalar(-rs.ring().scalar_q_power(7));
  EXPECT_EQ(as_unit(u), (SignedPower{-1, 2}));
  EXPECT_FALSE(as_unit(rs.classical().monomial(exps({1, 0, 0, 0}))));
  EXPECT_FALSE(as_unit(rs.classical().scalar(rs.ring().from_laurent(q + 1 + q * q))));
}
