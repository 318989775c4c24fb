#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qcoord/cyclotomic.hpp"
#include "qcoord/frobext.hpp"

using namespace qcoord;

namespace {

NormalMonomial exps(std::vector<std::uint16_t> e) { return NormalMonomial(std::move(e), 0); }

NormalMonomial without(const NormalMonomial& top, GenIndex g) {
  NormalMonomial m = top;
  --m.exponents[static_cast<std::size_t>(g.flat(top.n()))];
  return m;
}

// Phi of an ordered word over Z[q, q^-1]: the coefficient of the top key.
// Only words of the same degree as the top key are passed in, so no other
// key can reduce to it.
CycloElem oracle_phi(int n, int ell, const oracle::Word& w) {
  const oracle::Result r = oracle::normalize(n, w);
  const oracle::Key top(static_cast<std::size_t>(n * n), ell - 1);
  std::vector<LaurentPoly::Term> terms;
  if (auto it = r.find(top); it != r.end()) {
    for (auto [e, c] : it->second) terms.emplace_back(e, Integer(c));
  }
  return reduce_mod(LaurentPoly::from_terms(terms), cyclotomic(ell));
}

oracle::Word word_of(const NormalMonomial& m) {
  const int n = m.n();
  return oracle::key_word(n, oracle::Key(m.exponents.begin(), m.exponents.end()));
}

}  // namespace

TEST(Phi, Examples) {
  FrobeniusContext ctx(2, 3);
  EXPECT_EQ(ctx.phi(ctx.monomial(ctx.top())), ctx.algebra().classical().one());
  EXPECT_TRUE(ctx.phi(ctx.engine().one()).is_zero());
  EXPECT_EQ(ctx.phi(ctx.monomial(exps({5, 2, 2, 2}))), ctx.algebra().classical().monomial(exps({1, 0, 0, 0})));
  EXPECT_TRUE(ctx.phi(ctx.monomial(exps({1, 2, 2, 2}))).is_zero());
  EXPECT_THROW(FrobeniusContext(2, 3, Variant::kSLn), UnsupportedError);

  FrobeniusContext gl(2, 3, Variant::kGLn);
  EXPECT_EQ(gl.phi(gl.monomial(gl.top())), gl.algebra().classical().one());
}

TEST(Phi, IsClassicallyLinear) {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> ex(0, 4), small(0, 1);
  FrobeniusContext ctx(2, 3);
  auto& rs = ctx.algebra();
  for (int it = 0; it < 30; ++it) {
    NormalMonomial c(2), m(2);
    for (int f = 0; f < 4; ++f) {
      c.exponents[static_cast<std::size_t>(f)] = static_cast<std::uint16_t>(small(rng));
      m.exponents[static_cast<std::size_t>(f)] = static_cast<std::uint16_t>(ex(rng));
    }
    const ClassicalElement cc = rs.classical().monomial(c);
    const EpsElement e = ctx.monomial(m) + ctx.monomial(ctx.top());
    EXPECT_EQ(ctx.phi(ctx.engine().multiply(rs.frobenius_image(cc), e)), rs.classical().multiply(cc, ctx.phi(e)));
  }
}

TEST(BForm, Examples) {
  FrobeniusContext ctx(2, 3);
  const EpsElement one = ctx.engine().one();
  EXPECT_EQ(ctx.bform(one, ctx.monomial(ctx.top())), ctx.algebra().classical().one());
  EXPECT_TRUE(ctx.bform(one, one).is_zero());
  const auto v = ctx.bform(ctx.engine().generator({1, 1}), ctx.monomial(exps({1, 2, 2, 2})));
  EXPECT_TRUE(as_unit(v));
}

TEST(DualWitness, Examples) {
  FrobeniusContext ctx(2, 3);
  EXPECT_EQ(ctx.dual_witness(NormalMonomial(2)), ctx.top());
  EXPECT_EQ(ctx.dual_witness(ctx.top()), NormalMonomial(2));
  const NormalMonomial t11 = exps({1, 0, 0, 0});
  EXPECT_EQ(ctx.dual_witness(t11), exps({1, 2, 2, 2}));
  EXPECT_TRUE(as_unit(ctx.bform(ctx.monomial(ctx.dual_witness(t11)), ctx.monomial(t11))));
  EXPECT_THROW(ctx.dual_witness(exps({3, 0, 0, 0})), ParameterError);
}

TEST(Nondegenerate, Examples) {
  FrobeniusContext ctx(2, 3);
  const auto top = ctx.check_nondegenerate(ctx.monomial(ctx.top()));
  EXPECT_EQ(top.x, NormalMonomial(2));
  EXPECT_EQ(top.value, ctx.algebra().classical().one());
  EXPECT_TRUE(top.verified);
  const auto one = ctx.check_nondegenerate(ctx.engine().one());
  EXPECT_EQ(one.x, ctx.top());
  EXPECT_TRUE(one.verified);
  EXPECT_THROW(ctx.check_nondegenerate(EpsElement{}), PreconditionError);
}

TEST(Nondegenerate, RandomElementsAgainstExhaustiveSearch) {
  std::mt19937 rng(61);
  FrobeniusContext ctx(2, 3);
  const auto basis = enumerate_basis(2, 3, Variant::kMn);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> co(1, 4), pw(0, 2);
  for (int it = 0; it < 10; ++it) {
    EpsElement a;
    for (int k = 0; k < 3; ++k) {
      const NormalMonomial m = basis[pick(rng)];
      a += ctx.monomial(m).scaled(ctx.algebra().ring().from_laurent(LaurentPoly::monomial(co(rng), pw(rng))));
    }
    const auto w = ctx.check_nondegenerate(a);
    EXPECT_TRUE(w.verified);
    EXPECT_EQ(w.key, std::prev(ctx.algebra().module_expand(a).end())->first);
    // the witness is one of the basis monomials whose pairing with a is a
    // unit multiple of the leading coefficient
    std::size_t hits = 0;
    bool found = false;
    for (const auto& x : basis) {
      const ClassicalElement v = ctx.bform(ctx.monomial(x), a);
      if (v.is_zero()) continue;
      for (int s = 0; s < 3; ++s) {
        for (int sign : {1, -1}) {
          CycloElem u = ctx.algebra().ring().scalar_q_power(s);
          if (sign < 0) u = -u;
          if (v == w.z.scaled(u)) {
            ++hits;
            found = found || x == w.x;
          }
        }
      }
    }
    EXPECT_GT(hits, 0u);
    EXPECT_TRUE(found);
  }
}

TEST(Nondegenerate, Suite) { EXPECT_TRUE(check_nondegeneracy(2, 3).passed()); }

TEST(Nakayama, StatedTwistExamples) {
  FrobeniusContext ctx(2, 3);
  const auto& ring = ctx.algebra().ring();
  const EpsElement t11 = ctx.engine().generator({1, 1});
  const EpsElement t12 = ctx.engine().generator({1, 2});
  const EpsElement t22 = ctx.engine().generator({2, 2});
  EXPECT_EQ(ctx.nakayama(t11), t11.scaled(ring.scalar_q_power(-2)));
  EXPECT_EQ(ctx.nakayama(t12), t12);
  EXPECT_EQ(ctx.nakayama(t22), t22.scaled(ring.scalar_q_power(2)));
  EXPECT_EQ(stated_twist_exponent({1, 1}, 2), -2);
  EXPECT_EQ(derived_twist_exponent({1, 1}, 2), 2);
  EXPECT_EQ(ctx.nakayama_inverse(ctx.nakayama(t11 + t22)), t11 + t22);
}

TEST(Nakayama, TwistsAreAutomorphisms) {
  std::mt19937 rng(67);
  FrobeniusContext ctx(2, 3);
  auto& eng = ctx.engine();
  std::uniform_int_distribution<int> let(0, 3), len(0, 4);
  auto random_element = [&] {
    EpsElement e = eng.one();
    for (int k = len(rng); k > 0; --k) e = eng.multiply(e, eng.generator(GenIndex::from_flat(let(rng), 2)));
    return e + eng.generator(GenIndex::from_flat(let(rng), 2));
  };
  for (int it = 0; it < 50; ++it) {
    const EpsElement x = random_element(), y = random_element();
    EXPECT_EQ(ctx.nakayama(eng.multiply(x, y)), eng.multiply(ctx.nakayama(x), ctx.nakayama(y)));
    EXPECT_EQ(ctx.twist(eng.multiply(x, y), derived_twist_exponent),
              eng.multiply(ctx.twist(x, derived_twist_exponent), ctx.twist(y, derived_twist_exponent)));
  }
}

TEST(Nakayama, LeadingConstantsAgainstOracle) {
  // Phi(m t) and Phi(t m) for m = top / t, over Z[q, q^-1] then mod phi_3
  const int n = 2, ell = 3;
  FrobeniusContext ctx(n, ell);
  const auto& ring = ctx.algebra().ring();
  for (int f = 0; f < 4; ++f) {
    const GenIndex g = GenIndex::from_flat(f, n);
    const NormalMonomial m = without(ctx.top(), g);
    oracle::Word right = word_of(m), left{{g.i, g.j}};
    right.emplace_back(g.i, g.j);
    const oracle::Word wm = word_of(m);
    left.insert(left.end(), wm.begin(), wm.end());
    const CycloElem phi_right = oracle_phi(n, ell, right), phi_left = oracle_phi(n, ell, left);
    EXPECT_EQ(phi_right, ring.scalar_q_power(2 * n - g.i - g.j));
    EXPECT_EQ(phi_left, ring.scalar_q_power(g.i + g.j - 2));
    EXPECT_EQ(ctx.phi(ctx.engine().multiply(ctx.monomial(m), ctx.engine().generator(g))),
              ctx.algebra().classical().scalar(phi_right));
    EXPECT_EQ(ctx.phi(ctx.engine().multiply(ctx.engine().generator(g), ctx.monomial(m))),
              ctx.algebra().classical().scalar(phi_left));
    // Phi(m t) = eps^k Phi(t m) with k the derived twist exponent
    EXPECT_EQ(phi_right, ring.scalar_q_power(derived_twist_exponent(g, n)) * phi_left);
  }
}

TEST(Nakayama, DerivedTwistSatisfiesTheSymmetry) {
  EXPECT_TRUE(check_nakayama(1, 3).passed());
  EXPECT_TRUE(check_nakayama(2, 3, NakayamaTwist::kDerived).passed());
  EXPECT_TRUE(check_nakayama(2, 5, NakayamaTwist::kDerived, 0).passed());
  EXPECT_FALSE(check_nakayama(2, 3, NakayamaTwist::kStated).passed());
}
