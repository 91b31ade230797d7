#include <gtest/gtest.h>

#include <random>

#include "bvkit/error.hpp"
#include "bvkit/fixtures.hpp"
#include "bvkit/hopf.hpp"
#include "bvkit/tensor.hpp"

using namespace bvkit;
using namespace bvkit::hopf;
namespace fx = bvkit::fixtures;

namespace {

const Field Q = Field::rationals();

std::vector<Vec> basis_vectors(const FinAlgebraData& h) {
  std::vector<Vec> v;
  for (std::size_t i = 0; i < h.dim; ++i) v.push_back(h.basis(i));
  return v;
}

// Hopf fixtures valid over Q
const char* const kHopfFixtures[] = {"group_z2",      "group_z3",      "group_s3", "dual_group_z2",
                                     "dual_group_z3", "dual_group_s3", "sweedler_h4", "trivial"};

}  // namespace

TEST(Axioms, GroupAlgebraZ2PassesAll) {
  auto rep = check_axioms(fx::group_algebra(Q, fx::cyclic_group(2)), Level::hopf);
  EXPECT_TRUE(rep.all_pass()) << rep.first_failure();
  EXPECT_EQ(rep.checks().size(), 12u);
}

TEST(Axioms, SweedlerPassesAll) {
  auto rep = check_axioms(fx::sweedler(Q), Level::hopf);
  EXPECT_TRUE(rep.all_pass()) << rep.first_failure();
}

TEST(Axioms, CorruptedMultiplicationFailsAssociativityWithWitness) {
  auto a = fx::group_algebra(Q, fx::cyclic_group(2));
  a.mult.set(1, 1 * 2 + 0, Q.zero());  // g*e = 0
  auto rep = check_axioms(a, Level::algebra);
  const Check* c = rep.find("associativity");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->pass);
  EXPECT_FALSE(c->witness.empty());
}

TEST(Axioms, MissingTensorsThrow) {
  EXPECT_THROW(check_axioms(fx::truncated_x2(Q), Level::coalgebra), MissingStructure);
}

TEST(Axioms, ExteriorIsBialgebraOnlyInCharacteristicTwo) {
  auto rep = check_axioms(fx::exterior_x(Q), Level::bialgebra);
  const Check* c = rep.find("comultiplication is multiplicative");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->pass);
  EXPECT_EQ(c->witness, "at (x,x)");
  EXPECT_FALSE(check_axioms(fx::exterior_x(Field::prime(3)), Level::bialgebra).all_pass());
  EXPECT_TRUE(check_axioms(fx::exterior_x(Field::prime(2)), Level::hopf).all_pass());
  EXPECT_TRUE(check_axioms(fx::exterior_x(Q), Level::algebra).all_pass());
  EXPECT_TRUE(check_axioms(fx::exterior_x(Q), Level::coalgebra).all_pass());
}

TEST(Dualize, DualsAreHopfAndDoubleDualIsIdentity) {
  for (const char* name : kHopfFixtures) {
    auto h = fx::builtin(name).data;
    auto hd = dualize(h);
    EXPECT_TRUE(check_axioms(hd, Level::hopf).all_pass()) << name;
    auto hdd = dualize(hd);
    EXPECT_EQ(hdd.mult, h.mult) << name;
    EXPECT_EQ(*hdd.comult, *h.comult) << name;
    EXPECT_EQ(*hdd.antipode, *h.antipode) << name;
    EXPECT_EQ(hdd.unit, h.unit);
    EXPECT_EQ(*hdd.counit, *h.counit);
  }
}

TEST(Dualize, GroupZ2DualIsCommutativeCocommutative) {
  auto hd = dualize(fx::group_algebra(Q, fx::cyclic_group(2)));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(hd.basis_product(i, j), hd.basis_product(j, i));
      Vec c = hd.coproduct(hd.basis(i));
      EXPECT_EQ(c[i * 2 + j], c[j * 2 + i]);
    }
}

TEST(Dualize, DualGroupFixtureMatchesDualOfGroupAlgebra) {
  for (auto g : {fx::cyclic_group(2), fx::cyclic_group(3), fx::symmetric_group_s3()}) {
    auto a = dualize(fx::group_algebra(Q, g));
    auto b = fx::dual_group_algebra(Q, g);
    EXPECT_EQ(a.mult, b.mult);
    EXPECT_EQ(*a.comult, *b.comult);
    EXPECT_EQ(*a.antipode, *b.antipode);
  }
}

TEST(Convolution, UnitAssociativityAntipode) {
  std::mt19937_64 rng(11);
  for (const char* name : kHopfFixtures) {
    auto h = fx::builtin(name).data;
    std::size_t d = h.dim;
    auto rnd = [&] {
      Mat m(Q, d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m.set(i, j, random_scalar(Q, rng, 4));
      return m;
    };
    Mat f = rnd(), g = rnd(), k = rnd(), ee = eta_eps(h);
    EXPECT_EQ(convolution(ee, f, h), f) << name;
    EXPECT_EQ(convolution(f, ee, h), f) << name;
    EXPECT_EQ(convolution(convolution(f, g, h), k, h), convolution(f, convolution(g, k, h), h)) << name;
    EXPECT_EQ(convolution(h.S(), Mat::identity(Q, d), h), ee) << name;
    // direct evaluation of (f*g)(x) = sum mu(f(x1), g(x2))
    for (std::size_t c = 0; c < d; ++c) {
      Vec direct = zero_vec(Q, d);
      for (const auto& [idx, coef] : h.delta().column(c))
        axpy(coef, h.product(f.column_dense(idx / d), g.column_dense(idx % d)), direct);
      EXPECT_EQ(convolution(f, g, h).column_dense(c), direct);
    }
  }
}

TEST(GroupLikes, Basics) {
  auto z2 = fx::group_algebra(Q, fx::cyclic_group(2));
  EXPECT_TRUE(is_group_like(z2, z2.unit));
  EXPECT_TRUE(is_group_like(z2, z2.basis(1)));
  EXPECT_TRUE(is_character(z2, z2.eps()));
  auto cands = basis_vectors(z2);
  auto found = find_group_likes(z2, &cands);
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0], z2.basis(0));
  EXPECT_EQ(found[1], z2.basis(1));
  EXPECT_THROW(find_group_likes(z2), InvalidInput);
}

TEST(GroupLikes, ExhaustiveOverF3) {
  Field f3 = Field::prime(3);
  auto z2 = fx::group_algebra(f3, fx::cyclic_group(2));
  auto found = find_group_likes(z2);
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0], z2.basis(1));  // index order: (0,1) before (1,0)
  EXPECT_EQ(found[1], z2.basis(0));
  auto ext = fx::exterior_x(Field::prime(2));
  auto gl = find_group_likes(ext);
  ASSERT_EQ(gl.size(), 1u);
  EXPECT_EQ(gl[0], ext.unit);
  EXPECT_THROW(find_group_likes(z2, nullptr, 4), BudgetExceeded);
}

TEST(Integrals, GroupAlgebraZ2) {
  auto z2 = fx::group_algebra(Q, fx::cyclic_group(2));
  for (Side s : {Side::left, Side::right}) {
    auto ints = integrals(z2, s);
    ASSERT_EQ(ints.size(), 1u);
    EXPECT_EQ(ints[0], (Vec{Q.one(), Q.one()}));
  }
}

TEST(Integrals, Exterior) {
  for (auto a : {fx::truncated_x2(Q), fx::exterior_x(Field::prime(2))}) {
    for (Side s : {Side::left, Side::right}) {
      auto ints = integrals(a, s);
      ASSERT_EQ(ints.size(), 1u);
      EXPECT_EQ(ints[0], a.basis(1));
    }
  }
}

TEST(Integrals, SweedlerLeftDiffersFromRight) {
  auto h = fx::sweedler(Q);
  auto l = integrals(h, Side::left), r = integrals(h, Side::right);
  ASSERT_EQ(l.size(), 1u);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(rank(Mat::from_columns(Q, 4, {l[0], r[0]})), 2u);
  EXPECT_EQ(l[0], (Vec{Q.zero(), Q.zero(), Q.one(), Q.one()}));
  EXPECT_EQ(r[0], (Vec{Q.zero(), Q.zero(), -Q.one(), Q.one()}));
}

TEST(Integrals, AllFixturesHaveOneDimensionalIntegrals) {
  for (const char* name : kHopfFixtures) {
    auto h = fx::builtin(name).data;
    EXPECT_EQ(integrals(h, Side::left).size(), 1u) << name;
    EXPECT_EQ(integrals(h, Side::right).size(), 1u) << name;
  }
}

TEST(Unimodular, Fixtures) {
  EXPECT_TRUE(is_unimodular(fx::builtin("group_s3").data));
  EXPECT_TRUE(is_unimodular(fx::builtin("group_z2").data));
  auto z2 = fx::builtin("group_z2").data;
  EXPECT_EQ(distinguished_grouplike(z2), z2.eps());
  auto h = fx::sweedler(Q);
  EXPECT_FALSE(is_unimodular(h));
  Vec alpha = distinguished_grouplike(h);
  EXPECT_EQ(alpha, (Vec{Q.one(), -Q.one(), Q.zero(), Q.zero()}));
  EXPECT_TRUE(is_character(h, alpha));
}

TEST(Frobenius, GroupZ2DeltaOne) {
  auto z2 = fx::builtin("group_z2").data;
  Vec delta1 = {Q.one(), Q.zero()};
  auto fr = frobenius_from_integral(z2, delta1, Side::left);
  EXPECT_TRUE(fr.symmetric);
  // theta(g) = delta_{g^{-1}}
  for (std::size_t g = 0; g < 2; ++g) EXPECT_EQ(fr.theta.column_dense(g), z2.basis(g));
  EXPECT_EQ(fr.nakayama, Mat::identity(Q, 2));
  EXPECT_TRUE(check_frobenius(fr, z2).all_pass());
}

TEST(Frobenius, GroupZ3ThetaSendsGToDeltaInverse) {
  auto z3 = fx::builtin("group_z3").data;
  auto fr = frobenius_from_integral(z3, z3.basis(0), Side::right);
  EXPECT_EQ(fr.theta.column_dense(1), z3.basis(2));
  EXPECT_TRUE(fr.symmetric);
}

TEST(Frobenius, SweedlerIsFrobeniusNotSymmetric) {
  auto h = fx::sweedler(Q);
  auto lam = integrals(dualize(h), Side::right);
  ASSERT_EQ(lam.size(), 1u);
  auto fr = frobenius_from_integral(h, lam[0], Side::right);
  EXPECT_FALSE(fr.symmetric);
  EXPECT_TRUE(check_frobenius(fr, h).all_pass()) << check_frobenius(fr, h).first_failure();
  EXPECT_THROW(frobenius_from_integral(h, h.eps(), Side::right), CheckFailed);
}

TEST(Frobenius, ExteriorWithTopForm) {
  auto a = fx::truncated_x2(Q);
  auto fr = frobenius_from_form(a, Vec{Q.zero(), Q.one()});
  EXPECT_TRUE(fr.symmetric);
  EXPECT_EQ(fr.nakayama, Mat::identity(Q, 2));
}

TEST(Nakayama, SweedlerRightIntegralIsS2OfRightHit) {
  auto h = fx::sweedler(Q);
  auto lam = integrals(dualize(h), Side::right)[0];
  auto fr = frobenius_from_form(h, lam);
  Vec alpha = distinguished_grouplike(h);
  Mat s2 = h.S() * h.S();
  for (std::size_t b = 0; b < 4; ++b) {
    Vec expected = s2.apply(right_hit(h, h.basis(b), alpha));
    EXPECT_EQ(fr.nakayama.column_dense(b), expected) << h.basis_names[b];
    for (std::size_t a = 0; a < 4; ++a)
      EXPECT_EQ(dot(lam, h.basis_product(a, b)), dot(lam, h.product(expected, h.basis(a))));
  }
}

TEST(Nakayama, UnimodularGivesS2) {
  for (const char* name : kHopfFixtures) {
    auto h = fx::builtin(name).data;
    if (!is_unimodular(h)) continue;
    auto lam = integrals(dualize(h), Side::right)[0];
    auto fr = frobenius_from_form(h, lam);
    EXPECT_EQ(fr.nakayama, h.S() * h.S()) << name;
  }
}

TEST(TwistedAntipode, Cases) {
  auto h = fx::sweedler(Q);
  EXPECT_EQ(twisted_antipode(h, h.eps()), h.S());
  Vec alpha = distinguished_grouplike(h);
  Mat st = twisted_antipode(h, alpha);
  for (std::size_t c = 0; c < 4; ++c) {
    Vec direct = zero_vec(Q, 4);
    for (const auto& [idx, coef] : h.delta().column(c)) axpy(coef * alpha[idx / 4], h.S().column_dense(idx % 4), direct);
    EXPECT_EQ(st.column_dense(c), direct);
  }
  auto z2 = fx::builtin("group_z2").data;
  EXPECT_EQ(twisted_antipode(z2, z2.eps()), Mat::identity(Q, 2));
}

TEST(ModularPair, Involution) {
  for (const char* name : {"group_z2", "group_z3", "group_s3"}) {
    auto h = fx::builtin(name).data;
    ModularPair mp{h.eps(), h.unit, Convention::connes_moscovici};
    EXPECT_TRUE(check_modular_pair_involution(h, mp).all_pass()) << name;
  }
  auto h = fx::sweedler(Q);
  auto fail = check_modular_pair_involution(h, {h.eps(), h.unit, Convention::connes_moscovici});
  EXPECT_FALSE(fail.all_pass());
  EXPECT_EQ(fail.find("tau_1^2 = id")->witness, "at x");
  auto pass = check_modular_pair_involution(h, {h.eps(), h.basis(1), Convention::connes_moscovici});
  EXPECT_TRUE(pass.all_pass()) << pass.first_failure();
}

TEST(ModularPair, DualDataAgree) {
  // (delta, sigma) on K for KR  <=>  (ev_sigma, delta) on the dual for CM
  for (const char* name : kHopfFixtures) {
    auto k = fx::builtin(name).data;
    auto kd = dualize(k);
    std::vector<Vec> cands;
    std::vector<std::size_t> t(k.dim, 0);
    do {
      Vec v;
      for (auto x : t) v.push_back(Q.from_int(static_cast<int>(x) - 1));
      cands.push_back(v);
    } while (next_tuple(t, 3));
    auto chars = find_characters(k, &cands);
    auto gls = find_group_likes(k, &cands);
    EXPECT_FALSE(chars.empty());
    EXPECT_FALSE(gls.empty());
    for (const auto& d : chars)
      for (const auto& s : gls) {
        if (!dot(d, s).is_one()) continue;
        bool kr = check_modular_pair_involution(k, {d, s, Convention::khalkhali_rangipour}).all_pass();
        bool cm = check_modular_pair_involution(kd, {s, d, Convention::connes_moscovici}).all_pass();
        EXPECT_EQ(kr, cm) << name;
      }
  }
}

TEST(Symmetry, TheoremOnEveryFixture) {
  for (const char* name : kHopfFixtures) {
    auto h = fx::builtin(name).data;
    auto an = analyze_symmetry(h);
    EXPECT_TRUE(an.exhaustive) << name;
    EXPECT_EQ(an.symmetric, an.unimodular && an.s2_inner) << name;
    if (an.symmetric) EXPECT_TRUE(an.beta_symmetric_nondegenerate) << name;
  }
  auto sw = analyze_symmetry(fx::sweedler(Q));
  EXPECT_FALSE(sw.symmetric);
  EXPECT_FALSE(sw.unimodular);
  EXPECT_TRUE(sw.s2_inner);
  auto ext = analyze_symmetry(fx::exterior_x(Field::prime(2)));
  EXPECT_TRUE(ext.symmetric && ext.unimodular && ext.s2_inner && ext.beta_symmetric_nondegenerate);
}
