#include <gtest/gtest.h>

#include "bvkit/barcobar.hpp"
#include "bvkit/error.hpp"
#include "bvkit/fixtures.hpp"
#include "bvkit/hochschild.hpp"
#include "bvkit/tensor.hpp"
#include "oracles.hpp"
#include "tables.hpp"

using namespace bvkit;
using namespace bvkit::barcobar;
namespace fx = bvkit::fixtures;
namespace hh = bvkit::hochschild;
using hopf::Convention;
using hopf::ModularPair;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

std::vector<std::size_t> dims_of(const std::vector<Subquotient>& h) {
  std::vector<std::size_t> out;
  for (const auto& s : h) out.push_back(s.dim());
  return out;
}

Vec group_element(const hopf::FinAlgebraData& h, std::size_t i) { return h.basis(i); }

}  // namespace

TEST(CobarOperad, AxiomsOnBialgebraFixtures) {
  for (const char* name : {"group_z2", "sweedler_h4", "dual_group_z3", "trivial"}) {
    auto h = fx::builtin(name).data;
    CobarOperad op(h, 4);
    auto rep = operad::check_operad_axioms(op);
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.first_failure();
  }
  auto ext2 = fx::builtin("exterior_x", F2).data;
  EXPECT_TRUE(operad::check_operad_axioms(CobarOperad(ext2, 4)).all_pass());
}

TEST(CobarOperad, FailsWhenCoproductIsNotMultiplicative) {
  // Λ(x) over Q is not a bialgebra, and the diagonal substitution stops being associative.
  CobarOperad op(fx::exterior_x(Q), 3);
  EXPECT_FALSE(operad::check_operad_axioms(op).all_pass());
}

TEST(CobarOperad, StructureElements) {
  auto h = fx::sweedler(Q);
  CobarOperad op(h, 3);
  EXPECT_EQ(op.identity(), h.unit);
  // ∘_1 on O(1) is the multiplication of H
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(op.compose(1, h.basis(a), 1, 1, h.basis(b)), h.basis_product(a, b));
}

TEST(DualBarOperad, AxiomsAndStructureElements) {
  for (const char* name : {"group_z2", "sweedler_h4", "group_s3"}) {
    auto a = fx::builtin(name).data;
    DualBarOperad op(a, std::string(name) == "group_s3" ? 3 : 4);
    auto rep = operad::check_operad_axioms(op);
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.first_failure();
    EXPECT_EQ(op.identity(), a.eps());
    auto dual = hopf::dualize(a);
    for (std::size_t x = 0; x < a.dim; ++x)
      for (std::size_t y = 0; y < a.dim; ++y)
        EXPECT_EQ(op.compose(1, a.basis(x), 1, 1, a.basis(y)), dual.basis_product(x, y)) << name;
  }
}

TEST(DualBarOperad, MultiplicationIsCounitOfProduct) {
  auto a = fx::sweedler(Q);
  DualBarOperad op(a, 2);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) EXPECT_EQ(op.mult()[x * 4 + y], dot(a.eps(), a.basis_product(x, y)));
}

TEST(BarCobar, DifferentialsMatchDenseOracles) {
  for (const char* name : {"exterior_x", "sweedler_h4", "group_z2"}) {
    auto a = fx::builtin(name).data;
    auto bar = dual_bar_complex(a, 4);
    auto cob = cobar_complex(a, 4);
    for (int n = 0; n < 4; ++n) {
      std::size_t dn = ipow(a.dim, n);
      EXPECT_EQ(bar.differential(n), tables::to_mat(Q, oracle::dual_bar_differential(tables::mult(a), a.eps(), n), dn))
          << name << n;
      EXPECT_EQ(cob.differential(n), tables::to_mat(Q, oracle::cobar_differential(tables::comult(a), a.unit, n), dn))
          << name << n;
    }
  }
}

TEST(BarCobar, DerivedBettiNumbers) {
  auto ext_x = fx::exterior_x(Q);
  auto e = ext(ext_x, 3);
  EXPECT_EQ(dims_of(e), (std::vector<std::size_t>{1, 1, 1, 1}));
  auto bar = dual_bar_complex(ext_x, 4);
  std::vector<oracle::Dense> d;
  for (int n = 0; n < 4; ++n) d.push_back(oracle::dual_bar_differential(tables::mult(ext_x), ext_x.eps(), n));
  EXPECT_EQ(oracle::betti({1, 2, 4, 8}, d), (std::vector<std::size_t>{1, 1, 1, 1}));

  auto dual_z2 = fx::builtin("dual_group_z2").data;
  EXPECT_EQ(dims_of(ext(dual_z2, 3)), (std::vector<std::size_t>{1, 0, 0, 0}));
  auto z2 = fx::builtin("group_z2").data;
  EXPECT_EQ(dims_of(cotor(z2, 3)), (std::vector<std::size_t>{1, 0, 0, 0}));
  std::vector<oracle::Dense> dc;
  for (int n = 0; n < 4; ++n) dc.push_back(oracle::cobar_differential(tables::comult(z2), z2.unit, n));
  EXPECT_EQ(oracle::betti({1, 2, 4, 8}, dc), (std::vector<std::size_t>{1, 0, 0, 0}));
}

TEST(DegreeOne, CotorIsPrimitives) {
  for (const Field& f : {Q, F2}) {
    auto c = fx::exterior_x(f);
    auto p = primitives(c);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p[0], c.basis(1));
    auto h1 = cotor(c, 1)[1];
    EXPECT_EQ(h1.dim(), 1u);
    EXPECT_TRUE(h1.is_cycle(p[0]));
    EXPECT_EQ(h1.boundary_basis().size(), 0u);
  }
  // the degree-1 bracket is the commutator in C
  auto c = fx::exterior_x(F2);
  CobarOperad op(c, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      EXPECT_EQ(operad::bracket(op, 1, c.basis(a), 1, c.basis(b)),
                sub(c.basis_product(a, b), c.basis_product(b, a)));
}

TEST(DegreeOne, ExtIsDerivationsToGround) {
  for (const char* name : {"exterior_x", "sweedler_h4", "group_z3", "truncated_x2"}) {
    auto a = fx::builtin(name).data;
    auto der = derivations_to_ground(a);
    auto h1 = ext(a, 1)[1];
    EXPECT_EQ(h1.dim(), der.size()) << name;
    EXPECT_EQ(h1.boundary_basis().size(), 0u) << name;
    for (const auto& f : der) EXPECT_TRUE(h1.is_cycle(f)) << name;
  }
  EXPECT_EQ(derivations_to_ground(fx::exterior_x(Q)).size(), 1u);
}

TEST(DegreeOne, LiftedDerivationsAreHochschildClasses) {
  auto a = fx::exterior_x(F2);
  auto der = derivations_to_ground(a);
  ASSERT_FALSE(der.empty());
  Mat lift1 = lift_matrix(a, 1);
  auto all_der = hh::derivations(a);
  Mat span = Mat::from_columns(F2, 4, all_der);
  auto hh1 = hh::hochschild_complex(a, hh::regular_bimodule(a), 1, hh::Variant::cochain).homology()[1];
  DualBarOperad bar(a, 2);
  hh::EndOperad end(a, 2);
  for (const auto& f : der) {
    Vec F = lift1.apply(f);
    EXPECT_TRUE(solve(span, F).has_value());
    EXPECT_TRUE(hh1.is_cycle(F));
    EXPECT_FALSE(hh1.is_boundary(F));
    for (const auto& g : der)
      EXPECT_EQ(lift1.apply(operad::bracket(bar, 1, f, 1, g)), operad::bracket(end, 1, F, 1, lift1.apply(g)));
  }
}

TEST(Inclusions, RetractionsAndOperadMorphisms) {
  for (const char* name : {"group_z2", "sweedler_h4"}) {
    auto h = fx::builtin(name).data;
    auto c = cotor_inclusion(h, 3);
    EXPECT_TRUE(c.checks.all_pass()) << name << ": " << c.checks.first_failure();
    auto e = ext_inclusion(h, 3);
    EXPECT_TRUE(e.checks.all_pass()) << name << ": " << e.checks.first_failure();
  }
  auto e2 = ext_inclusion(fx::exterior_x(F2), 3);
  EXPECT_TRUE(e2.checks.all_pass()) << e2.checks.first_failure();
  auto q = ext_inclusion(fx::exterior_x(Q), 3);
  EXPECT_TRUE(q.checks.find("proj∘lift = id")->pass);
}

TEST(Duality, GammaPhiSquare) {
  for (const char* name : {"group_z2", "sweedler_h4"}) {
    auto rep = duality_maps(fx::builtin(name).data, 3);
    EXPECT_TRUE(rep.checks.all_pass()) << name << ": " << rep.checks.first_failure();
  }
}

TEST(Duality, GammaOfDiagonalIsDualMultiplication) {
  auto c = fx::sweedler(Q);
  hh::CoEndOperad coend(c, 2);
  hh::EndOperad end(hopf::dualize(c), 2);
  auto maps = duality_maps(c, 2);
  EXPECT_EQ(maps.gamma[2].apply(coend.mult()), end.mult());
}

TEST(ConnesMoscovici, GroupAlgebraCocyclic) {
  auto h = fx::group_algebra(Q, fx::cyclic_group(2));
  for (std::size_t s : {0u, 1u}) {
    ModularPair mp{h.eps(), group_element(h, s), Convention::connes_moscovici};
    auto m = cm_cocyclic(h, mp, 5);
    auto rep = check_cosimplicial(m);
    EXPECT_TRUE(rep.all_pass()) << rep.first_failure();
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(power(m.tau[n], n + 1), Mat::identity(Q, m.dims[n]));
    EXPECT_EQ(m.tau[1], hopf::tau_one(h, mp));
  }
}

TEST(ConnesMoscovici, UnitSigmaGivesStandardCobar) {
  auto h = fx::sweedler(Q);
  ModularPair mp{h.eps(), h.basis(1), Convention::connes_moscovici};
  auto cm = cm_cocyclic(h, mp, 3);
  auto plain = cobar_complex(h, 3);
  EXPECT_NE(cm.coface[2][3], plain.coface[2][3]);
  auto z2 = fx::group_algebra(Q, fx::cyclic_group(2));
  auto cm1 = cm_cocyclic(z2, {z2.eps(), z2.unit, Convention::connes_moscovici}, 3);
  auto plain1 = cobar_complex(z2, 3);
  for (int n = 0; n < 3; ++n) EXPECT_EQ(cm1.coface[n][n + 1], plain1.coface[n][n + 1]);
}

TEST(ConnesMoscovici, SweedlerPairs) {
  auto h = fx::sweedler(Q);
  EXPECT_THROW(cm_cocyclic(h, {h.eps(), h.unit, Convention::connes_moscovici}, 3), CheckFailed);
  auto m = cm_cocyclic(h, {h.eps(), h.basis(1), Convention::connes_moscovici}, 4);
  EXPECT_TRUE(check_cosimplicial(m).all_pass()) << check_cosimplicial(m).first_failure();
}

TEST(KhalkhaliRangipour, CyclicModulesAndPsi) {
  auto z2 = fx::group_algebra(Q, fx::cyclic_group(2));
  for (std::size_t s : {0u, 1u}) {
    ModularPair mp{z2.eps(), z2.basis(s), Convention::khalkhali_rangipour};
    EXPECT_TRUE(check_cosimplicial(kr_cyclic(z2, mp, 4).dual()).all_pass());
    auto rep = psi_duality(z2, mp, 4);
    EXPECT_TRUE(rep.all_pass()) << rep.first_failure();
  }
  auto ext2 = fx::exterior_x(F2);
  auto rep = psi_duality(ext2, {ext2.eps(), ext2.unit, Convention::khalkhali_rangipour}, 4);
  EXPECT_TRUE(rep.all_pass()) << rep.first_failure();
  auto sw = fx::sweedler(Q);
  auto rs = psi_duality(sw, {sw.eps(), sw.basis(1), Convention::khalkhali_rangipour}, 3);
  EXPECT_TRUE(rs.all_pass()) << rs.first_failure();
}

TEST(KhalkhaliRangipour, FailingPairTransfersToDual) {
  auto sw = fx::sweedler(Q);
  auto rep = psi_duality(sw, {sw.eps(), sw.unit, Convention::khalkhali_rangipour}, 3);
  EXPECT_TRUE(rep.find("(δ,σ) in involution for K iff (ev_σ,δ) in involution for K^∨")->pass);
  EXPECT_TRUE(rep.find("tau_1 = t_1^∨")->pass);
  EXPECT_EQ(rep.find("psi: coface identities"), nullptr);
  EXPECT_THROW(kr_cyclic(sw, {sw.eps(), sw.unit, Convention::khalkhali_rangipour}, 3), CheckFailed);
}

TEST(DualBarOperad, CyclicWithGrouplike) {
  auto sw = fx::sweedler(Q);
  DualBarOperad op(sw, sw.basis(1), 4);
  auto rep = operad::check_operad_axioms(op);
  EXPECT_TRUE(rep.all_pass()) << rep.first_failure();
  EXPECT_THROW(DualBarOperad(sw, sw.unit, 3), CheckFailed);
}

TEST(CobarOperad, CyclicWithCharacter) {
  auto z3 = fx::group_algebra(Q, fx::cyclic_group(3));
  CobarOperad op(z3, z3.eps(), 4);
  auto rep = operad::check_operad_axioms(op);
  EXPECT_TRUE(rep.all_pass()) << rep.first_failure();
}

TEST(HopfCyclic, GroupAlgebraReports) {
  auto z3 = fx::group_algebra(Q, fx::cyclic_group(3));
  auto rep = hopf_cyclic(z3, {z3.eps(), z3.unit, Convention::connes_moscovici}, 3);
  EXPECT_TRUE(rep.checks.all_pass()) << rep.checks.first_failure();
  EXPECT_EQ(rep.betti[0], 1u);
  ASSERT_TRUE(rep.bv.has_value());
  EXPECT_EQ(rep.bv->betti, (std::vector<std::size_t>{1, 0, 0, 0}));

  auto g = hopf_cyclic(z3, {z3.eps(), z3.basis(1), Convention::connes_moscovici}, 2);
  EXPECT_FALSE(g.lie.has_value());
  EXPECT_FALSE(g.bracket_note.empty());
  EXPECT_TRUE(g.checks.all_pass()) << g.checks.first_failure();
}

TEST(HopfCyclic, ExteriorBvTableHasVanishingBInDegreeOne) {
  auto a = fx::exterior_x(F2);
  auto rep = hopf_cyclic(a, {a.eps(), a.unit, Convention::connes_moscovici}, 3);
  EXPECT_TRUE(rep.checks.all_pass()) << rep.checks.first_failure();
  ASSERT_TRUE(rep.bv.has_value());
  EXPECT_TRUE(rep.bv->B.at(1).is_zero());
  auto kr = hopf_cyclic(a, {a.eps(), a.unit, Convention::khalkhali_rangipour}, 3);
  EXPECT_TRUE(kr.checks.all_pass()) << kr.checks.first_failure();
}

TEST(HopfCyclic, KhalkhaliRangipourSweedler) {
  auto sw = fx::sweedler(Q);
  auto rep = hopf_cyclic(sw, {sw.eps(), sw.basis(1), Convention::khalkhali_rangipour}, 2);
  EXPECT_TRUE(rep.checks.all_pass()) << rep.checks.first_failure();
  EXPECT_TRUE(rep.lie.has_value());
}

TEST(HopfCyclic, RefusesPairOutsideInvolution) {
  auto sw = fx::sweedler(Q);
  auto rep = hopf_cyclic(sw, {sw.eps(), sw.unit, Convention::connes_moscovici}, 2);
  EXPECT_FALSE(rep.checks.all_pass());
  EXPECT_TRUE(rep.betti.empty());
}
