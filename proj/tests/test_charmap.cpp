#include <gtest/gtest.h>

#include "bvkit/barcobar.hpp"
#include "bvkit/charmap.hpp"
#include "bvkit/error.hpp"
#include "bvkit/fixtures.hpp"
#include "bvkit/hochschild.hpp"
#include "bvkit/tensor.hpp"

using namespace bvkit;
using namespace bvkit::charmap;
namespace fx = bvkit::fixtures;
namespace hh = bvkit::hochschild;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

hopf::FinAlgebraData z2() { return fx::group_algebra(Q, fx::cyclic_group(2)); }

}  // namespace

TEST(Actions, StandardActionsAreValid) {
  for (const char* name : {"group_z2", "sweedler_h4", "dual_group_z3"}) {
    auto h = fx::builtin(name).data;
    EXPECT_TRUE(check_action(h, h, regular_coaction(h)).all_pass()) << name;
    EXPECT_TRUE(check_action(h, h, adjoint_action(h)).all_pass()) << name;
    EXPECT_TRUE(check_action(h, h, trivial_coaction(h, h)).all_pass()) << name;
    auto ext = fx::exterior_x(Q);
    EXPECT_TRUE(check_action(h, ext, trivial_action(h, ext)).all_pass()) << name;
    auto dual = hopf::dualize(h);
    auto rep = check_action(dual, h, coaction_to_action(h, h, regular_coaction(h)));
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.first_failure();
  }
}

TEST(Actions, CorruptedActionIsDetected) {
  auto h = fx::sweedler(Q);
  auto act = adjoint_action(h);
  act.map.set(0, 2 * 4 + 0, Q.one());  // x·1 = 1
  auto rep = check_action(h, h, act);
  EXPECT_FALSE(rep.all_pass());
  EXPECT_FALSE(rep.find("h·1 = ε(h)1")->pass);
  EXPECT_EQ(rep.find("h·1 = ε(h)1")->witness, "x");

  auto co = regular_coaction(h);
  co.map.set(1 * 4 + 1, 1, Q.from_int(2));
  EXPECT_FALSE(check_action(h, h, co).all_pass());
}

TEST(Actions, LeftMultiplicationIsNotAModuleAlgebra) {
  auto h = z2();
  ActionData left{ActionKind::module, h.mult};
  auto rep = check_action(h, h, left);
  EXPECT_TRUE(rep.find("(hk)·a = h·(k·a)")->pass);
  EXPECT_FALSE(rep.find("h·(ab) = (h^{(1)}·a)(h^{(2)}·b)")->pass);
}

TEST(PhiModule, StructureElements) {
  auto h = z2();
  auto dual = hopf::dualize(h);
  auto act = coaction_to_action(h, h, regular_coaction(h));
  auto phi = phi_module(dual, h, act, 2);
  hh::EndOperad end(h, 2);
  EXPECT_EQ(phi[0].apply({Q.one()}), h.unit);
  EXPECT_EQ(phi[1].apply(dual.unit), end.identity());
  Vec one_one = kron(Mat::from_columns(Q, 2, {dual.unit}), Mat::from_columns(Q, 2, {dual.unit})).column_dense(0);
  EXPECT_EQ(phi[2].apply(one_one), end.mult());
}

TEST(PhiModule, OperadMorphismFromCobar) {
  for (const char* name : {"group_z2", "group_z3", "sweedler_h4"}) {
    auto h = fx::builtin(name).data;
    auto dual = hopf::dualize(h);
    auto act = coaction_to_action(h, h, regular_coaction(h));
    barcobar::CobarOperad cobar(dual, 3);
    hh::EndOperad end(h, 3);
    auto rep = operad::check_operad_morphism(cobar, end, phi_module(dual, h, act, 3));
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.first_failure();
  }
  auto ext = fx::exterior_x(F2);
  barcobar::CobarOperad cobar(ext, 3);
  hh::EndOperad end(ext, 3);
  EXPECT_TRUE(operad::check_operad_morphism(cobar, end, phi_module(ext, ext, adjoint_action(ext), 3)).all_pass());
}

TEST(PhiComodule, RegularCoactionIsTheLiftInclusion) {
  for (const char* name : {"group_z2", "sweedler_h4", "dual_group_s3"}) {
    auto h = fx::builtin(name).data;
    int N = h.dim > 4 ? 2 : 3;
    auto phi = phi_comodule(h, h, regular_coaction(h), N);
    for (int n = 0; n <= N; ++n) EXPECT_EQ(phi[n], barcobar::lift_matrix(h, n)) << name << " n=" << n;
    barcobar::DualBarOperad bar(h, N);
    hh::EndOperad end(h, N);
    auto rep = operad::check_operad_morphism(bar, end, phi);
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.first_failure();
  }
}

TEST(PhiComodule, CounitCaseIsIdentity) {
  auto h = fx::sweedler(Q);
  auto phi = phi_comodule(h, h, regular_coaction(h), 2);
  hh::EndOperad end(h, 2);
  EXPECT_EQ(phi[1].apply(h.eps()), end.identity());
}

TEST(Traces, IntegralTraceOfGroupAlgebra) {
  auto h = fx::group_algebra(Q, fx::symmetric_group_s3());
  auto tr = integral_trace(h, h.unit);
  EXPECT_EQ(tr.tau, h.eps().size() == 6 ? h.basis(0) : Vec{});
  auto rep = check_trace(h, h, regular_coaction(h), tr);
  EXPECT_TRUE(rep.all_pass()) << rep.first_failure();
}

TEST(Traces, SigmaInvarianceOnUnimodularFixtures) {
  for (const char* name : {"group_z2", "group_z3", "group_s3", "dual_group_z2", "dual_group_z3", "dual_group_s3"}) {
    auto h = fx::builtin(name).data;
    ASSERT_TRUE(hopf::is_unimodular(h)) << name;
    auto rep = check_trace(h, h, regular_coaction(h), integral_trace(h, h.unit));
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.first_failure();
  }
  auto ext = fx::exterior_x(F2);
  EXPECT_TRUE(check_trace(ext, ext, regular_coaction(ext), integral_trace(ext, ext.unit)).all_pass());
}

TEST(Traces, SweedlerIntegralTraceIsInvariantButNotATrace) {
  auto h = fx::sweedler(Q);
  auto g = h.basis(1);
  auto rep = check_trace(h, h, regular_coaction(h), integral_trace(h, g));
  EXPECT_TRUE(rep.find("tau(a^{(1)}) a^{(2)} = tau(a) sigma")->pass);
  EXPECT_TRUE(rep.find("nondegenerate")->pass);
  EXPECT_FALSE(rep.find("tau(ab) = tau(ba)")->pass);
}

TEST(Traces, DualIntegralSatisfiesDefinition) {
  for (const char* name : {"sweedler_h4", "group_s3", "dual_group_z3"}) {
    auto h = fx::builtin(name).data;
    Vec lambda = charmap::dual_right_integral(h);
    EXPECT_FALSE(is_zero(lambda));
    for (std::size_t k = 0; k < h.dim; ++k) {
      Vec lhs = zero_vec(Q, h.dim);
      for (const auto& [pq, e] : h.delta().column(k)) lhs[pq % h.dim] += e * lambda[pq / h.dim];
      EXPECT_EQ(lhs, scale(lambda[k], h.unit)) << name;
    }
  }
}

TEST(HochschildCyclic, IsCyclic) {
  for (const char* name : {"exterior_x", "group_z2", "sweedler_h4"}) {
    auto a = fx::builtin(name).data;
    auto rep = check_cosimplicial(hochschild_cyclic(a, 3).dual());
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.first_failure();
  }
}

TEST(HochschildCyclic, ThetaTransportsTheCyclicOperad) {
  auto a = fx::exterior_x(Q);
  auto tr = charmap::TraceData{a.basis(1), a.unit};
  auto end = hh::frobenius_cyclic(a, hopf::frobenius_from_form(a, tr.tau), 4);
  std::vector<Mat> ad;
  for (int n = 0; n <= 4; ++n) ad.push_back(end.ad_theta(n));
  auto rep = check_cosimplicial_morphism(cosimplicial_from_operad(end, 4), hochschild_cyclic(a, 4).dual(), ad);
  EXPECT_TRUE(rep.all_pass()) << rep.first_failure();
}

TEST(Gamma, FactorizationAndCyclicity) {
  auto h = z2();
  auto tr = integral_trace(h, h.unit);
  auto gamma = gamma_chain(h, h, regular_coaction(h), tr.tau, 3);
  hh::EndOperad end(h, hopf::frobenius_from_form(h, tr.tau), 3);
  auto phi = phi_comodule(h, h, regular_coaction(h), 3);
  std::vector<Mat> gt;
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(gamma[n].transpose(), end.ad_theta(n) * phi[n]) << n;
    gt.push_back(gamma[n].transpose());
  }
  auto kr = barcobar::kr_cyclic(h, {h.eps(), h.unit, hopf::Convention::khalkhali_rangipour}, 3).dual();
  auto rep = check_cosimplicial_morphism(kr, hochschild_cyclic(h, 3).dual(), gt);
  EXPECT_TRUE(rep.all_pass()) << rep.first_failure();
}

TEST(Characteristic, GroupAlgebraComoduleCase) {
  auto h = z2();
  auto rep = characteristic_map(h, h, regular_coaction(h), integral_trace(h, h.unit), 2);
  EXPECT_TRUE(rep.checks.all_pass()) << rep.checks.first_failure();
  ASSERT_TRUE(rep.on_cohomology && rep.on_cyclic);
  EXPECT_TRUE(rep.on_cohomology->injective());
  EXPECT_TRUE(rep.on_cyclic->injective());
  std::vector<std::size_t> cols;
  for (const auto& m : rep.on_cyclic->maps) cols.push_back(m.cols());
  EXPECT_EQ(cols, (std::vector<std::size_t>{1, 0, 1}));
}

TEST(Characteristic, ExteriorComoduleCaseKeepsB) {
  auto a = fx::exterior_x(F2);
  auto rep = characteristic_map(a, a, regular_coaction(a), integral_trace(a, a.unit), 2);
  EXPECT_TRUE(rep.checks.all_pass()) << rep.checks.first_failure();
  ASSERT_TRUE(rep.on_cohomology.has_value());
  EXPECT_TRUE(rep.checks.find("H(Phi): preserves B")->pass);
  EXPECT_TRUE(rep.on_cohomology->injective());
}

TEST(Characteristic, ModuleCase) {
  auto h = z2();
  auto dual = hopf::dualize(h);
  auto act = coaction_to_action(h, h, regular_coaction(h));
  TraceData tr{h.basis(0), dual.eps()};
  auto rep = characteristic_map(dual, h, act, tr, 2);
  EXPECT_TRUE(rep.checks.all_pass()) << rep.checks.first_failure();
  EXPECT_TRUE(rep.gamma.empty());
}

TEST(Characteristic, TrivialHopfAlgebra) {
  auto k = fx::trivial(Q);
  auto rep = characteristic_map(k, k, regular_coaction(k), integral_trace(k, k.unit), 2);
  EXPECT_TRUE(rep.checks.all_pass()) << rep.checks.first_failure();
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(rep.phi[n], Mat::identity(Q, 1));
  for (const auto& m : rep.on_cohomology->maps)
    if (m.cols() > 0) EXPECT_EQ(m, Mat::identity(Q, m.cols()));
}

TEST(Characteristic, RejectsBadTraces) {
  auto h = z2();
  auto rep = characteristic_map(h, h, regular_coaction(h), {h.eps(), h.unit}, 2);
  EXPECT_FALSE(rep.checks.find("trace: tau(a^{(1)}) a^{(2)} = tau(a) sigma")->pass);
  EXPECT_FALSE(rep.on_cyclic.has_value());

  auto sw = fx::sweedler(Q);
  auto dual = hopf::dualize(sw);
  auto bad = characteristic_map(dual, sw, coaction_to_action(sw, sw, regular_coaction(sw)), {sw.basis(0), dual.eps()}, 1);
  EXPECT_FALSE(bad.checks.all_pass());
}
