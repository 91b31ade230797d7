#include <gtest/gtest.h>

#include "bvkit/error.hpp"
#include "bvkit/fixtures.hpp"
#include "bvkit/hochschild.hpp"
#include "oracles.hpp"

using namespace bvkit;
namespace fx = bvkit::fixtures;
namespace hh = bvkit::hochschild;

namespace {

const Field Q = Field::rationals();

std::vector<std::size_t> dims_of(const std::vector<Subquotient>& h) {
  std::vector<std::size_t> out;
  for (const auto& s : h) out.push_back(s.dim());
  return out;
}

std::vector<oracle::Dense> dense(const std::vector<Mat>& ms) {
  std::vector<oracle::Dense> out;
  for (const auto& m : ms) {
    oracle::Dense d;
    for (std::size_t r = 0; r < m.rows(); ++r) d.push_back(m.row_dense(r));
    out.push_back(d);
  }
  return out;
}

}  // namespace

TEST(Bimodules, StandardBimodulesAreBimodules) {
  for (const char* name : {"exterior_x", "sweedler_h4", "group_s3"}) {
    auto a = fx::builtin(name).data;
    EXPECT_TRUE(hh::check_bimodule(a, hh::regular_bimodule(a)).all_pass()) << name;
    auto rep = hh::check_bimodule(a, hh::dual_bimodule(a));
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.first_failure();
    EXPECT_TRUE(hh::check_bimodule(a, hh::augmentation_bimodule(a)).all_pass()) << name;
  }
}

TEST(Bimodules, BrokenActionIsDetected) {
  auto a = fx::sweedler(Q);
  auto m = hh::regular_bimodule(a);
  m.left.set(0, 1 * 4 + 1, Q.zero());  // g·g acts as 0
  auto rep = hh::check_bimodule(a, m);
  EXPECT_FALSE(rep.all_pass());
}

TEST(HochschildComplex, SquaresToZero) {
  auto a = fx::sweedler(Q);
  for (auto v : {hh::Variant::cochain, hh::Variant::chain})
    for (const auto& m : {hh::regular_bimodule(a), hh::dual_bimodule(a), hh::augmentation_bimodule(a)}) {
      auto c = hh::hochschild_complex(a, m, 3, v);
      for (std::size_t n = 0; n + 1 < c.d.size(); ++n) {
        Mat sq = v == hh::Variant::cochain ? c.d[n + 1] * c.d[n] : c.d[n] * c.d[n + 1];
        EXPECT_TRUE(sq.is_zero()) << n;
      }
    }
}

TEST(HochschildComplex, BettiAgreesWithDenseOracle) {
  auto a = fx::exterior_x(Q);
  auto c = hh::hochschild_complex(a, hh::regular_bimodule(a), 3, hh::Variant::cochain);
  auto expect = oracle::betti(c.dims, dense(c.d));
  EXPECT_EQ(dims_of(c.homology()), expect);
  EXPECT_EQ(expect, (std::vector<std::size_t>{2, 1, 1, 1}));
}

TEST(HochschildComplex, GroupAlgebraHomology) {
  auto z2 = fx::group_algebra(Q, fx::cyclic_group(2));
  auto c = hh::hochschild_complex(z2, hh::regular_bimodule(z2), 2, hh::Variant::chain);
  EXPECT_EQ(dims_of(c.homology()), (std::vector<std::size_t>{2, 0, 0}));
  // HH_0 of k[S3] is spanned by the conjugacy classes
  auto s3 = fx::group_algebra(Q, fx::symmetric_group_s3());
  auto c3 = hh::hochschild_complex(s3, hh::regular_bimodule(s3), 1, hh::Variant::chain);
  EXPECT_EQ(c3.homology()[0].dim(), 3u);
  EXPECT_EQ(c3.homology()[1].dim(), 0u);
}

TEST(HochschildComplex, DualBimoduleCohomologyIsDualHomology) {
  for (const char* name : {"exterior_x", "sweedler_h4"}) {
    auto a = fx::builtin(name).data;
    auto co = hh::hochschild_complex(a, hh::dual_bimodule(a), 2, hh::Variant::cochain);
    auto ch = hh::hochschild_complex(a, hh::regular_bimodule(a), 2, hh::Variant::chain);
    EXPECT_EQ(dims_of(co.homology()), dims_of(ch.homology())) << name;
    for (std::size_t n = 0; n < co.d.size(); ++n) EXPECT_EQ(co.d[n], ch.d[n].transpose()) << name << n;
  }
}

TEST(HochschildComplex, FrobeniusIdentifiesAWithDual) {
  // A ≅ A^∨ as bimodules for symmetric Frobenius algebras, so the cohomologies agree.
  auto a = fx::exterior_x(Q);
  auto co = hh::hochschild_complex(a, hh::dual_bimodule(a), 3, hh::Variant::cochain);
  auto reg = hh::hochschild_complex(a, hh::regular_bimodule(a), 3, hh::Variant::cochain);
  EXPECT_EQ(dims_of(co.homology()), dims_of(reg.homology()));
}

TEST(Derivations, FirstCohomologyIsOuterDerivations) {
  for (const char* name : {"exterior_x", "sweedler_h4", "group_z3", "truncated_x2"}) {
    auto a = fx::builtin(name).data;
    auto der = hh::derivations(a);
    auto inn = hh::inner_derivations(a);
    auto c = hh::hochschild_complex(a, hh::regular_bimodule(a), 1, hh::Variant::cochain);
    auto h = c.homology();
    EXPECT_EQ(h[1].dim(), der.size() - inn.size()) << name;
    for (const auto& v : der) EXPECT_TRUE(h[1].is_cycle(v)) << name;
    for (const auto& v : inn) EXPECT_TRUE(h[1].is_boundary(v)) << name;
  }
}

TEST(Derivations, ExteriorHasOneOuterDerivation) {
  auto a = fx::exterior_x(Q);
  EXPECT_EQ(hh::derivations(a).size(), 1u);
  EXPECT_TRUE(hh::inner_derivations(a).empty());
}

TEST(Derivations, BracketOnFirstCohomologyIsCommutator) {
  auto a = fx::sweedler(Q);
  hh::EndOperad op(a, 3);
  auto der = hh::derivations(a);
  ASSERT_GE(der.size(), 2u);
  auto as_map = [&](const Vec& v) {
    Mat m(Q, 4, 4);
    for (std::size_t y = 0; y < 4; ++y)
      for (std::size_t x = 0; x < 4; ++x) m.set(y, x, v[y * 4 + x]);
    return m;
  };
  bool some_nonzero = false;
  for (const auto& u : der)
    for (const auto& v : der) {
      Mat comm = as_map(u) * as_map(v) - as_map(v) * as_map(u);
      EXPECT_EQ(as_map(operad::bracket(op, 1, u, 1, v)), comm);
      some_nonzero = some_nonzero || !comm.is_zero();
    }
  EXPECT_TRUE(some_nonzero);
}

TEST(HochschildComplex, RejectsIncompatibleBimodule) {
  auto a = fx::sweedler(Q);
  hh::BimoduleData m{2, Mat(Q, 2, 7), Mat(Q, 2, 7)};
  EXPECT_THROW(hh::hochschild_complex(a, m, 1, hh::Variant::cochain), DimensionMismatch);
}
