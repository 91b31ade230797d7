#include <gtest/gtest.h>

#include "bvkit/error.hpp"
#include "bvkit/schouten.hpp"

using namespace bvkit;
using namespace bvkit::schouten;

namespace {

const Field Q = Field::rationals();

Vec mono(const LieData& l, std::vector<std::size_t> idx) { return monomial(l, idx); }

Scalar sgn(long e) { return e % 2 == 0 ? Q.one() : -Q.one(); }

// Term-by-term expansion of the bracket of two products of homogeneous
// monomials, written independently of the engine's loop over generators.
Vec products_bracket(const LieData& l, const std::vector<Vec>& xs, const std::vector<int>& dx,
                     const std::vector<Vec>& ys, const std::vector<int>& dy) {
  Vec out = zero_vec(Q, total_dim(l));
  long X = 0;
  for (int d : dx) X += d;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      long xi_before = 0, yj_before = 0;
      for (std::size_t m = 0; m < i; ++m) xi_before += dx[m];
      for (std::size_t m = 0; m < j; ++m) yj_before += dy[m];
      long x_hat = X - dx[i];
      Vec term = schouten_bracket(l, xs[i], ys[j]);
      for (std::size_t m = 0; m < xs.size(); ++m)
        if (m != i) term = wedge(l, term, xs[m]);
      for (std::size_t m = 0; m < ys.size(); ++m)
        if (m != j) term = wedge(l, term, ys[m]);
      axpy(sgn(dx[i] * xi_before + dy[j] * yj_before + (dy[j] + 1) * x_hat), term, out);
    }
  return out;
}

Vec product(const LieData& l, const std::vector<Vec>& xs) {
  Vec p = unit_element(l);
  for (const auto& x : xs) p = wedge(l, p, x);
  return p;
}

}  // namespace

TEST(Lie, FixturesAreLieAlgebrasWithCharacters) {
  for (const auto& name : lie_builtin_names()) {
    auto rep = check_lie(lie_builtin(name, Q));
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.first_failure();
  }
}

TEST(Lie, InvalidCharacterIsRejected) {
  auto l = affine_line(Q);
  l.delta[1] = Q.one();  // δ([x,y]) = δ(y) must vanish
  EXPECT_FALSE(check_lie(l).find("delta vanishes on brackets")->pass);
  auto h = heisenberg(Q);
  h.brackets[0 * 3 + 1] = h.brackets[1 * 3 + 0];
  EXPECT_FALSE(check_lie(h).find("antisymmetric")->pass);
}

TEST(Exterior, BasisAndWedge) {
  auto l = abelian(Q, 3);
  auto b2 = degree_basis(l, 2);
  ASSERT_EQ(b2.size(), 3u);
  EXPECT_EQ(b2, (std::vector<std::size_t>{0b011, 0b101, 0b110}));
  EXPECT_EQ(mono(l, {1, 0}), scale(-Q.one(), mono(l, {0, 1})));
  EXPECT_TRUE(is_zero(mono(l, {2, 2})));
  EXPECT_EQ(wedge(l, mono(l, {0, 2}), mono(l, {1})), scale(-Q.one(), mono(l, {0, 1, 2})));
  EXPECT_EQ(degree(l, mono(l, {0, 2})), 2);
  EXPECT_EQ(degree(l, add(mono(l, {0}), unit_element(l))), -1);
  EXPECT_EQ(describe(l, mono(l, {1, 0})), "(-1)x1∧x2");
}

TEST(Schouten, GeneratorsAndAbelianCase) {
  auto l = sl2(Q);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(schouten_bracket(l, mono(l, {i}), mono(l, {j})), generator(l, l.bracket(i, j)));
  auto a = abelian(Q, 3);
  for (std::size_t s = 0; s < 8; ++s)
    for (std::size_t t = 0; t < 8; ++t)
      EXPECT_TRUE(is_zero(schouten_bracket(a, unit_vec(Q, 8, s), unit_vec(Q, 8, t))));
}

TEST(Schouten, AffineLineBracketByHand) {
  // {x, x∧y} = [x,x]∧y - [x,y]∧x = -y∧x = x∧y
  auto l = affine_line(Q);
  EXPECT_EQ(schouten_bracket(l, mono(l, {0}), mono(l, {0, 1})), mono(l, {0, 1}));
  // {x∧y, x} = -[y,x]∧x = y∧x
  EXPECT_EQ(schouten_bracket(l, mono(l, {0, 1}), mono(l, {0})), mono(l, {1, 0}));
  EXPECT_TRUE(is_zero(schouten_bracket(l, mono(l, {1}), mono(l, {0, 1}))));
}

TEST(Schouten, EvenEvenPairOnHeisenberg) {
  // (i,j) = (1,2) gives -z∧y∧x and (2,1) gives -[y,x]∧x∧y = z∧x∧y, both x∧y∧z
  auto l = heisenberg(Q);
  EXPECT_EQ(schouten_bracket(l, mono(l, {0, 1}), mono(l, {0, 1})), scale(Q.from_int(2), mono(l, {0, 1, 2})));
}

TEST(Schouten, AlternativeSignBreaksPoissonRule) {
  // With the extra factor (-1)^{(p+1)(q-1)} the bracket of two even elements
  // flips; the Poisson rule pins the sign.
  auto l = heisenberg(Q);
  Vec a = mono(l, {0, 1}), b = mono(l, {0}), c = mono(l, {1});
  Vec lhs = schouten_bracket(l, a, wedge(l, b, c));
  Vec rhs = add(wedge(l, schouten_bracket(l, a, b), c), scale(-Q.one(), wedge(l, b, schouten_bracket(l, a, c))));
  EXPECT_EQ(lhs, rhs);
  EXPECT_NE(scale(-Q.one(), lhs), rhs);
}

TEST(Schouten, BracketOfProductsExpansion) {
  for (const char* name : {"heisenberg", "sl2", "affine"}) {
    auto l = lie_builtin(name, Q);
    const std::size_t n = total_dim(l);
    std::vector<std::size_t> masks;
    for (std::size_t m = 1; m < n; ++m) masks.push_back(m);
    for (auto s1 : masks)
      for (auto s2 : masks)
        for (auto t1 : masks) {
          std::vector<Vec> xs{unit_vec(Q, n, s1), unit_vec(Q, n, s2)}, ys{unit_vec(Q, n, t1), mono(l, {0})};
          std::vector<int> dx{degree_of_index(s1), degree_of_index(s2)}, dy{degree_of_index(t1), 1};
          EXPECT_EQ(schouten_bracket(l, product(l, xs), product(l, ys)), products_bracket(l, xs, dx, ys, dy))
              << name << " " << s1 << " " << s2 << " " << t1;
        }
  }
}

TEST(ChevalleyEilenberg, ValuesByHand) {
  auto l = affine_line(Q);
  EXPECT_EQ(ce_differential(l, mono(l, {0, 1})), scale(-Q.one(), mono(l, {1})));
  auto ld = affine_line(Q, 1);
  EXPECT_EQ(ce_differential(ld, mono(ld, {0})), unit_element(ld));
  EXPECT_TRUE(is_zero(ce_differential(ld, mono(ld, {1}))));
  // d(x∧y) = δ(x)y - δ(y)x - [x,y] = y - y = 0
  EXPECT_TRUE(is_zero(ce_differential(ld, mono(ld, {0, 1}))));
  EXPECT_TRUE(is_zero(ce_differential(l, unit_element(l))));
  auto a = abelian(Q, 3);
  EXPECT_TRUE(ce_matrix(a).is_zero());
}

TEST(ChevalleyEilenberg, SquareZeroOnAllFixtures) {
  for (const auto& name : lie_builtin_names()) {
    auto l = lie_builtin(name, Q);
    Mat d = ce_matrix(l);
    EXPECT_TRUE((d * d).is_zero()) << name;
  }
}

TEST(FreeBV, AllIdentitiesOnAllFixtures) {
  for (const auto& name : lie_builtin_names()) {
    auto rep = check_free_bv(lie_builtin(name, Q), 3);
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.first_failure();
    EXPECT_NE(rep.find("d on products of generators"), nullptr);
  }
  auto f3 = check_free_bv(sl2(Field::prime(3)), 3);
  EXPECT_TRUE(f3.all_pass()) << f3.first_failure();
}

TEST(FreeBV, BrokenDifferentialIsCaught) {
  auto l = heisenberg(Q);
  l.delta[2] = Q.one();  // z = [x,y], so this is not a character
  auto rep = check_free_bv(l, 3);
  EXPECT_FALSE(rep.all_pass());
  EXPECT_FALSE(rep.find("d^2 = 0")->pass);
}

TEST(Exterior, Errors) {
  auto l = abelian(Q, 2);
  EXPECT_THROW(wedge(l, zero_vec(Q, 3), unit_element(l)), DimensionMismatch);
  EXPECT_THROW(lie_builtin("so3", Q), InvalidInput);
  EXPECT_THROW(monomial(l, {4}), InvalidInput);
}
