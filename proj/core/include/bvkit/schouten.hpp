#pragma once

#include <string>
#include <vector>

#include "bvkit/checks.hpp"
#include "bvkit/linalg.hpp"

namespace bvkit::schouten {

// Lie algebra on x_0..x_{d-1} with [x_i, x_j] stored at brackets[i*d+j], and a
// character delta.
struct LieData {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::vector<Vec> brackets;
  Vec delta;

  const Vec& bracket(std::size_t i, std::size_t j) const { return brackets.at(i * dim + j); }
  Vec bracket(const Vec& x, const Vec& y) const;
};

// Antisymmetry, Jacobi, and delta([x,y]) = 0.
CheckReport check_lie(const LieData& l);

LieData abelian(const Field& f, std::size_t dim);
// [x,y] = y; delta_x is the value of the character on x.
LieData affine_line(const Field& f, long delta_x = 0);
// [x,y] = z.
LieData heisenberg(const Field& f);
// [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieData sl2(const Field& f);
std::vector<std::string> lie_builtin_names();
LieData lie_builtin(const std::string& name, const Field& f);

// Elements of Λ^*L are dense vectors indexed by subsets of {0..d-1}: bit i of the
// index marks x_i, and the monomial is the wedge of its generators in increasing order.
std::size_t total_dim(const LieData& l);
int degree_of_index(std::size_t mask);
// Masks of Λ^k L in lexicographic order of the sorted index tuples.
std::vector<std::size_t> degree_basis(const LieData& l, int k);
Vec unit_element(const LieData& l);
Vec monomial(const LieData& l, const std::vector<std::size_t>& indices);  // x_{i_1} ∧ ... ∧ x_{i_k}
Vec generator(const LieData& l, const Vec& x);                            // L = Λ^1 L
// Degree of a nonzero homogeneous element; -1 for zero or mixed elements.
int degree(const LieData& l, const Vec& u);
std::string describe(const LieData& l, const Vec& u);

Vec wedge(const LieData& l, const Vec& u, const Vec& v);
// {x_1∧..∧x_p, y_1∧..∧y_q} = Σ (-1)^{i+j} [x_i,y_j] ∧ x_1..x̂_i..x_p ∧ y_1..ŷ_j..y_q
Vec schouten_bracket(const LieData& l, const Vec& u, const Vec& v);
// Chevalley-Eilenberg differential Λ^n L -> Λ^{n-1} L with coefficients in k_delta.
Vec ce_differential(const LieData& l, const Vec& u);
Mat ce_matrix(const LieData& l);

// d^2 = 0, d = delta on Λ^1, the BV relation against the Schouten bracket on every
// pair of basis monomials, the expansion of d on products, Poisson rule and
// graded Jacobi, all for monomials of degree <= max_degree.
CheckReport check_free_bv(const LieData& l, int max_degree);

}  // namespace bvkit::schouten
