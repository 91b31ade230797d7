#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bvkit/checks.hpp"
#include "bvkit/linalg.hpp"

namespace bvkit::operad {

// Arities 0..N of a non-symmetric linear operad with multiplication. Every
// slice is realized as tensors with one "top" factor of dimension T and n
// "leaf" factors of dimension L: dim O(n) = T * L^n, index top*L^n + leaf tuple.
// Partial composition substitutes into one leaf slot through a matrix U_g
// (rows L^n, columns L) that depends only on g.
class OperadSlice {
 public:
  OperadSlice(const Field& f, std::size_t top, std::size_t leaf, int max_arity, std::string name);
  virtual ~OperadSlice() = default;

  const Field& field() const { return field_; }
  int max_arity() const { return max_arity_; }
  std::size_t top_dim() const { return top_; }
  std::size_t leaf_dim() const { return leaf_; }
  std::size_t dim(int n) const;
  const std::string& name() const { return name_; }

  // f ∘_i g for f in O(m), g in O(n), 1 <= i <= m.
  Vec compose(int m, const Vec& f, int i, int n, const Vec& g) const;
  // Matrices of f ↦ f ∘_i g and g ↦ f ∘_i g.
  Mat compose_left_matrix(int m, int i, int n, const Vec& g) const;
  Mat compose_right_matrix(int m, const Vec& f, int i, int n) const;

  const Vec& identity() const { return id_; }
  const Vec& mult() const { return mu_; }
  const Vec& unit0() const { return e_; }

  virtual bool has_cyclic() const { return false; }
  virtual Vec tau(int n, const Vec& f) const;
  Mat tau_matrix(int n) const;

  Vec basis(int n, std::size_t k) const { return unit_vec(field_, dim(n), k); }
  void check_arity(int n) const;

 protected:
  virtual Mat substitution(int n, const Vec& g) const = 0;

  Field field_;
  std::size_t top_;
  std::size_t leaf_;
  int max_arity_;
  std::string name_;
  Vec id_, mu_, e_;
};

// Cochain operations on O(*); m, n are arities of f, g.
Vec coface(const OperadSlice& op, int n, int i, const Vec& f);  // δ_i : O(n) -> O(n+1)
Vec codegeneracy(const OperadSlice& op, int n, int i, const Vec& f);  // σ_i : O(n) -> O(n-1)
Mat coface_matrix(const OperadSlice& op, int n, int i);
Mat codegeneracy_matrix(const OperadSlice& op, int n, int i);
Mat differential(const OperadSlice& op, int n);  // Σ (-1)^i δ_i : O(n) -> O(n+1)
Vec apply_differential(const OperadSlice& op, int n, const Vec& f);

Vec cup(const OperadSlice& op, int m, const Vec& f, int n, const Vec& g);
Vec circle_bar(const OperadSlice& op, int m, const Vec& f, int n, const Vec& g);
Vec bracket(const OperadSlice& op, int m, const Vec& f, int n, const Vec& g);
// f ∘̄ f, defined for even n or characteristic 2.
Vec sq(const OperadSlice& op, int n, const Vec& f);

// Cyclic pieces, requiring op.has_cyclic().
Mat lambda_matrix(const OperadSlice& op, int n);       // (-1)^n τ_n
Mat extra_codegeneracy(const OperadSlice& op, int n);  // σ_{n-1} τ_n : O(n) -> O(n-1)
Mat connes_B(const OperadSlice& op, int n);            // O(n) -> O(n-1)

struct AxiomOptions {
  int max_arity = -1;                 // defaults to op.max_arity()
  std::size_t exhaustive_limit = 4096;  // basis triples per (m,n,k) before sampling
  int samples = 4;                    // random dense triples when sampling
  std::uint64_t seed = 17;
};

// Unit, multiplication, sequential and parallel associativity and, if
// present, the cyclic axioms.
CheckReport check_operad_axioms(const OperadSlice& op, const AxiomOptions& opt = {});

// phi[n] : P(n) -> Q(n) must commute with every ∘_i and preserve id, μ, e;
// when both operads are cyclic it must also commute with τ.
CheckReport check_operad_morphism(const OperadSlice& p, const OperadSlice& q, const std::vector<Mat>& phi,
                                  const AxiomOptions& opt = {});

}  // namespace bvkit::operad
