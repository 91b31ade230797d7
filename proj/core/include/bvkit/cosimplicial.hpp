#pragma once

#include <optional>
#include <vector>

#include "bvkit/checks.hpp"
#include "bvkit/linalg.hpp"

namespace bvkit {

namespace operad {
class OperadSlice;
}

// Degrees 0..N. coface[n][i] : C^n -> C^{n+1} for 0 <= i <= n+1 and n < N;
// codegeneracy[n][i] : C^n -> C^{n-1} for 0 <= i < n; tau[n] : C^n -> C^n.
struct CosimplicialModule {
  Field field;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Mat>> coface;
  std::vector<std::vector<Mat>> codegeneracy;
  std::vector<Mat> tau;

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  bool has_tau() const { return !tau.empty(); }
  Mat differential(int n) const;  // Σ (-1)^i δ_i : C^n -> C^{n+1}
  Mat lambda(int n) const;        // (-1)^n τ_n
};

// The cosimplicial module of an operad with multiplication, degrees 0..N-1
// so every coface stays within the arity budget; tau is copied when cyclic.
CosimplicialModule cosimplicial_from_operad(const operad::OperadSlice& op, int top_degree);

// Cosimplicial identities, plus the cocyclic ones when tau is present.
CheckReport check_cosimplicial(const CosimplicialModule& c);

// Matrices of every structure map present in both modules must satisfy phi∘s = s∘phi.
CheckReport check_cosimplicial_morphism(const CosimplicialModule& a, const CosimplicialModule& b,
                                        const std::vector<Mat>& phi);

// Dual cosimplicial module of a cyclic (simplicial) module given by faces
// d[n][i] : X_{n+1} -> X_n (0 <= i <= n+1), degeneracies s[n][i] : X_{n-1} -> X_n, t[n].
CosimplicialModule transpose_simplicial(const Field& f, const std::vector<std::size_t>& dims,
                                        const std::vector<std::vector<Mat>>& faces,
                                        const std::vector<std::vector<Mat>>& degeneracies,
                                        const std::vector<Mat>& t);

// Betti numbers and class data of the cochain complex up to degree top-1.
std::vector<Subquotient> cohomology(const CosimplicialModule& c, int max_degree);

// Connes' λ-subcomplex C_λ^n = ker(λ_n - id).
struct LambdaComplex {
  std::vector<Mat> basis;        // columns span C_λ^n inside C^n
  std::vector<Mat> differential;  // in the chosen bases
  std::vector<Subquotient> cohomology;
  // Lift coordinates in cohomology(n) to a cochain in C^n.
  Vec lift(int n, const Vec& coords) const;
};
LambdaComplex lambda_complex(const CosimplicialModule& c, int max_degree);

}  // namespace bvkit
