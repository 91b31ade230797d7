#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bvkit/checks.hpp"
#include "bvkit/cohomology.hpp"
#include "bvkit/cosimplicial.hpp"
#include "bvkit/hopf.hpp"
#include "bvkit/operad.hpp"

namespace bvkit::barcobar {

// ext_n : H^{⊗n} -> Hom_{H-mod}(H, H^{⊗n}), c ↦ (z ↦ Δ^{(n)}(z)·c), in CoEnd layout.
Mat ext_matrix(const hopf::FinAlgebraData& h, int n);
// ev_n : Hom(H, H^{⊗n}) -> H^{⊗n}, f ↦ f(1).
Mat ev_matrix(const hopf::FinAlgebraData& h, int n);
// lift_n : (A^{⊗n})^∨ -> Hom(A^{⊗n}, A), f ↦ (a ↦ a_1^{(1)}...a_n^{(1)} f(a_1^{(2)},...,a_n^{(2)})), End layout.
Mat lift_matrix(const hopf::FinAlgebraData& a, int n);
// proj_n : Hom(A^{⊗n}, A) -> (A^{⊗n})^∨, F ↦ ε∘F.
Mat proj_matrix(const hopf::FinAlgebraData& a, int n);

// Cobar operad: O(n) = H^{⊗n} with the diagonal substitution
// (a_1..a_m) ∘_i (b_1..b_n) = a_1..a_{i-1} ⊗ a_i^{(1)}b_1 ⊗ ... ⊗ a_i^{(n)}b_n ⊗ a_{i+1}..a_m.
// With a character δ such that (δ,1) is a modular pair in involution, the
// Connes-Moscovici operators make it cyclic.
class CobarOperad : public operad::OperadSlice {
 public:
  CobarOperad(const hopf::FinAlgebraData& h, int max_arity);
  CobarOperad(const hopf::FinAlgebraData& h, const Vec& delta, int max_arity);

  bool has_cyclic() const override { return !tau_.empty(); }
  Vec tau(int n, const Vec& f) const override;
  const hopf::FinAlgebraData& bialgebra() const { return h_; }

 protected:
  Mat substitution(int n, const Vec& g) const override;

 private:
  hopf::FinAlgebraData h_;
  std::vector<Mat> ext_;
  std::vector<Mat> tau_;
};

// Dual bar operad: O(n) = (A^{⊗n})^∨, isomorphic through lift to the
// comodule endomorphism operad of A. With a group-like σ such that
// S²(k) = σ^{-1}kσ, the transposed Khalkhali-Rangipour operators
// t_n(k_1..k_n) = σS(k_1^{(1)}...k_{n-1}^{(1)}k_n) ⊗ k_1^{(2)} ⊗ ... ⊗ k_{n-1}^{(2)} make it cyclic.
class DualBarOperad : public operad::OperadSlice {
 public:
  DualBarOperad(const hopf::FinAlgebraData& a, int max_arity);
  DualBarOperad(const hopf::FinAlgebraData& a, const Vec& sigma, int max_arity);

  bool has_cyclic() const override { return !tau_.empty(); }
  Vec tau(int n, const Vec& f) const override;
  const hopf::FinAlgebraData& bialgebra() const { return a_; }

 protected:
  Mat substitution(int n, const Vec& g) const override;

 private:
  hopf::FinAlgebraData a_;
  std::vector<Mat> lift_;
  std::vector<Mat> tau_;
};

// Cyclic (simplicial) module: faces[n][i] : X_{n+1} -> X_n, degeneracies[n][i] : X_{n-1} -> X_n.
struct SimplicialModule {
  Field field;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Mat>> faces;
  std::vector<std::vector<Mat>> degeneracies;
  std::vector<Mat> t;
  CosimplicialModule dual() const;
};

// Cobar construction of a coalgebra whose unit is group-like, degrees 0..N.
CosimplicialModule cobar_complex(const hopf::FinAlgebraData& c, int top_degree);
// Bar construction of an augmented algebra and its dual cosimplicial module.
SimplicialModule bar_complex(const hopf::FinAlgebraData& a, int top_degree);
CosimplicialModule dual_bar_complex(const hopf::FinAlgebraData& a, int top_degree);

std::vector<Subquotient> cotor(const hopf::FinAlgebraData& c, int max_degree);
std::vector<Subquotient> ext(const hopf::FinAlgebraData& a, int max_degree);

// Primitive elements and Der(A, k) by direct linear solves.
std::vector<Vec> primitives(const hopf::FinAlgebraData& c);
std::vector<Vec> derivations_to_ground(const hopf::FinAlgebraData& a);

// Connes-Moscovici Ω(H)_{(δ,σ)}: last coface h ↦ h ⊗ σ and
// τ_n(h_1..h_n) = Δ^{(n)}S~(h_1)·(h_2 ⊗ ... ⊗ h_n ⊗ σ). Throws CheckFailed
// unless (δ,σ) is a modular pair in involution.
CosimplicialModule cm_cocyclic(const hopf::FinAlgebraData& h, const hopf::ModularPair& mp, int top_degree);
// Khalkhali-Rangipour B(K)^{(δ,σ)}: last face k ↦ k_1..k_n δ(k_{n+1}) and
// t_n(k) = σS(k_1^{(1)}...k_n^{(1)}) ⊗ k_1^{(2)} ⊗ ... ⊗ k_{n-1}^{(2)} δ(k_n^{(2)}).
SimplicialModule kr_cyclic(const hopf::FinAlgebraData& k, const hopf::ModularPair& mp, int top_degree);

// ψ: Ω(K^∨)_{(ev_σ,δ)} -> (B(K)^{(δ,σ)})^∨ is the identity in dual bases;
// checks that it commutes with every structure map and that τ_1 = t_1^∨.
CheckReport psi_duality(const hopf::FinAlgebraData& k, const hopf::ModularPair& kr_pair, int top_degree);

// Inclusion into the (co)endomorphism operad and its retraction, degrees 0..N.
struct InclusionMaps {
  std::vector<Mat> inclusion;
  std::vector<Mat> retraction;
  CheckReport checks;
};
InclusionMaps cotor_inclusion(const hopf::FinAlgebraData& c, int top_degree);  // ext / ev
InclusionMaps ext_inclusion(const hopf::FinAlgebraData& a, int top_degree);    // lift / proj

// For A = C^∨: Γ : CoEnd(C) -> End(A) and φ : ΩC -> (BA)^∨ together with
// the commuting squares relating them to ev/proj and ext/lift.
struct DualityMaps {
  std::vector<Mat> gamma;
  std::vector<Mat> phi;
  CheckReport checks;
};
DualityMaps duality_maps(const hopf::FinAlgebraData& c, int top_degree);

struct HopfCyclicReport {
  hopf::Convention convention = hopf::Convention::connes_moscovici;
  LambdaComplex complex;
  std::vector<std::size_t> betti;  // HC^n for n <= max_degree
  // Only for (δ,1) under CM or (ε,σ) under KR.
  std::optional<operad::LambdaReport> lie;
  std::optional<operad::CochainReport> bv;
  std::string bracket_note;
  CheckReport checks;
};
HopfCyclicReport hopf_cyclic(const hopf::FinAlgebraData& h, const hopf::ModularPair& mp, int max_degree,
                             const operad::RingOptions& opt = {});

}  // namespace bvkit::barcobar
