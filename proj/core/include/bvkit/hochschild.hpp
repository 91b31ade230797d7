#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bvkit/checks.hpp"
#include "bvkit/cohomology.hpp"
#include "bvkit/hopf.hpp"
#include "bvkit/operad.hpp"

namespace bvkit::hochschild {

// End(A)(n) = Hom(A^{⊗n}, A); f is stored at index y*d^n + tuple(a), the
// coefficient of x_y in f(x_{a_1},...,x_{a_n}). With symmetric Frobenius data
// the cyclic operator is the unsigned rotation transported along Ad∘Θ.
class EndOperad : public operad::OperadSlice {
 public:
  EndOperad(const hopf::FinAlgebraData& a, int max_arity);
  EndOperad(const hopf::FinAlgebraData& a, const hopf::FrobeniusData& frob, int max_arity);

  bool has_cyclic() const override { return gram_.has_value(); }
  Vec tau(int n, const Vec& f) const override;
  const hopf::FinAlgebraData& algebra() const { return a_; }

  // Ad∘Θ: f ↦ F with F(a_0,...,a_n) = φ(a_0 f(a_1,...,a_n)), as a covector on A^{⊗(n+1)}.
  Mat ad_theta(int n) const;

 protected:
  Mat substitution(int n, const Vec& g) const override;

 private:
  hopf::FinAlgebraData a_;
  std::optional<Mat> gram_;  // G[a][b] = φ(x_a x_b)
  std::optional<Mat> gram_inv_;
};

// CoEnd(C)(n) = Hom(C, C^{⊗n}); f stored at index x*d^n + tuple(y), the
// coefficient of x_y in f(x_x). Composition (id^{i-1}⊗g⊗id)∘f.
class CoEndOperad : public operad::OperadSlice {
 public:
  CoEndOperad(const hopf::FinAlgebraData& c, int max_arity);
  const hopf::FinAlgebraData& coalgebra() const { return c_; }

 protected:
  Mat substitution(int n, const Vec& g) const override;

 private:
  hopf::FinAlgebraData c_;
};

EndOperad end_operad(const hopf::FinAlgebraData& a, int max_arity);
CoEndOperad coend_operad(const hopf::FinAlgebraData& c, int max_arity);
// Refuses non-symmetric Frobenius data.
EndOperad frobenius_cyclic(const hopf::FinAlgebraData& a, const hopf::FrobeniusData& frob, int max_arity);

// left(x_a ⊗ m) at column a*dim+m, right(m ⊗ x_a) at column m*d+a.
struct BimoduleData {
  std::size_t dim = 0;
  Mat left;
  Mat right;
};
BimoduleData regular_bimodule(const hopf::FinAlgebraData& a);
BimoduleData dual_bimodule(const hopf::FinAlgebraData& a);  // A^∨ with (a·φ·b)(x) = φ(bxa)
BimoduleData augmentation_bimodule(const hopf::FinAlgebraData& a);  // k through the augmentation
CheckReport check_bimodule(const hopf::FinAlgebraData& a, const BimoduleData& m);

enum class Variant { chain, cochain };

// cochain: d[n] : Hom(A^{⊗n}, M) -> Hom(A^{⊗n+1}, M), index m*d^n + tuple.
// chain: d[n] : M⊗A^{⊗n+1} -> M⊗A^{⊗n}, the Hochschild boundary b.
struct Complex {
  Variant variant = Variant::cochain;
  std::vector<std::size_t> dims;
  std::vector<Mat> d;
  std::vector<Subquotient> homology() const;
};
Complex hochschild_complex(const hopf::FinAlgebraData& a, const BimoduleData& m, int max_degree, Variant v);

// Derivations and inner derivations as elements of Hom(A,A) in End layout.
std::vector<Vec> derivations(const hopf::FinAlgebraData& a);
std::vector<Vec> inner_derivations(const hopf::FinAlgebraData& a);

operad::CochainReport hh_bv_table(const hopf::FinAlgebraData& a, const hopf::FrobeniusData& frob, int max_degree,
                                  const operad::RingOptions& opt = {});
operad::LambdaReport hc_lambda(const hopf::FinAlgebraData& a, const hopf::FrobeniusData& frob, int max_degree,
                               int random_pairs = 100);

// Cyclic rotation t(a_0⊗...⊗a_n) = (-1)^n a_n⊗a_0⊗...⊗a_{n-1} on A^{⊗(n+1)}.
Mat signed_rotation(const hopf::FinAlgebraData& a, int n);

}  // namespace bvkit::hochschild
