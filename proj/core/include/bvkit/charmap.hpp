#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bvkit/barcobar.hpp"
#include "bvkit/checks.hpp"
#include "bvkit/cohomology.hpp"
#include "bvkit/hopf.hpp"

namespace bvkit::charmap {

enum class ActionKind { module, comodule };

// module: H ⊗ A -> A with h·a at column h*dim A + a.
// comodule: A -> A ⊗ H, a ↦ a^{(1)} ⊗ a^{(2)}.
struct ActionData {
  ActionKind kind = ActionKind::module;
  Mat map;
};

ActionData regular_coaction(const hopf::FinAlgebraData& h);  // Δ on A = H
ActionData adjoint_action(const hopf::FinAlgebraData& h);    // h·a = h^{(1)} a S(h^{(2)})
ActionData trivial_action(const hopf::FinAlgebraData& h, const hopf::FinAlgebraData& a);
ActionData trivial_coaction(const hopf::FinAlgebraData& h, const hopf::FinAlgebraData& a);
// A right H-comodule algebra is a left H^∨-module algebra through f·a = a^{(1)} f(a^{(2)}).
ActionData coaction_to_action(const hopf::FinAlgebraData& h, const hopf::FinAlgebraData& a, const ActionData& act);

CheckReport check_action(const hopf::FinAlgebraData& h, const hopf::FinAlgebraData& a, const ActionData& act);

// Φ_n : H^{⊗n} -> End(A)(n), (h_1..h_n) ↦ (a ↦ (h_1·a_1)...(h_n·a_n)), for n = 0..N.
std::vector<Mat> phi_module(const hopf::FinAlgebraData& h, const hopf::FinAlgebraData& a, const ActionData& act,
                            int max_arity);
// Φ_n : (H^{⊗n})^∨ -> End(A)(n), f ↦ (a ↦ a_1^{(1)}...a_n^{(1)} f(a_1^{(2)},...,a_n^{(2)})).
std::vector<Mat> phi_comodule(const hopf::FinAlgebraData& h, const hopf::FinAlgebraData& a, const ActionData& act,
                              int max_arity);

// tau is a trace on A; datum is σ (comodule case) or the character δ (module case).
struct TraceData {
  Vec tau;
  Vec datum;
};

// Right integral λ of H^∨: λ(k^{(1)}) k^{(2)} = λ(k) 1. Throws if H is not Hopf.
Vec dual_right_integral(const hopf::FinAlgebraData& h);
// τ(a) = λ(σ^{-1} a) on A = H.
TraceData integral_trace(const hopf::FinAlgebraData& h, const Vec& sigma);

// Trace property, non-degeneracy, and σ-invariance τ(a^{(1)}) a^{(2)} = τ(a) σ
// (comodule) or δ-invariance τ(h·a) = δ(h) τ(a) (module).
CheckReport check_trace(const hopf::FinAlgebraData& h, const hopf::FinAlgebraData& a, const ActionData& act,
                        const TraceData& tr);

// Cyclic module C_*(A,A): faces d_i(a_0..a_{n+1}) multiply a_i a_{i+1}, the
// last one a_{n+1} a_0; s_i inserts 1 after a_i; t(a_0..a_n) = (a_n, a_0..a_{n-1}).
barcobar::SimplicialModule hochschild_cyclic(const hopf::FinAlgebraData& a, int top_degree);

// γ_n(a_0..a_n) = τ(a_0 a_1^{(1)}...a_n^{(1)}) a_1^{(2)} ⊗ ... ⊗ a_n^{(2)} : A^{⊗n+1} -> H^{⊗n}.
std::vector<Mat> gamma_chain(const hopf::FinAlgebraData& h, const hopf::FinAlgebraData& a, const ActionData& act,
                             const Vec& tau, int top_degree);

struct CharacteristicReport {
  ActionKind kind = ActionKind::module;
  std::vector<Mat> phi;
  std::vector<Mat> chi;    // Ad∘C*(A,Θ)∘Φ into C_*(A,A)^∨
  std::vector<Mat> gamma;  // comodule case only
  std::optional<operad::InducedMap> on_cohomology;  // H(Φ) into HH*(A,A)
  std::optional<operad::InducedMap> on_cyclic;      // into HC_λ(A)
  CheckReport checks;
};

struct CharacteristicOptions {
  bool cohomology = true;
  int random_pairs = 100;
  operad::RingOptions ring;
};

// Module case: Cotor_H and HC_{(δ,1)}(H) from the cobar operad.
// Comodule case: Ext_H and HC~_{(ε,σ)}(H) from the dual bar operad.
CharacteristicReport characteristic_map(const hopf::FinAlgebraData& h, const hopf::FinAlgebraData& a,
                                        const ActionData& act, const TraceData& tr, int max_degree,
                                        const CharacteristicOptions& opt = {});

}  // namespace bvkit::charmap
