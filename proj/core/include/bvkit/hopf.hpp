#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bvkit/checks.hpp"
#include "bvkit/linalg.hpp"

namespace bvkit::hopf {

enum class Level { algebra, coalgebra, bialgebra, hopf };
enum class Side { left, right };

Level parse_level(const std::string& s);
std::string level_name(Level l);

// Structure constants over a named basis x_0..x_{d-1}. Tensor indices follow
// tuple_index: x_a ⊗ x_b is index a*d+b.
struct FinAlgebraData {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  Mat mult;  // d x d^2
  Vec unit;
  std::optional<Mat> comult;  // d^2 x d
  std::optional<Vec> counit;
  std::optional<Mat> antipode;
  std::optional<Vec> augmentation;

  struct Flags {
    bool algebra = false;
    bool coalgebra = false;
    bool bialgebra = false;
    bool hopf = false;
  } flags;

  Vec product(const Vec& a, const Vec& b) const;
  Vec basis_product(std::size_t a, std::size_t b) const { return mult.column_dense(a * dim + b); }
  Mat left_mult(const Vec& a) const;
  Mat right_mult(const Vec& a) const;
  Vec basis(std::size_t i) const { return unit_vec(field, dim, i); }

  const Mat& delta() const;
  const Vec& eps() const;
  const Mat& S() const;
  Vec coproduct(const Vec& a) const { return delta().apply(a); }
  Scalar counit_of(const Vec& a) const { return dot(eps(), a); }
  // Algebra augmentation: the explicit one if given, else the counit.
  const Vec& augmentation_form() const;
  bool has_augmentation() const { return augmentation.has_value() || counit.has_value(); }

  std::string describe(const Vec& v) const;
};

CheckReport check_axioms(const FinAlgebraData& a, Level level);
// Runs check_axioms and sets the flags up to `level` when everything passes.
CheckReport certify(FinAlgebraData& a, Level level);

FinAlgebraData dualize(const FinAlgebraData& h);

Mat eta_eps(const FinAlgebraData& h);
Mat convolution(const Mat& f, const Mat& g, const FinAlgebraData& h);

bool is_group_like(const FinAlgebraData& h, const Vec& v);
bool is_character(const FinAlgebraData& h, const Vec& f);
// Exhaustive over F_p when p^d <= budget; otherwise candidates must be given.
std::vector<Vec> find_group_likes(const FinAlgebraData& h, const std::vector<Vec>* candidates = nullptr,
                                  std::size_t budget = 1u << 20);
std::vector<Vec> find_characters(const FinAlgebraData& h, const std::vector<Vec>* candidates = nullptr,
                                 std::size_t budget = 1u << 20);

std::vector<Vec> integrals(const FinAlgebraData& h, Side side);
// alpha with t*h = alpha(h) t for a nonzero left integral t.
Vec distinguished_grouplike(const FinAlgebraData& h);
bool is_unimodular(const FinAlgebraData& h);

struct FrobeniusData {
  Mat theta;  // theta(a)(b) = phi(ab); column a holds theta(x_a) in the dual basis
  Vec phi;
  Mat nakayama;
  bool symmetric = false;
};

// Frobenius structure given by a form phi; throws CheckFailed when degenerate.
FrobeniusData frobenius_from_form(const FinAlgebraData& a, const Vec& phi);
// phi = lambda must be a one-sided integral of the dual Hopf algebra.
FrobeniusData frobenius_from_integral(const FinAlgebraData& h, const Vec& lambda, Side side);
// sigma_N with phi(ab) = phi(sigma_N(b) a).
Mat nakayama(const FrobeniusData& frob, const FinAlgebraData& a);
CheckReport check_frobenius(const FrobeniusData& frob, const FinAlgebraData& a);

// b ↼ alpha = alpha(b_(1)) b_(2)
Vec right_hit(const FinAlgebraData& h, const Vec& b, const Vec& alpha);

Mat twisted_antipode(const FinAlgebraData& h, const Vec& delta);

enum class Convention { connes_moscovici, khalkhali_rangipour };

struct ModularPair {
  Vec delta;  // character of H
  Vec sigma;  // group-like of H
  Convention convention = Convention::connes_moscovici;
};

CheckReport check_modular_pair(const FinAlgebraData& h, const ModularPair& mp);
CheckReport check_modular_pair_involution(const FinAlgebraData& h, const ModularPair& mp);
// tau_1(h) = S~(h) sigma for CM; t_1(k) = delta(k_(2)) sigma S(k_(1)) for KR.
Mat tau_one(const FinAlgebraData& h, const ModularPair& mp);

// Trace forms: phi with phi(ab) = phi(ba).
std::vector<Vec> trace_forms(const FinAlgebraData& a);
bool is_nondegenerate_form(const FinAlgebraData& a, const Vec& phi);

struct SymmetryAnalysis {
  bool symmetric = false;
  std::optional<Vec> symmetric_form;
  bool exhaustive = false;  // the symmetric search covered every trace form
  bool unimodular = false;
  bool s2_inner = false;
  std::optional<Vec> inner_witness;  // u with S^2(h) u = u h
  // beta(h,k) = lambda(u h k) built from the inner witness and a right integral
  std::optional<Vec> beta_form;
  bool beta_symmetric_nondegenerate = false;
};

SymmetryAnalysis analyze_symmetry(const FinAlgebraData& h, std::uint64_t seed = 1);

bool is_invertible_element(const FinAlgebraData& a, const Vec& u);
std::optional<Vec> invert_element(const FinAlgebraData& a, const Vec& u);
bool is_algebra_morphism(const FinAlgebraData& a, const FinAlgebraData& b, const Mat& f);

}  // namespace bvkit::hopf
