#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bvkit/checks.hpp"
#include "bvkit/cosimplicial.hpp"
#include "bvkit/linalg.hpp"
#include "bvkit/operad.hpp"

namespace bvkit::operad {

// Tables index classes by the representatives in H[n].class_reps().
// cup[(p,q)] has column i*betti[q]+j = class of a_i ∪ b_j; likewise bracket.
struct CochainReport {
  std::string operad_name;
  int max_degree = 0;
  std::vector<Subquotient> H;
  std::vector<std::size_t> betti;
  std::map<std::pair<int, int>, Mat> cup;
  std::map<std::pair<int, int>, Mat> bracket;
  std::map<int, Mat> B;  // H^n -> H^{n-1}
  std::map<int, std::vector<Vec>> sq;  // class of Sq(a_i) in H^{2n-1}
  CheckReport checks;
};

struct RingOptions {
  bool laws = true;         // Gerstenhaber and BV laws on cohomology
  bool chain_checks = true;  // d^2, d = {mu,-}, Leibniz rules, B identities
  int chain_samples = 3;
  std::size_t exact_limit = 1500;  // compare d with {mu,-} as matrices up to this dimension
  std::uint64_t seed = 5;
};

// Needs arity max_degree + 1 in the slice.
CochainReport cohomology_ring(const OperadSlice& op, int max_degree, const RingOptions& opt = {});

struct LambdaReport {
  LambdaComplex complex;
  std::vector<std::size_t> betti;
  std::map<std::pair<int, int>, Mat> bracket;  // on HC_λ, classes in complex.cohomology
  CheckReport checks;
};

// HC_λ with its degree -1 bracket. random_pairs random λ-invariant pairs per
// arity pair are checked for closure of the bracket.
LambdaReport lambda_cohomology(const OperadSlice& op, int max_degree, int random_pairs = 100,
                               std::uint64_t seed = 9);

// Map induced on cohomology by cochain maps phi[n] : C^n -> D^n, in class
// coordinates. Checks that cycles and boundaries are preserved and that cup,
// bracket, and B (where both tables have them) commute with it.
struct InducedMap {
  std::vector<Mat> maps;
  std::vector<std::size_t> ranks;
  CheckReport checks;
  bool injective() const;
};
InducedMap induced_map(const CochainReport& src, const CochainReport& dst, const std::vector<Mat>& phi);
// Same on HC_λ; phi must send λ-invariant cochains to λ-invariant cochains.
InducedMap induced_map(const LambdaReport& src, const LambdaReport& dst, const std::vector<Mat>& phi);

}  // namespace bvkit::operad
