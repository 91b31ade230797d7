#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bvkit/hopf.hpp"

namespace bvkit::fixtures {

struct Fixture {
  std::string name;
  hopf::FinAlgebraData data;
  hopf::Level level = hopf::Level::algebra;
  std::string notes;
};

// Group given by its multiplication table over elements 0..n-1 (0 is the identity).
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> mul;
  std::size_t inverse(std::size_t g) const;
};

GroupTable cyclic_group(std::size_t n);
// Elements e,(12),(13),(23),(123),(132), composition right to left.
GroupTable symmetric_group_s3();

hopf::FinAlgebraData group_algebra(const Field& f, const GroupTable& g);
hopf::FinAlgebraData dual_group_algebra(const Field& f, const GroupTable& g);
// g^2 = 1, x^2 = 0, xg = -gx, basis 1, g, x, gx. Needs characteristic != 2.
hopf::FinAlgebraData sweedler(const Field& f);
// k[x]/(x^2) with x primitive. A bialgebra only in characteristic 2.
hopf::FinAlgebraData exterior_x(const Field& f);
hopf::FinAlgebraData trivial(const Field& f);
// k[x]/(x^2) as an augmented algebra.
hopf::FinAlgebraData truncated_x2(const Field& f);

std::vector<std::string> builtin_names();
// Builds and re-validates a fixture; the field defaults to Q.
Fixture builtin(const std::string& name, std::optional<Field> field = std::nullopt);

}  // namespace bvkit::fixtures
