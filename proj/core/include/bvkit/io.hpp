#pragma once

#include <optional>
#include <string>

#include "bvkit/charmap.hpp"
#include "bvkit/checks.hpp"
#include "bvkit/fixtures.hpp"
#include "bvkit/schouten.hpp"

namespace bvkit::io {

// Fixture JSON:
// { "field": "Q" | {"Fp": p}, "dim": d, "basis": [names], "unit": [coeffs],
//   "mult": [[[coeffs] x d] x d], "comult": [per basis: [[j,k,coeff], ...]],
//   "counit": [coeffs], "antipode": [[coeffs] x d], "augmentation": [coeffs],
//   "level": "algebra|coalgebra|bialgebra|hopf", "name": ..., "notes": ... }
// Coefficients are integers or strings such as "-3/4".
struct LoadedFixture {
  fixtures::Fixture fixture;
  CheckReport certification;  // axioms at the declared level
};
LoadedFixture parse_fixture(const std::string& json_text, std::optional<Field> field_override = std::nullopt);
std::string fixture_to_json(const fixtures::Fixture& f);

// Action JSON: {"kind": "module" | "comodule", "map": [[row, col, coeff], ...]}
// in the layouts of charmap::ActionData.
charmap::ActionData parse_action(const std::string& json_text, const hopf::FinAlgebraData& h,
                                 const hopf::FinAlgebraData& a);

// Lie JSON: {"field": ..., "dim": d, "basis": [names],
//            "brackets": [[i, j, [coeffs]], ...] (i < j), "character": [coeffs]}
schouten::LieData parse_lie(const std::string& json_text, std::optional<Field> field_override = std::nullopt);

// "Q", "F2", "Fp:5" or "5".
Field parse_field(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace bvkit::io
