#include "bvkit/checks.hpp"

#include <algorithm>

namespace bvkit {

void CheckReport::add(std::string name, bool pass, std::string witness) {
  checks_.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.pass, c.witness});
}

bool CheckReport::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

const Check* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string CheckReport::first_failure() const {
  for (const auto& c : checks_)
    if (!c.pass) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
  return {};
}

}  // namespace bvkit
