#pragma once

#include <string>
#include <vector>

namespace bvkit {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

class CheckReport {
 public:
  void add(std::string name, bool pass, std::string witness = {});
  void append(const CheckReport& other, const std::string& prefix = {});
  bool all_pass() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;
  // Name and witness of the first failure, empty if none.
  std::string first_failure() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace bvkit
