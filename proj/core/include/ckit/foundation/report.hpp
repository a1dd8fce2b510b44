#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckit/foundation/json_io.hpp"

namespace ckit {

struct CheckOutcome {
  std::string name;
  bool passed = true;
  Json detail;  // counterexample payload or statistics
};

// Ordered list of named pass/fail verdicts.
class Report {
 public:
  void add(std::string name, bool passed, Json detail = Json());
  void merge(const Report& other, const std::string& prefix = "");

  bool passed() const;
  const std::vector<CheckOutcome>& checks() const { return checks_; }
  const CheckOutcome* find(const std::string& name) const;
  const CheckOutcome* first_failure() const;

  Json to_json() const;

 private:
  std::vector<CheckOutcome> checks_;
};

}  // namespace ckit
