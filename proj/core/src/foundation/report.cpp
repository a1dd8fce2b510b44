#include "ckit/foundation/report.hpp"

namespace ckit {

void Report::add(std::string name, bool passed, Json detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.detail});
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

const CheckOutcome* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

const CheckOutcome* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

Json Report::to_json() const {
  Json arr = Json::array();
  for (const auto& c : checks_) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.detail.is_null()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace ckit
