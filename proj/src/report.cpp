#include "afp/report.hpp"

#include <algorithm>

#include "afp/types.hpp"

namespace afp {

void VerificationReport::pass(std::string name, std::string detail, nlohmann::json witness) {
  checks_.push_back(Check{std::move(name), true, std::move(detail), std::move(witness)});
}

void VerificationReport::fail(std::string name, std::string detail, nlohmann::json witness) {
  if (!witness.is_object()) {
    throw Error("failed check '" + name + "' needs a witness object");
  }
  checks_.push_back(Check{std::move(name), false, std::move(detail), std::move(witness)});
}

void VerificationReport::add(Check check) {
  if (check.passed) {
    pass(std::move(check.name), std::move(check.detail), std::move(check.witness));
  } else {
    fail(std::move(check.name), std::move(check.detail), std::move(check.witness));
  }
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::size_t VerificationReport::num_failed() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

const Check* VerificationReport::find(std::string_view name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

nlohmann::json VerificationReport::to_json() const {
  auto out = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json entry = {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    if (!c.witness.is_null()) entry["witness"] = c.witness;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace afp
