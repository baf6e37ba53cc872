#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace afp {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  // Always an object for failed checks; null when passed without a witness.
  nlohmann::json witness;
};

/// Ordered pass/fail record, one entry per axiom or theorem checked.
class VerificationReport {
 public:
  void pass(std::string name, std::string detail = {}, nlohmann::json witness = nullptr);
  void fail(std::string name, std::string detail, nlohmann::json witness);
  void add(Check check);
  void append(const VerificationReport& other);

  const std::vector<Check>& checks() const { return checks_; }
  bool all_passed() const;
  std::size_t num_failed() const;
  const Check* find(std::string_view name) const;

  nlohmann::json to_json() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace afp
