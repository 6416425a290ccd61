#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gmalie {

enum class Status { Pass, Fail, Unknown };

std::string_view to_string(Status s);

/// One named check with its outcome. `witness` is empty on pass and names
/// the concrete counterexample (basis tuple, element, ...) on failure.
struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string witness;

  static Check pass(std::string name, std::string note = {}) { return {std::move(name), Status::Pass, std::move(note)}; }
  static Check fail(std::string name, std::string witness) {
    return {std::move(name), Status::Fail, std::move(witness)};
  }
  static Check unknown(std::string name, std::string reason) {
    return {std::move(name), Status::Unknown, std::move(reason)};
  }
  static Check from_bool(std::string name, bool ok, std::string witness_if_failed) {
    return ok ? pass(std::move(name)) : fail(std::move(name), std::move(witness_if_failed));
  }
};

class CheckReport {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void append(const CheckReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;
  bool has_unknown() const;
  const Check* first_failure() const;
  const Check* find(std::string_view name) const;

 private:
  std::vector<Check> checks_;
};

/// "(i, j, k)" for a basis index tuple.
std::string format_tuple(const std::vector<std::size_t>& indices);

}  // namespace gmalie
