#include "gmalie/report.hpp"

#include <algorithm>

namespace gmalie {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Unknown:
      return "unknown";
  }
  return "unknown";
}

bool CheckReport::passed() const {
  return std::none_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Fail; });
}

bool CheckReport::has_unknown() const {
  return std::any_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Unknown; });
}

const Check* CheckReport::first_failure() const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Fail; });
  return it == checks_.end() ? nullptr : &*it;
}

const Check* CheckReport::find(std::string_view name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

std::string format_tuple(const std::vector<std::size_t>& indices) {
  std::string s = "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(indices[i]);
  }
  return s + ")";
}

}  // namespace gmalie
