#include "gmalie/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>

#include "gmalie/error.hpp"

namespace gmalie {

Budget Budget::from_environment() {
  Budget b;
  const char* raw = std::getenv(std::string(kTupleBudgetEnv).c_str());
  if (raw == nullptr || *raw == '\0') return b;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw ParseError(std::string(kTupleBudgetEnv) + " must be a positive integer, got '" + std::string(text) + "'");
  }
  b.max_tuples = value;
  return b;
}

void Budget::require_tuples(std::uint64_t tuples, std::string_view what) const {
  if (tuples > max_tuples) {
    throw BudgetExceededError(std::string(what) + " needs " + std::to_string(tuples) + " basis tuples; budget is " +
                              std::to_string(max_tuples) + " (set " + std::string(kTupleBudgetEnv) + ")");
  }
}

void Budget::require_unknowns(std::uint64_t unknowns, std::string_view what) const {
  if (unknowns > max_unknowns) {
    throw BudgetExceededError(std::string(what) + " needs " + std::to_string(unknowns) + " unknowns; budget is " +
                              std::to_string(max_unknowns));
  }
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

}  // namespace gmalie
