#pragma once

#include <cstdint>
#include <string_view>

namespace gmalie {

/// Name of the environment variable overriding `Budget::max_tuples`.
inline constexpr std::string_view kTupleBudgetEnv = "GMALIE_TUPLE_BUDGET";

/// Hard resource limits. Exceeding one raises BudgetExceededError; no
/// computation ever falls back to sampling or truncation.
struct Budget {
  /// Basis tuples d^n a predicate may enumerate per slot.
  std::uint64_t max_tuples = 100'000;
  /// Unknowns in a multilinear space computation.
  std::uint64_t max_unknowns = 10'000;

  /// Defaults, with max_tuples taken from GMALIE_TUPLE_BUDGET when set.
  static Budget from_environment();

  void require_tuples(std::uint64_t tuples, std::string_view what) const;
  void require_unknowns(std::uint64_t unknowns, std::string_view what) const;
};

/// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace gmalie
