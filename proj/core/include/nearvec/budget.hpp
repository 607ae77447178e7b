#pragma once

#include <cstdint>

namespace nearvec {

inline constexpr std::uint64_t kDefaultElementBudget = 1'000'000;
inline constexpr const char* kBudgetEnvVar = "NEARVEC_ELEMENT_BUDGET";

// Maximum number of module elements an exhaustive routine may touch.
// Reads NEARVEC_ELEMENT_BUDGET once per call; falls back to 10^6.
std::uint64_t element_budget();

// base^exp, or nullopt-like UINT64_MAX saturation when it overflows.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

// Throws BudgetExceeded when `needed` exceeds `budget`.
void require_budget(std::uint64_t needed, std::uint64_t budget, const char* what);

}  // namespace nearvec
