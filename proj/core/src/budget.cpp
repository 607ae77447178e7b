#include "nearvec/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "nearvec/error.hpp"

namespace nearvec {

std::uint64_t element_budget() {
  const char* raw = std::getenv(kBudgetEnvVar);
  if (raw == nullptr || *raw == '\0') return kDefaultElementBudget;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw Error(std::string("invalid ") + kBudgetEnvVar + " value: " + raw);
  }
  return value;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

void require_budget(std::uint64_t needed, std::uint64_t budget, const char* what) {
  if (needed > budget) {
    throw BudgetExceeded(std::string("budget exceeded: ") + what + " needs " +
                         std::to_string(needed) + " elements, budget is " +
                         std::to_string(budget));
  }
}

}  // namespace nearvec
