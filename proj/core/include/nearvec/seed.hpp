#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nearvec/budget.hpp"
#include "nearvec/nearfield.hpp"
#include "nearvec/vectors.hpp"

namespace nearvec {

inline constexpr std::size_t kMaxSeedWidth = 100'000;

// Largest m whose seed matrix has k rows: u_1 = 1, u_{k+1} = u_k + (|R|-2)k + 1,
// equal to ((|R|-2)(k-1) + 2) k / 2. u_max(0, .) = 0. Throws Error for order < 3.
std::uint64_t u_max(std::uint64_t k, std::uint64_t order);

// Row count of V_m: ceil((|R| + sqrt(D) - 4) / (2(|R|-2))) with
// D = |R|^2 + 8(|R|-2)m - 8|R| + 16, evaluated exactly.
// Throws Error for m < 1 or order < 3.
std::uint64_t seed_number(std::uint64_t m, std::uint64_t order);

struct SeedMatrix {
  Matrix matrix;                // k x m
  std::size_t k = 0;
  std::vector<Element> s_order;  // R minus {0, 1}, ascending code
};

// V_m: the identity columns e_1..e_k followed by the stage-j columns for
// j = 2..k (counter = 0..j-2, then s in s_order): ones in rows 0..counter,
// s in rows counter+1..j-1, zero below; truncated to m columns.
// Throws Error for a field, |R| < 5, m < 1 or m > max_width.
SeedMatrix build_seed(std::size_t m, const NearfieldPtr& nf, std::size_t max_width = kMaxSeedWidth);

struct SeedCheck {
  std::size_t m = 0;
  std::size_t dimension = 0;       // ege dimension
  bool ege_ok = false;             // dimension == m and ege canonical
  bool closure_checked = false;    // |R|^m within budget
  bool closure_ok = false;         // gen of the rows is all of R^m
  bool ok = false;
};

SeedCheck check_seed(const Matrix& v, std::uint64_t budget = element_budget());

// True iff the rows generate R^m (ege dimension equals the column count,
// cross-checked by closure when small enough).
bool verify_seed(const Matrix& v, std::uint64_t budget = element_budget());

// Exhaustively searches for `size` vectors generating R^m; returns one if found.
std::optional<std::vector<Vector>> find_generating_set(const NearfieldPtr& nf, std::size_t m,
                                                       std::size_t size,
                                                       std::uint64_t budget = element_budget());

}  // namespace nearvec
