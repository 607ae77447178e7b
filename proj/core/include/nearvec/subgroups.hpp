#pragma once

#include <cstdint>
#include <vector>

#include "nearvec/budget.hpp"
#include "nearvec/nearfield.hpp"
#include "nearvec/vectors.hpp"

namespace nearvec {

// Memoized p_k(t), the number of partitions of t into exactly k parts:
// p_k(t) = p_{k-1}(t-1) + p_k(t-k), p_0(0) = 1.
class PartitionTable {
 public:
  std::uint64_t get(std::size_t t, std::size_t k);

 private:
  void grow(std::size_t t, std::size_t k);

  // memo_[t][k]
  std::vector<std::vector<std::uint64_t>> memo_;
};

std::uint64_t partitions_into_parts(std::size_t t, std::size_t k);

// Partitions of t into exactly k parts, each sorted descending, in
// lexicographically descending order.
std::vector<std::vector<std::size_t>> list_partitions(std::size_t t, std::size_t k);

// sum_{t=k}^{m} p_k(t) (|R|-1)^(t-k): the number of EGE-canonical k-row
// matrices with m columns whose block sizes are sorted descending.
// Throws Error unless 1 <= k <= m; throws on 64-bit overflow.
std::uint64_t count_subgroups(std::size_t m, std::size_t k, std::uint64_t order);

// The canonical shapes counted by count_subgroups. For each t in [k, m] and
// each partition of t into k parts (descending, consecutive column blocks),
// row i has 1 at the start of block i and arbitrary nonzero entries in the
// rest of that block; columns t..m-1 are zero. Ordered by t, then partition,
// then entry codes. Throws BudgetExceeded when the count exceeds `budget`.
std::vector<Matrix> enumerate_canonical(std::size_t m, std::size_t k, const NearfieldPtr& nf,
                                        std::uint64_t budget = element_budget());

// Number of distinct subgroups among the enumerated ones after identifying
// subgroups related by a coordinate permutation. Comparison only; the count
// returned by count_subgroups does not quotient by permutations.
// Requires |R|^m within the budget and m <= 6.
std::uint64_t count_subgroup_orbits(std::size_t m, std::size_t k, const NearfieldPtr& nf,
                                    std::uint64_t budget = element_budget());

}  // namespace nearvec
