#include "nearvec/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nearvec/closure.hpp"
#include "nearvec/error.hpp"

namespace nearvec {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("count overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error("count overflows 64 bits");
  return out;
}

void collect_partitions(std::size_t rest, std::size_t parts, std::size_t max_part,
                        std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (parts == 0) {
    if (rest == 0) out.push_back(cur);
    return;
  }
  if (rest < parts) return;
  const std::size_t hi = std::min(max_part, rest - (parts - 1));
  for (std::size_t part = hi; part >= 1; --part) {
    if (part * parts < rest) break;  // remaining parts are at most `part`
    cur.push_back(part);
    collect_partitions(rest - part, parts - 1, part, cur, out);
    cur.pop_back();
  }
}

// Next nonzero-entry assignment, last position fastest; false when exhausted.
bool advance(std::vector<std::uint32_t>& digit, std::uint32_t nonzero) {
  for (std::size_t f = digit.size(); f-- > 0;) {
    if (digit[f] + 1 < nonzero) {
      ++digit[f];
      return true;
    }
    digit[f] = 0;
  }
  return false;
}

}  // namespace

void PartitionTable::grow(std::size_t t, std::size_t k) {
  if (memo_.size() <= t) memo_.resize(t + 1);
  for (auto& row : memo_) {
    if (row.size() <= k) row.resize(k + 1, UINT64_MAX);
  }
}

std::uint64_t PartitionTable::get(std::size_t t, std::size_t k) {
  if (k == 0) return t == 0 ? 1 : 0;
  if (t < k) return 0;
  grow(t, k);
  if (memo_[t][k] != UINT64_MAX) return memo_[t][k];
  const std::uint64_t v = checked_add(get(t - 1, k - 1), get(t - k, k));
  grow(t, k);
  memo_[t][k] = v;
  return v;
}

std::uint64_t partitions_into_parts(std::size_t t, std::size_t k) {
  PartitionTable table;
  return table.get(t, k);
}

std::vector<std::vector<std::size_t>> list_partitions(std::size_t t, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  if (k == 0) {
    if (t == 0) out.emplace_back();
    return out;
  }
  collect_partitions(t, k, t, cur, out);
  return out;
}

std::uint64_t count_subgroups(std::size_t m, std::size_t k, std::uint64_t order) {
  if (k < 1 || k > m) throw Error("need 1 <= k <= m");
  if (order < 2) throw Error("nearfield order must be at least 2");
  PartitionTable table;
  std::uint64_t total = 0;
  std::uint64_t power = 1;  // (|R|-1)^(t-k)
  for (std::size_t t = k; t <= m; ++t) {
    total = checked_add(total, checked_mul(table.get(t, k), power));
    if (t < m) power = checked_mul(power, order - 1);
  }
  return total;
}

std::vector<Matrix> enumerate_canonical(std::size_t m, std::size_t k, const NearfieldPtr& nf,
                                        std::uint64_t budget) {
  require_budget(count_subgroups(m, k, nf->order()), budget, "canonical matrix listing");
  const std::uint32_t nonzero = nf->order() - 1;
  std::vector<Matrix> out;
  for (std::size_t t = k; t <= m; ++t) {
    for (const auto& parts : list_partitions(t, k)) {
      // Free positions: the non-leading columns of every block.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      std::size_t start = 0;
      std::vector<Vector> rows(k, zero_vector(m));
      for (std::size_t i = 0; i < k; ++i) {
        rows[i][start] = Nearfield::one();
        for (std::size_t c = start + 1; c < start + parts[i]; ++c) free.emplace_back(i, c);
        start += parts[i];
      }
      // Odometer over nonzero entries, last free position varying fastest.
      std::vector<std::uint32_t> digit(free.size(), 0);
      while (true) {
        for (std::size_t f = 0; f < free.size(); ++f) {
          rows[free[f].first][free[f].second] = Element{digit[f] + 1};
        }
        out.emplace_back(nf, m, rows);
        if (!advance(digit, nonzero)) break;
      }
    }
  }
  return out;
}

std::uint64_t count_subgroup_orbits(std::size_t m, std::size_t k, const NearfieldPtr& nf,
                                    std::uint64_t budget) {
  if (m > 6) throw Error("orbit count supports m <= 6");
  const auto matrices = enumerate_canonical(m, k, nf, budget);
  std::vector<std::size_t> perm(m);
  std::set<std::vector<std::uint64_t>> orbits;
  for (const auto& mat : matrices) {
    const VectorSet group = gen_closure(make_set(nf, m, mat.row_list(), budget));
    std::vector<Vector> members = group.sorted_members();
    std::vector<std::uint64_t> best;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::uint64_t> key;
      key.reserve(members.size());
      Vector w(m);
      for (const auto& v : members) {
        for (std::size_t i = 0; i < m; ++i) w[i] = v[perm[i]];
        key.push_back(group.encode(w));
      }
      std::sort(key.begin(), key.end());
      if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    orbits.insert(std::move(best));
  }
  return orbits.size();
}

}  // namespace nearvec
