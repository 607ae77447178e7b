#include "nearvec/seed.hpp"

#include <algorithm>
#include <string>

#include "nearvec/closure.hpp"
#include "nearvec/ege.hpp"
#include "nearvec/error.hpp"

namespace nearvec {
namespace {

std::uint64_t isqrt(std::uint64_t x) {
  std::uint64_t lo = 0;
  std::uint64_t hi = std::min<std::uint64_t>(x, 4'294'967'295ULL) + 1;
  while (hi - lo > 1) {  // invariant: lo^2 <= x < hi^2
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid * mid <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::uint64_t u_closed(std::uint64_t k, std::uint64_t order) {
  return ((order - 2) * (k == 0 ? 0 : k - 1) + 2) * k / 2;
}

}  // namespace

std::uint64_t u_max(std::uint64_t k, std::uint64_t order) {
  if (order < 3) throw Error("seed formulas need |R| >= 3");
  if (k == 0) return 0;
  std::uint64_t u = 1;
  for (std::uint64_t i = 1; i < k; ++i) u += (order - 2) * i + 1;
  if (u != u_closed(k, order)) throw Error("u_k recurrence disagrees with closed form");
  return u;
}

std::uint64_t seed_number(std::uint64_t m, std::uint64_t order) {
  if (m < 1) throw Error("m must be at least 1");
  if (order < 3) throw Error("seed formulas need |R| >= 3");
  if (order > (1u << 20) || m > (std::uint64_t{1} << 32)) throw Error("seed_number arguments too large");
  const std::int64_t r = static_cast<std::int64_t>(order);
  const std::uint64_t d = static_cast<std::uint64_t>((r - 4) * (r - 4)) + 8 * (order - 2) * m;
  const std::uint64_t s = isqrt(d);
  const std::int64_t num = r - 4 + static_cast<std::int64_t>(s);  // >= 1 since m >= 1
  const std::int64_t den = 2 * (r - 2);
  std::uint64_t k = 0;
  if (s * s == d) {
    k = static_cast<std::uint64_t>((num + den - 1) / den);
  } else {
    k = static_cast<std::uint64_t>(num / den) + 1;
  }
  if (!(u_max(k - 1, order) < m && m <= u_max(k, order))) {
    throw Error("seed_number inconsistent with u_k for m=" + std::to_string(m));
  }
  return k;
}

SeedMatrix build_seed(std::size_t m, const NearfieldPtr& nf, std::size_t max_width) {
  if (nf->is_field()) throw Error("seed construction needs a proper nearfield");
  if (nf->order() < 5) throw Error("seed construction needs |R| >= 5");
  if (m < 1) throw Error("m must be at least 1");
  if (m > max_width) throw Error("m exceeds the seed width limit " + std::to_string(max_width));

  SeedMatrix out{Matrix(nf, m), 0, {}};
  const std::size_t k = seed_number(m, nf->order());
  out.k = k;
  for (std::uint32_t c = 2; c < nf->order(); ++c) out.s_order.push_back(Element{c});

  std::vector<Vector> columns;
  columns.reserve(m);
  for (std::size_t i = 0; i < k && columns.size() < m; ++i) {
    Vector e = zero_vector(k);
    e[i] = Nearfield::one();
    columns.push_back(std::move(e));
  }
  for (std::size_t j = 2; j <= k && columns.size() < m; ++j) {
    for (std::size_t counter = 0; counter + 2 <= j && columns.size() < m; ++counter) {
      for (Element s : out.s_order) {
        if (columns.size() == m) break;
        Vector col = zero_vector(k);
        for (std::size_t r = 0; r <= counter; ++r) col[r] = Nearfield::one();
        for (std::size_t r = counter + 1; r < j; ++r) col[r] = s;
        columns.push_back(std::move(col));
      }
    }
  }
  if (columns.size() != m) throw Error("seed construction produced too few columns");

  std::vector<Vector> rows(k, zero_vector(m));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t r = 0; r < k; ++r) rows[r][c] = columns[c][r];
  }
  out.matrix = Matrix(nf, m, std::move(rows));
  return out;
}

SeedCheck check_seed(const Matrix& v, std::uint64_t budget) {
  SeedCheck out;
  out.m = v.cols();
  const GenDecomposition dec = ege(v);
  out.dimension = dec.dimension;
  out.ege_ok = dec.canonical && dec.dimension == v.cols();
  if (saturating_pow(v.nf().order(), v.cols()) <= budget) {
    out.closure_checked = true;
    out.closure_ok = gen_closure(make_set(v.nf_ptr(), v.cols(), v.row_list(), budget)).is_full();
  }
  out.ok = out.ege_ok && (!out.closure_checked || out.closure_ok);
  return out;
}

bool verify_seed(const Matrix& v, std::uint64_t budget) { return check_seed(v, budget).ok; }

std::optional<std::vector<Vector>> find_generating_set(const NearfieldPtr& nf, std::size_t m,
                                                       std::size_t size, std::uint64_t budget) {
  const std::uint64_t space = saturating_pow(nf->order(), m);
  require_budget(space, budget, "generating set search");
  require_budget(saturating_pow(space, size), budget * 1000, "generating set search");
  VectorSet codec(nf, m, budget);
  // Nondecreasing code tuples over nonzero vectors.
  std::vector<std::uint64_t> idx(size, 1);
  if (size == 0) {
    if (m == 0) return std::vector<Vector>{};
    return std::nullopt;
  }
  while (true) {
    std::vector<Vector> vs;
    for (auto c : idx) vs.push_back(codec.decode(c));
    if (gen_closure(make_set(nf, m, vs, budget)).is_full()) return vs;
    std::size_t f = size;
    while (f > 0 && idx[f - 1] + 1 >= space) --f;
    if (f == 0) return std::nullopt;
    ++idx[f - 1];
    for (std::size_t g = f; g < size; ++g) idx[g] = idx[f - 1];
  }
}

}  // namespace nearvec
