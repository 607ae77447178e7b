#include "nearvec/closure.hpp"

#include <algorithm>
#include <string>

#include "nearvec/error.hpp"

namespace nearvec {

VectorSet::VectorSet(NearfieldPtr nf, std::size_t m, std::uint64_t budget)
    : nf_(std::move(nf)), m_(m) {
  space_ = saturating_pow(nf_->order(), m);
  require_budget(space_, budget, "vector set over R^m");
  radix_.resize(m);
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < m; ++i) {
    radix_[i] = r;
    r *= nf_->order();
  }
  bitmap_.assign(space_, 0);
}

std::uint64_t VectorSet::encode(std::span<const Element> v) const {
  if (v.size() != m_) throw Error("vector length does not match set dimension");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < m_; ++i) code += v[i].code * radix_[i];
  return code;
}

Vector VectorSet::decode(std::uint64_t code) const {
  Vector v(m_);
  for (std::size_t i = 0; i < m_; ++i) {
    v[i] = Element{static_cast<std::uint32_t>(code % nf_->order())};
    code /= nf_->order();
  }
  return v;
}

std::uint64_t VectorSet::add_codes(std::uint64_t a, std::uint64_t b) const {
  const std::uint32_t order = nf_->order();
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < m_; ++i) {
    const Element x{static_cast<std::uint32_t>(a % order)};
    const Element y{static_cast<std::uint32_t>(b % order)};
    out += nf_->add(x, y).code * radix_[i];
    a /= order;
    b /= order;
  }
  return out;
}

bool VectorSet::insert_code(std::uint64_t code) {
  if (bitmap_[code] != 0) return false;
  bitmap_[code] = 1;
  members_.push_back(code);
  return true;
}

std::vector<Vector> VectorSet::sorted_members() const {
  std::vector<std::uint64_t> codes = members_;
  std::sort(codes.begin(), codes.end());
  std::vector<Vector> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(decode(c));
  return out;
}

bool operator==(const VectorSet& a, const VectorSet& b) {
  return a.m_ == b.m_ && a.nf_->order() == b.nf_->order() && a.bitmap_ == b.bitmap_;
}

VectorSet make_set(NearfieldPtr nf, std::size_t m, std::span<const Vector> vectors,
                   std::uint64_t budget) {
  VectorSet out(std::move(nf), m, budget);
  for (const auto& v : vectors) out.insert(v);
  return out;
}

namespace {

// Extends the subgroup `group` (which must already be additively closed)
// by generator code g.
void extend_subgroup(VectorSet& group, std::uint64_t g) {
  if (group.contains_code(g)) return;
  const std::size_t base = group.size();
  const std::uint32_t p = group.nf().p();
  // H is a subgroup of an elementary abelian p-group, so H, H+g, ..., H+(p-1)g
  // are pairwise distinct cosets whenever g is not in H.
  std::uint64_t shift = g;
  for (std::uint32_t i = 1; i < p; ++i) {
    for (std::size_t idx = 0; idx < base; ++idx) {
      group.insert_code(group.add_codes(group.member_codes()[idx], shift));
    }
    shift = group.add_codes(shift, g);
  }
}

VectorSet span_of_codes(const NearfieldPtr& nf, std::size_t m, std::uint64_t budget,
                        const std::vector<std::uint64_t>& generators) {
  VectorSet group(nf, m, budget);
  group.insert_code(0);
  for (auto g : generators) extend_subgroup(group, g);
  return group;
}

std::uint64_t budget_of(const VectorSet& s) { return std::max<std::uint64_t>(s.space_size(), 1); }

}  // namespace

VectorSet additive_span(NearfieldPtr nf, std::size_t m, std::span<const Vector> generators,
                        std::uint64_t budget) {
  VectorSet probe(nf, m, budget);
  std::vector<std::uint64_t> codes;
  codes.reserve(generators.size());
  for (const auto& g : generators) codes.push_back(probe.encode(g));
  return span_of_codes(nf, m, budget, codes);
}

VectorSet lc_step(const VectorSet& s) {
  const Nearfield& nf = s.nf();
  VectorSet group(s.nf_ptr(), s.dim(), budget_of(s));
  group.insert_code(0);
  for (std::uint64_t code : s.member_codes()) {
    const Vector w = s.decode(code);
    for (std::uint32_t r = 0; r < nf.order(); ++r) {
      extend_subgroup(group, group.encode(scale_right(nf, w, Element{r})));
    }
  }
  return group;
}

VectorSet gen_closure(const VectorSet& s) {
  VectorSet current = lc_step(s);
  while (true) {
    VectorSet next = lc_step(current);
    if (next.size() == current.size()) return current;
    current = std::move(next);
  }
}

VectorSet lc_stratum(std::span<const Vector> v, NearfieldPtr nf, std::size_t m, std::size_t gamma,
                     std::uint64_t budget) {
  VectorSet current = make_set(std::move(nf), m, v, budget);
  for (std::size_t i = 0; i < gamma; ++i) {
    VectorSet next = lc_step(current);
    if (next.size() == current.size()) return next;
    current = std::move(next);
  }
  return current;
}

std::vector<std::uint64_t> lc_strata_sizes(std::span<const Vector> v, NearfieldPtr nf,
                                           std::size_t m, std::uint64_t budget) {
  VectorSet current = make_set(std::move(nf), m, v, budget);
  std::vector<std::uint64_t> sizes{current.size()};
  while (true) {
    VectorSet next = lc_step(current);
    sizes.push_back(next.size());
    if (next.size() == current.size()) return sizes;
    current = std::move(next);
  }
}

std::size_t lc_index(std::span<const Vector> v, NearfieldPtr nf, std::size_t m,
                     std::uint64_t budget) {
  VectorSet current = make_set(std::move(nf), m, v, budget);
  std::size_t p = 0;
  while (!current.is_full()) {
    VectorSet next = lc_step(current);
    ++p;
    if (next.size() == current.size()) throw Error("index undefined: gen ≠ R^m");
    current = std::move(next);
  }
  return p;
}

std::optional<std::size_t> gamma_dependent_index(std::span<const Vector> v, NearfieldPtr nf,
                                                 std::size_t m, std::size_t gamma,
                                                 std::uint64_t budget) {
  if (gamma == 0) throw Error("gamma must be positive");
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<Vector> others;
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (t != i) others.push_back(v[t]);
    }
    const VectorSet stratum = lc_stratum(others, nf, m, gamma, budget);
    if (stratum.contains(v[i])) return i;
  }
  return std::nullopt;
}

Lc1Report check_lc1_cardinality(std::span<const Vector> v, NearfieldPtr nf, std::size_t m,
                                std::uint64_t budget) {
  Lc1Report report;
  report.k = v.size();
  report.m = m;
  report.bound = saturating_pow(nf->order(), v.size());
  report.lc1_size = lc_stratum(v, nf, m, 1, budget).size();
  report.two_independent = !gamma_dependent_index(v, nf, m, 2, budget).has_value();
  report.bound_holds = report.lc1_size <= report.bound;
  report.equality_holds =
      !report.two_independent || (report.lc1_size == report.bound && report.k <= m);
  return report;
}

}  // namespace nearvec
