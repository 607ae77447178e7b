#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nearvec/budget.hpp"
#include "nearvec/nearfield.hpp"
#include "nearvec/vectors.hpp"

namespace nearvec {

/// A deduplicated set of vectors of R^m, backed by a membership bitmap over
/// the mixed-radix code sum v_i |R|^i. Construction throws BudgetExceeded
/// when |R|^m exceeds the element budget.
class VectorSet {
 public:
  VectorSet(NearfieldPtr nf, std::size_t m, std::uint64_t budget = element_budget());

  const Nearfield& nf() const { return *nf_; }
  const NearfieldPtr& nf_ptr() const { return nf_; }
  std::size_t dim() const { return m_; }
  std::uint64_t space_size() const { return space_; }
  std::size_t size() const { return members_.size(); }
  bool is_full() const { return members_.size() == space_; }

  std::uint64_t encode(std::span<const Element> v) const;
  Vector decode(std::uint64_t code) const;
  // Code of the sum of two encoded vectors.
  std::uint64_t add_codes(std::uint64_t a, std::uint64_t b) const;

  bool contains(std::span<const Element> v) const { return contains_code(encode(v)); }
  bool contains_code(std::uint64_t code) const { return bitmap_[code] != 0; }
  bool insert(std::span<const Element> v) { return insert_code(encode(v)); }
  bool insert_code(std::uint64_t code);

  // Member codes in insertion order.
  const std::vector<std::uint64_t>& member_codes() const { return members_; }
  // Members in ascending code order.
  std::vector<Vector> sorted_members() const;

  friend bool operator==(const VectorSet& a, const VectorSet& b);

 private:
  NearfieldPtr nf_;
  std::size_t m_;
  std::uint64_t space_;
  std::vector<std::uint64_t> radix_;  // |R|^i
  std::vector<std::uint8_t> bitmap_;
  std::vector<std::uint64_t> members_;
};

VectorSet make_set(NearfieldPtr nf, std::size_t m, std::span<const Vector> vectors,
                   std::uint64_t budget = element_budget());

// Additive subgroup generated by `generators` (coset doubling over GF(p)).
VectorSet additive_span(NearfieldPtr nf, std::size_t m, std::span<const Vector> generators,
                        std::uint64_t budget = element_budget());

// LC_{n+1} from LC_n: the additive subgroup generated by { w∘λ : w ∈ S, λ ∈ R }.
// The empty sum is included, so lc_step of the empty set is {0}.
VectorSet lc_step(const VectorSet& s);

// gen(S): least fixpoint of lc_step containing S.
VectorSet gen_closure(const VectorSet& s);

// Sizes |LC_0|, |LC_1|, ... up to and including the first stable stratum.
std::vector<std::uint64_t> lc_strata_sizes(std::span<const Vector> v, NearfieldPtr nf,
                                           std::size_t m, std::uint64_t budget = element_budget());

// Least p with LC_p(V) = R^m. Throws Error("index undefined: gen ≠ R^m") otherwise.
std::size_t lc_index(std::span<const Vector> v, NearfieldPtr nf, std::size_t m,
                     std::uint64_t budget = element_budget());

// LC_gamma of a vector sequence (LC_0 is the sequence itself).
VectorSet lc_stratum(std::span<const Vector> v, NearfieldPtr nf, std::size_t m,
                     std::size_t gamma, std::uint64_t budget = element_budget());

// Index of the first v_i lying in LC_gamma of the remaining vectors, or
// nullopt when the sequence is gamma-linearly independent.
std::optional<std::size_t> gamma_dependent_index(std::span<const Vector> v, NearfieldPtr nf,
                                                 std::size_t m, std::size_t gamma,
                                                 std::uint64_t budget = element_budget());

struct Lc1Report {
  std::uint64_t lc1_size = 0;
  std::uint64_t bound = 0;  // |R|^k, saturating
  std::size_t k = 0;
  std::size_t m = 0;
  bool two_independent = false;
  bool bound_holds = false;     // lc1_size <= bound
  bool equality_holds = false;  // two_independent implies lc1_size == bound and k <= m
};

Lc1Report check_lc1_cardinality(std::span<const Vector> v, NearfieldPtr nf, std::size_t m,
                                std::uint64_t budget = element_budget());

}  // namespace nearvec
