#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nearvec/budget.hpp"
#include "nearvec/nearfield.hpp"
#include "nearvec/vectors.hpp"

namespace nearvec {

/// A map R^n -> R^n fixed by the images of the standard basis: column i of
/// `matrix` is e_i T. The induced map sends sum e_i∘r_i to sum a_i∘r_i and is
/// always an additive homomorphism.
class MapRep {
 public:
  explicit MapRep(Matrix matrix);

  const Matrix& matrix() const { return matrix_; }
  const Nearfield& nf() const { return matrix_.nf(); }
  std::size_t dim() const { return matrix_.cols(); }
  Vector image_of_basis(std::size_t i) const { return matrix_.column(i); }

  friend bool operator==(const MapRep& a, const MapRep& b) { return a.matrix_ == b.matrix_; }

 private:
  Matrix matrix_;
};

// Builds a map from its basis images (columns).
MapRep map_from_columns(NearfieldPtr nf, const std::vector<Vector>& columns);

enum class MapClass { hom_only, linear, normal_linear, invertible_normal };
enum class CheckMode { criterion, semantic };

std::string to_string(MapClass c);

// sum_i column_i ∘ v_i.
Vector apply_map(const MapRep& t, std::span<const Element> v);

// Criterion: every row has at most one nonzero entry.
// Semantic: apply_map(T, v∘r) == apply_map(T, v)∘r for all v, r.
bool is_linear(const MapRep& t, CheckMode mode, std::uint64_t budget = element_budget());

// First (v, r) in code order with apply_map(T, v∘r) != apply_map(T, v)∘r.
std::optional<std::pair<Vector, Element>> find_linearity_violation(
    const MapRep& t, std::uint64_t budget = element_budget());

// Criterion: at most one nonzero per row and per column.
// Semantic: the image is a submodule, (m+a)∘r - m∘r ∈ Im for every m ∈ R^n,
// a ∈ Im, r ∈ R. Throws Error for non-linear input.
bool is_normal(const MapRep& t, CheckMode mode, std::uint64_t budget = element_budget());

// Semantic normality using only an additive generating set of the image for
// a; equivalent to the full test because (m+a+a')r - mr telescopes.
bool image_is_submodule_fast(const MapRep& t, std::uint64_t budget = element_budget());

bool is_bijective(const MapRep& t, std::uint64_t budget = element_budget());
MapClass classify(const MapRep& t);

// The map "t1 first, then t2", represented by M2·M1 with
// (M2·M1)_ij = sum_k M2_ik ∘ M1_kj. Throws Error unless t2 is linear, which
// is exactly when the product matrix represents the composite.
MapRep compose(const MapRep& t1, const MapRep& t2);

// Column i replaced by column_i ∘ r_i. Throws Error for non-linear t.
MapRep scale_family(const MapRep& t, std::span<const Element> r);

// Raw columnwise sum of the matrices; not an operation on a map class.
MapRep matrix_sum(const MapRep& a, const MapRep& b);

enum class MapKind { all, linear, normal };
enum class CountMethod { closed_form, enumeration };

std::string to_string(MapKind k);

// Closed forms for a proper nearfield: all |R|^(n^2); linear (1 + n(|R|-1))^n;
// normal sum_j C(n,j)^2 j! (|R|-1)^j. Throws Error on 64-bit overflow.
std::uint64_t count_maps_closed_form(std::uint64_t order, std::size_t n, MapKind kind);

// As above, except that over a field every map is linear and normal.
std::uint64_t count_maps_closed_form(const Nearfield& nf, std::size_t n, MapKind kind);

// Exhaustive count over all |R|^(n^2) maps with the semantic checks.
// Requires |R|^(n^2) and |R|^n within the budget.
std::uint64_t count_maps_enumerated(const NearfieldPtr& nf, std::size_t n, MapKind kind,
                                    std::uint64_t budget = element_budget());

// Decodes map number `index` (base-|R| digits, row-major) into a MapRep.
MapRep map_from_index(const NearfieldPtr& nf, std::size_t n, std::uint64_t index);

}  // namespace nearvec
