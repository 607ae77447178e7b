#include "nearvec/linmaps.hpp"

#include <algorithm>

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

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

// Calls fn(v) for every v in R^n in ascending mixed-radix code order.
template <typename Fn>
void for_each_vector(const Nearfield& nf, std::size_t n, Fn&& fn) {
  Vector v = zero_vector(n);
  while (true) {
    fn(static_cast<const Vector&>(v));
    std::size_t i = 0;
    while (i < n) {
      if (v[i].code + 1 < nf.order()) {
        ++v[i].code;
        break;
      }
      v[i].code = 0;
      ++i;
    }
    if (i == n) return;
  }
}

std::size_t max_row_nonzeros(const Matrix& m) {
  std::size_t best = 0;
  for (const auto& r : m.row_list()) {
    best = std::max<std::size_t>(best, static_cast<std::size_t>(std::count_if(
                                           r.begin(), r.end(), [](Element a) { return a.code != 0; })));
  }
  return best;
}

std::size_t max_column_nonzeros(const Matrix& m) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, column_nonzeros(m, j));
  return best;
}

bool linear_by_criterion(const MapRep& t) { return max_row_nonzeros(t.matrix()) <= 1; }

bool normal_by_criterion(const MapRep& t) {
  return linear_by_criterion(t) && max_column_nonzeros(t.matrix()) <= 1;
}

VectorSet image_set(const MapRep& t, std::uint64_t budget) {
  VectorSet image(t.matrix().nf_ptr(), t.dim(), budget);
  for_each_vector(t.nf(), t.dim(), [&](const Vector& v) { image.insert(apply_map(t, v)); });
  return image;
}

// Generators a of Im and checks (m+a)∘r - m∘r ∈ Im over all m, r.
bool submodule_condition(const MapRep& t, const VectorSet& image,
                         const std::vector<Vector>& generators) {
  const Nearfield& nf = t.nf();
  bool ok = true;
  for_each_vector(nf, t.dim(), [&](const Vector& m) {
    if (!ok) return;
    for (const auto& a : generators) {
      const Vector ma = add(nf, m, a);
      for (std::uint32_t r = 0; r < nf.order() && ok; ++r) {
        const Element s{r};
        if (!image.contains(sub(nf, scale_right(nf, ma, s), scale_right(nf, m, s)))) ok = false;
      }
      if (!ok) return;
    }
  });
  return ok;
}

}  // namespace

MapRep::MapRep(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw Error("map matrix must be square");
  if (matrix_.rows() == 0) throw Error("map dimension must be positive");
}

MapRep map_from_columns(NearfieldPtr nf, const std::vector<Vector>& columns) {
  const std::size_t n = columns.size();
  std::vector<Vector> rows(n, zero_vector(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].size() != n) throw Error("basis image has wrong length");
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = columns[j][i];
  }
  return MapRep(Matrix(std::move(nf), n, std::move(rows)));
}

std::string to_string(MapClass c) {
  switch (c) {
    case MapClass::hom_only: return "hom_only";
    case MapClass::linear: return "linear";
    case MapClass::normal_linear: return "normal_linear";
    case MapClass::invertible_normal: return "invertible_normal";
  }
  return "?";
}

std::string to_string(MapKind k) {
  switch (k) {
    case MapKind::all: return "all";
    case MapKind::linear: return "linear";
    case MapKind::normal: return "normal";
  }
  return "?";
}

Vector apply_map(const MapRep& t, std::span<const Element> v) {
  const std::size_t n = t.dim();
  if (v.size() != n) throw Error("dimension mismatch in apply");
  const Nearfield& nf = t.nf();
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      out[i] = nf.add(out[i], nf.mul(t.matrix().at(i, c), v[c]));
    }
  }
  return out;
}

std::optional<std::pair<Vector, Element>> find_linearity_violation(const MapRep& t,
                                                                   std::uint64_t budget) {
  const Nearfield& nf = t.nf();
  require_budget(saturating_pow(nf.order(), t.dim()), budget, "semantic linearity check");
  std::optional<std::pair<Vector, Element>> found;
  for_each_vector(nf, t.dim(), [&](const Vector& v) {
    if (found) return;
    const Vector tv = apply_map(t, v);
    for (std::uint32_t r = 0; r < nf.order(); ++r) {
      const Element s{r};
      if (apply_map(t, scale_right(nf, v, s)) != scale_right(nf, tv, s)) {
        found = std::make_pair(v, s);
        return;
      }
    }
  });
  return found;
}

bool is_linear(const MapRep& t, CheckMode mode, std::uint64_t budget) {
  if (mode == CheckMode::criterion) return linear_by_criterion(t);
  return !find_linearity_violation(t, budget).has_value();
}

bool is_normal(const MapRep& t, CheckMode mode, std::uint64_t budget) {
  if (!is_linear(t, mode, budget)) throw Error("normality is only defined for linear maps");
  if (mode == CheckMode::criterion) return normal_by_criterion(t);

  const VectorSet image = image_set(t, budget);
  const auto members = image.sorted_members();
  for (const auto& a : members) {
    for (const auto& b : members) {
      if (!image.contains(add(t.nf(), a, b))) return false;
    }
  }
  return submodule_condition(t, image, members);
}

bool image_is_submodule_fast(const MapRep& t, std::uint64_t budget) {
  const Nearfield& nf = t.nf();
  const std::size_t n = t.dim();
  // Im = sum_i a_i R, and a_i R is additively generated by a_i∘p^k.
  std::vector<Vector> generators;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector col = t.image_of_basis(i);
    if (is_zero(col)) continue;
    std::uint32_t basis_code = 1;
    for (std::uint32_t k = 0; k < nf.degree(); ++k, basis_code *= nf.p()) {
      generators.push_back(scale_right(nf, col, Element{basis_code}));
    }
  }
  const VectorSet image = additive_span(t.matrix().nf_ptr(), n, generators, budget);
  return submodule_condition(t, image, generators);
}

bool is_bijective(const MapRep& t, std::uint64_t budget) {
  if (linear_by_criterion(t)) {
    // Rows have at most one nonzero, so bijective iff a scaled permutation.
    const Matrix& m = t.matrix();
    for (const auto& r : m.row_list()) {
      if (is_zero(r)) return false;
    }
    return max_column_nonzeros(m) == 1;
  }
  return image_set(t, budget).is_full();
}

MapClass classify(const MapRep& t) {
  if (!linear_by_criterion(t)) return MapClass::hom_only;
  if (!normal_by_criterion(t)) return MapClass::linear;
  return is_bijective(t) ? MapClass::invertible_normal : MapClass::normal_linear;
}

MapRep compose(const MapRep& t1, const MapRep& t2) {
  if (t1.dim() != t2.dim()) throw Error("dimension mismatch in compose");
  if (!linear_by_criterion(t2)) {
    throw Error("composite is represented by M2·M1 only when the second map is linear");
  }
  const Nearfield& nf = t1.nf();
  const std::size_t n = t1.dim();
  std::vector<Vector> rows(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element acc{0};
      for (std::size_t k = 0; k < n; ++k) {
        acc = nf.add(acc, nf.mul(t2.matrix().at(i, k), t1.matrix().at(k, j)));
      }
      rows[i][j] = acc;
    }
  }
  return MapRep(Matrix(t1.matrix().nf_ptr(), n, std::move(rows)));
}

MapRep scale_family(const MapRep& t, std::span<const Element> r) {
  if (!linear_by_criterion(t)) throw Error("scale_family needs a linear map");
  if (r.size() != t.dim()) throw Error("one scalar per basis vector required");
  Matrix m = t.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, t.nf().mul(m.at(i, j), r[j]));
  }
  return MapRep(std::move(m));
}

MapRep matrix_sum(const MapRep& a, const MapRep& b) {
  if (a.dim() != b.dim()) throw Error("dimension mismatch in matrix_sum");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    rows.push_back(add(a.nf(), a.matrix().row(i), b.matrix().row(i)));
  }
  return MapRep(Matrix(a.matrix().nf_ptr(), a.dim(), std::move(rows)));
}

std::uint64_t count_maps_closed_form(std::uint64_t order, std::size_t n, MapKind kind) {
  switch (kind) {
    case MapKind::all:
      return checked_pow(order, static_cast<std::uint64_t>(n) * n);
    case MapKind::linear:
      return checked_pow(checked_add(1, checked_mul(n, order - 1)), n);
    case MapKind::normal: {
      // Rook placements: j nonzero entries, no two in a row or column.
      std::uint64_t total = 0;
      for (std::size_t j = 0; j <= n; ++j) {
        std::uint64_t binom = 1;
        for (std::size_t i = 0; i < j; ++i) binom = binom * (n - i) / (i + 1);
        std::uint64_t fact = 1;
        for (std::size_t i = 2; i <= j; ++i) fact = checked_mul(fact, i);
        total = checked_add(
            total, checked_mul(checked_mul(checked_mul(binom, binom), fact), checked_pow(order - 1, j)));
      }
      return total;
    }
  }
  return 0;
}

std::uint64_t count_maps_closed_form(const Nearfield& nf, std::size_t n, MapKind kind) {
  if (nf.is_field()) return count_maps_closed_form(nf.order(), n, MapKind::all);
  return count_maps_closed_form(nf.order(), n, kind);
}

MapRep map_from_index(const NearfieldPtr& nf, std::size_t n, std::uint64_t index) {
  std::vector<Vector> rows(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = Element{static_cast<std::uint32_t>(index % nf->order())};
      index /= nf->order();
    }
  }
  return MapRep(Matrix(nf, n, std::move(rows)));
}

std::uint64_t count_maps_enumerated(const NearfieldPtr& nf, std::size_t n, MapKind kind,
                                    std::uint64_t budget) {
  const std::uint64_t total = saturating_pow(nf->order(), static_cast<std::uint64_t>(n) * n);
  require_budget(total, budget, "map enumeration");
  const std::uint64_t row_count = saturating_pow(nf->order(), n);
  require_budget(row_count, budget, "row enumeration");
  if (kind == MapKind::all) return total;

  // Output coordinate i of apply_map(T, v) depends only on row i, so a map is
  // semantically linear iff each of its rows is.
  std::vector<std::uint8_t> row_linear(row_count, 0);
  for (std::uint64_t code = 0; code < row_count; ++code) {
    Vector row(n);
    std::uint64_t c = code;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = Element{static_cast<std::uint32_t>(c % nf->order())};
      c /= nf->order();
    }
    bool ok = true;
    for_each_vector(*nf, n, [&](const Vector& v) {
      if (!ok) return;
      Element fv{0};
      for (std::size_t j = 0; j < n; ++j) fv = nf->add(fv, nf->mul(row[j], v[j]));
      for (std::uint32_t r = 0; r < nf->order() && ok; ++r) {
        const Element s{r};
        Element fvr{0};
        for (std::size_t j = 0; j < n; ++j) fvr = nf->add(fvr, nf->mul(row[j], nf->mul(v[j], s)));
        if (fvr != nf->mul(fv, s)) ok = false;
      }
    });
    row_linear[code] = ok ? 1 : 0;
  }

  std::uint64_t count = 0;
  for (std::uint64_t index = 0; index < total; ++index) {
    bool linear = true;
    std::uint64_t rest = index;
    for (std::size_t i = 0; i < n && linear; ++i) {
      linear = row_linear[rest % row_count] != 0;
      rest /= row_count;
    }
    if (!linear) continue;
    if (kind == MapKind::linear || image_is_submodule_fast(map_from_index(nf, n, index), budget)) {
      ++count;
    }
  }
  return count;
}

}  // namespace nearvec
