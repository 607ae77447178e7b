#include "nearvec/vectors.hpp"

#include <algorithm>
#include <string>

#include "nearvec/error.hpp"

namespace nearvec {
namespace {

void require_same_length(std::span<const Element> u, std::span<const Element> v) {
  if (u.size() != v.size()) {
    throw Error("dimension mismatch: " + std::to_string(u.size()) + " vs " +
                std::to_string(v.size()));
  }
}

}  // namespace

Vector zero_vector(std::size_t m) { return Vector(m, Element{0}); }

bool is_zero(std::span<const Element> v) {
  return std::all_of(v.begin(), v.end(), [](Element a) { return a.code == 0; });
}

std::optional<std::size_t> leading_index(std::span<const Element> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].code != 0) return i;
  }
  return std::nullopt;
}

Vector add(const Nearfield& nf, std::span<const Element> u, std::span<const Element> v) {
  require_same_length(u, v);
  Vector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = nf.add(u[i], v[i]);
  return out;
}

Vector sub(const Nearfield& nf, std::span<const Element> u, std::span<const Element> v) {
  require_same_length(u, v);
  Vector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = nf.sub(u[i], v[i]);
  return out;
}

Vector neg(const Nearfield& nf, std::span<const Element> u) {
  Vector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = nf.neg(u[i]);
  return out;
}

Vector scale_right(const Nearfield& nf, std::span<const Element> v, Element r) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = nf.mul(v[i], r);
  return out;
}

Vector scale_left(const Nearfield& nf, Element r, std::span<const Element> v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = nf.mul(r, v[i]);
  return out;
}

std::optional<Element> left_multiple_of(const Nearfield& nf, std::span<const Element> u,
                                        std::span<const Element> v) {
  require_same_length(u, v);
  if (is_zero(u)) return Element{0};
  const auto lead = leading_index(v);
  if (!lead) return std::nullopt;
  // u_i = r∘v_i at the lead position gives r = u_i∘v_i^{-1}.
  const Element r = nf.mul(u[*lead], nf.inv(v[*lead]));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (nf.mul(r, v[i]) != u[i]) return std::nullopt;
  }
  return r;
}

Matrix::Matrix(NearfieldPtr nf, std::size_t cols, std::vector<Vector> rows)
    : nf_(std::move(nf)), cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw Error("ragged matrix rows");
    for (Element a : r) {
      if (!nf_->contains(a)) throw Error("matrix entry outside the nearfield");
    }
  }
}

Matrix Matrix::identity(NearfieldPtr nf, std::size_t m) {
  std::vector<Vector> rows(m, zero_vector(m));
  for (std::size_t i = 0; i < m; ++i) rows[i][i] = Element{1};
  return Matrix(std::move(nf), m, std::move(rows));
}

Vector Matrix::column(std::size_t j) const {
  if (j >= cols_) throw Error("column index out of range");
  Vector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = rows_[i][j];
  return out;
}

void Matrix::append_row(Vector row) {
  if (row.size() != cols_) throw Error("appended row has wrong length");
  rows_.push_back(std::move(row));
}

void Matrix::erase_zero_rows() {
  std::erase_if(rows_, [](const Vector& r) { return is_zero(r); });
}

Matrix Matrix::transpose() const {
  std::vector<Vector> out(cols_, Vector(rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[j][i] = rows_[i][j];
  }
  return Matrix(nf_, rows_.size(), std::move(out));
}

std::size_t column_nonzeros(const Matrix& m, std::size_t j) {
  std::size_t count = 0;
  for (const auto& r : m.row_list()) count += r.at(j).code != 0 ? 1 : 0;
  return count;
}

bool columns_support_disjoint(const Matrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (column_nonzeros(m, j) > 1) return false;
  }
  return true;
}

}  // namespace nearvec
