#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nearvec/nearfield.hpp"

namespace nearvec {

// An element of R^m. The owning nearfield travels with the containing
// Matrix or is passed explicitly to the free functions below.
using Vector = std::vector<Element>;

Vector zero_vector(std::size_t m);
bool is_zero(std::span<const Element> v);
// Index of the first nonzero entry, or nullopt for the zero vector.
std::optional<std::size_t> leading_index(std::span<const Element> v);

// Componentwise group operations; throw Error on length mismatch.
Vector add(const Nearfield& nf, std::span<const Element> u, std::span<const Element> v);
Vector sub(const Nearfield& nf, std::span<const Element> u, std::span<const Element> v);
Vector neg(const Nearfield& nf, std::span<const Element> u);

// Module action v∘r = (v_1∘r, ..., v_m∘r).
Vector scale_right(const Nearfield& nf, std::span<const Element> v, Element r);

// Left action r∘v = (r∘v_1, ..., r∘v_m); only used by the left-multiple test.
Vector scale_left(const Nearfield& nf, Element r, std::span<const Element> v);

// r with u_i = r∘v_i for all i, if one exists. The candidate is read off the
// first nonzero position of v and then verified; u == 0 yields r = 0.
std::optional<Element> left_multiple_of(const Nearfield& nf, std::span<const Element> u,
                                        std::span<const Element> v);

/// k x m matrix over a nearfield, stored as rows. Zero rows and k == 0 are
/// allowed here; the file parser rejects them.
class Matrix {
 public:
  Matrix(NearfieldPtr nf, std::size_t cols) : nf_(std::move(nf)), cols_(cols) {}
  Matrix(NearfieldPtr nf, std::size_t cols, std::vector<Vector> rows);

  static Matrix identity(NearfieldPtr nf, std::size_t m);

  const Nearfield& nf() const { return *nf_; }
  const NearfieldPtr& nf_ptr() const { return nf_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const Vector& row(std::size_t i) const { return rows_.at(i); }
  Vector& row(std::size_t i) { return rows_.at(i); }
  const std::vector<Vector>& row_list() const { return rows_; }
  Element at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
  void set(std::size_t i, std::size_t j, Element a) { rows_.at(i).at(j) = a; }
  Vector column(std::size_t j) const;

  void append_row(Vector row);
  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_.at(a), rows_.at(b)); }
  void erase_zero_rows();

  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_ && a.nf_->q() == b.nf_->q() &&
           a.nf_->n() == b.nf_->n();
  }

 private:
  NearfieldPtr nf_;
  std::size_t cols_;
  std::vector<Vector> rows_;
};

// Number of nonzero entries in column j.
std::size_t column_nonzeros(const Matrix& m, std::size_t j);
// Every column has at most one nonzero entry.
bool columns_support_disjoint(const Matrix& m);

}  // namespace nearvec
