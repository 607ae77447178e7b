#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nearvec/element_codec.hpp"
#include "nearvec/vectors.hpp"

namespace nearvec {

// Matrix file format:
//
//   # optional comment lines anywhere
//   DN <q> <n>
//   <k> <m>
//   k lines of m whitespace-separated element tokens (either style)
//
// Throws ParseError on header mismatch, k == 0 ("no rows"), ragged rows or
// bad element tokens.
Matrix parse_matrix(std::string_view text, std::uint64_t max_order = Nearfield::kMaxOrder);

// Same as parse_matrix but reuses an already built nearfield; the header must match it.
Matrix parse_matrix(std::string_view text, const NearfieldPtr& nf);

Matrix read_matrix_file(const std::string& path);

// Inverse of parse_matrix. Each comment is emitted as "# <comment>" before the header.
std::string format_matrix(const Matrix& m, ElementStyle style = ElementStyle::polynomial,
                          const std::vector<std::string>& comments = {});

std::string format_vector(const Nearfield& nf, std::span<const Element> v,
                          ElementStyle style = ElementStyle::polynomial);

}  // namespace nearvec
