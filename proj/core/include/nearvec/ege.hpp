#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nearvec/nearfield.hpp"
#include "nearvec/vectors.hpp"

namespace nearvec {

enum class StepKind { swap, scale, eliminate, trick };

// One recorded row operation. Row indices are 0-based here and 1-based in
// the text serialization.
//
//   swap:      rows `row` and `other` exchanged
//   scale:     row `row` replaced by row∘scalar
//   eliminate: row `row` replaced by row - other∘scalar
//   trick:     distributivity trick at `column` with `witness`; `row` and
//              `other` are the conflicting rows r < s, `theta` and `phi` the
//              derived rows. phi is appended as the last row.
struct Step {
  StepKind kind = StepKind::swap;
  std::size_t row = 0;
  std::size_t other = 0;
  Element scalar;
  std::size_t column = 0;
  Witness witness;
  Vector theta;
  Vector phi;
};

using Trace = std::vector<Step>;

struct RrefResult {
  Matrix matrix;  // zero rows dropped
  Trace trace;
};

// Reduced row-echelon form over the nearfield: pivots are normalized by
// right-scaling with the ∘-inverse, other rows are cleared via row - pivot∘a.
RrefResult rref(const Matrix& m);

// First column (0-based) holding two or more nonzero entries.
std::optional<std::size_t> first_conflict_column(const Matrix& m);

// Applies the distributivity trick at column j. Requires j to be the first
// conflict column and w a valid witness; throws Error otherwise. Rows r, s
// (first two nonzero rows in column j) become w_r - phi∘w_r^j and
// w_s - phi∘w_s^j, and phi is appended.
Matrix distributivity_trick(const Matrix& m, std::size_t j, const Witness& w);

struct GenDecomposition {
  Matrix basis;  // rows u_i: support-disjoint, 1-led, sorted by leading column
  std::size_t dimension = 0;
  Trace trace;
  // False when a trick was needed but the nearfield is a field; basis is then
  // the plain RREF and columns may share support.
  bool canonical = true;
};

// Expanded Gaussian elimination with the canonical witness of the nearfield.
GenDecomposition ege(const Matrix& m);
// Same, with a caller-chosen witness.
GenDecomposition ege(const Matrix& m, const Witness& w);

// Applies one step to a working matrix (zero rows retained).
void apply_step(Matrix& work, const Step& step);

using StepObserver = std::function<void(const Matrix& before, const Step& step, const Matrix& after)>;

// Replays a trace on `input` and drops zero rows at the end; reproduces the
// ege/rref output bit-exactly. Throws Error when a step does not apply.
Matrix replay(const Matrix& input, const Trace& trace, const StepObserver& observer = {});

// One step per line: SWAP r s / SCALE r c / ELIM r s c / TRICK j alpha beta lambda.
std::string format_trace(const Nearfield& nf, const Trace& trace);
Trace parse_trace(const Nearfield& nf, std::string_view text);

// No column is a left multiple of another (both directions checked for each
// pair). Throws Error when the matrix has fewer than two columns.
bool is_one_column_independent(const Matrix& m);

// pattern[a * cols + b] is true iff column a is a left multiple of column b (a != b).
std::vector<bool> column_dependence_pattern(const Matrix& m);

}  // namespace nearvec
