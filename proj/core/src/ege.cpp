#include "nearvec/ege.hpp"

#include <sstream>

#include "nearvec/element_codec.hpp"
#include "nearvec/error.hpp"

namespace nearvec {
namespace {

void rref_in_place(Matrix& work, Trace& trace) {
  const Nearfield& nf = work.nf();
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < work.cols() && pivot < work.rows(); ++col) {
    std::size_t found = pivot;
    while (found < work.rows() && work.at(found, col).code == 0) ++found;
    if (found == work.rows()) continue;

    if (found != pivot) {
      Step s{.kind = StepKind::swap, .row = pivot, .other = found};
      apply_step(work, s);
      trace.push_back(std::move(s));
    }
    const Element lead = work.at(pivot, col);
    if (lead != Nearfield::one()) {
      Step s{.kind = StepKind::scale, .row = pivot, .scalar = nf.inv(lead)};
      apply_step(work, s);
      trace.push_back(std::move(s));
    }
    for (std::size_t t = 0; t < work.rows(); ++t) {
      if (t == pivot) continue;
      const Element c = work.at(t, col);
      if (c.code == 0) continue;
      Step s{.kind = StepKind::eliminate, .row = t, .other = pivot, .scalar = c};
      apply_step(work, s);
      trace.push_back(std::move(s));
    }
    ++pivot;
  }
}

// First two rows with a nonzero entry in column j.
std::pair<std::size_t, std::size_t> conflict_rows(const Matrix& m, std::size_t j) {
  std::optional<std::size_t> r;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.at(i, j).code == 0) continue;
    if (!r) {
      r = i;
    } else {
      return {*r, i};
    }
  }
  throw Error("column " + std::to_string(j + 1) + " has fewer than two nonzero entries");
}

Step make_trick(const Matrix& work, std::size_t j, const Witness& w) {
  const Nearfield& nf = work.nf();
  if (!is_witness(nf, w)) throw Error("witness does not violate right distributivity");
  const auto first = first_conflict_column(work);
  if (!first || *first != j) {
    throw Error("column " + std::to_string(j + 1) + " is not the first conflict column");
  }
  const auto [r, s] = conflict_rows(work, j);
  const Vector& wr = work.row(r);
  const Vector& ws = work.row(s);

  const Element alpha_p = nf.mul(nf.inv(wr[j]), w.alpha);
  const Element beta_p = nf.mul(nf.inv(ws[j]), w.beta);
  const Vector combo = scale_right(nf, add(nf, scale_right(nf, wr, alpha_p),
                                           scale_right(nf, ws, beta_p)),
                                   w.lambda);
  Vector theta = sub(nf, sub(nf, combo, scale_right(nf, wr, nf.mul(alpha_p, w.lambda))),
                     scale_right(nf, ws, nf.mul(beta_p, w.lambda)));
  for (std::size_t c = 0; c < j; ++c) {
    if (theta[c].code != 0) throw Error("internal fault: theta nonzero before conflict column");
  }
  if (theta[j].code == 0) throw Error("internal fault: theta vanishes at conflict column");
  Vector phi = scale_right(nf, theta, nf.inv(theta[j]));

  Step step{.kind = StepKind::trick, .row = r, .other = s, .column = j, .witness = w};
  step.theta = std::move(theta);
  step.phi = std::move(phi);
  return step;
}

GenDecomposition run_ege(const Matrix& m, const std::optional<Witness>& witness) {
  GenDecomposition out{.basis = m};
  Matrix& work = out.basis;
  rref_in_place(work, out.trace);
  std::optional<std::size_t> last_column;
  while (auto j = first_conflict_column(work)) {
    if (!witness) {
      out.canonical = false;
      break;
    }
    if (last_column && *j <= *last_column) {
      throw Error("internal fault: conflict column did not advance");
    }
    last_column = j;
    Step step = make_trick(work, *j, *witness);
    apply_step(work, step);
    out.trace.push_back(std::move(step));
    rref_in_place(work, out.trace);
  }
  work.erase_zero_rows();
  out.dimension = work.rows();
  return out;
}

const char* kind_name(StepKind k) {
  switch (k) {
    case StepKind::swap: return "SWAP";
    case StepKind::scale: return "SCALE";
    case StepKind::eliminate: return "ELIM";
    case StepKind::trick: return "TRICK";
  }
  return "?";
}

}  // namespace

RrefResult rref(const Matrix& m) {
  RrefResult out{.matrix = m};
  rref_in_place(out.matrix, out.trace);
  out.matrix.erase_zero_rows();
  return out;
}

std::optional<std::size_t> first_conflict_column(const Matrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (column_nonzeros(m, j) >= 2) return j;
  }
  return std::nullopt;
}

Matrix distributivity_trick(const Matrix& m, std::size_t j, const Witness& w) {
  Matrix out = m;
  apply_step(out, make_trick(m, j, w));
  return out;
}

GenDecomposition ege(const Matrix& m) { return run_ege(m, find_witness(m.nf())); }

GenDecomposition ege(const Matrix& m, const Witness& w) {
  if (!is_witness(m.nf(), w)) throw Error("witness does not violate right distributivity");
  return run_ege(m, w);
}

void apply_step(Matrix& work, const Step& step) {
  const Nearfield& nf = work.nf();
  auto check_row = [&](std::size_t i) {
    if (i >= work.rows()) throw Error("step row index " + std::to_string(i + 1) + " out of range");
  };
  switch (step.kind) {
    case StepKind::swap:
      check_row(step.row);
      check_row(step.other);
      work.swap_rows(step.row, step.other);
      return;
    case StepKind::scale:
      check_row(step.row);
      if (step.scalar.code == 0) throw Error("scale by zero");
      work.row(step.row) = scale_right(nf, work.row(step.row), step.scalar);
      return;
    case StepKind::eliminate:
      check_row(step.row);
      check_row(step.other);
      if (step.row == step.other) throw Error("eliminate row against itself");
      work.row(step.row) =
          sub(nf, work.row(step.row), scale_right(nf, work.row(step.other), step.scalar));
      return;
    case StepKind::trick: {
      // Recompute from the current state so replayed traces are self-checking.
      const Step fresh = make_trick(work, step.column, step.witness);
      const std::size_t j = fresh.column;
      const Vector& phi = fresh.phi;
      const Element wr_j = work.at(fresh.row, j);
      const Element ws_j = work.at(fresh.other, j);
      work.row(fresh.row) = sub(nf, work.row(fresh.row), scale_right(nf, phi, wr_j));
      work.row(fresh.other) = sub(nf, work.row(fresh.other), scale_right(nf, phi, ws_j));
      work.append_row(phi);
      return;
    }
  }
}

Matrix replay(const Matrix& input, const Trace& trace, const StepObserver& observer) {
  Matrix work = input;
  for (const auto& step : trace) {
    if (observer) {
      const Matrix before = work;
      apply_step(work, step);
      observer(before, step, work);
    } else {
      apply_step(work, step);
    }
  }
  work.erase_zero_rows();
  return work;
}

std::string format_trace(const Nearfield& nf, const Trace& trace) {
  std::ostringstream out;
  for (const auto& s : trace) {
    out << kind_name(s.kind);
    switch (s.kind) {
      case StepKind::swap:
        out << ' ' << s.row + 1 << ' ' << s.other + 1;
        break;
      case StepKind::scale:
        out << ' ' << s.row + 1 << ' ' << format_element(nf, s.scalar);
        break;
      case StepKind::eliminate:
        out << ' ' << s.row + 1 << ' ' << s.other + 1 << ' ' << format_element(nf, s.scalar);
        break;
      case StepKind::trick:
        out << ' ' << s.column + 1 << ' ' << format_element(nf, s.witness.alpha) << ' '
            << format_element(nf, s.witness.beta) << ' ' << format_element(nf, s.witness.lambda);
        break;
    }
    out << '\n';
  }
  return out.str();
}

Trace parse_trace(const Nearfield& nf, std::string_view text) {
  Trace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    auto index = [&](const std::string& t) -> std::size_t {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size() || v == 0) {
        throw ParseError("trace line " + std::to_string(lineno) + ": bad index '" + t + "'");
      }
      return v - 1;
    };
    auto expect = [&](std::size_t count) {
      if (tok.size() != count) {
        throw ParseError("trace line " + std::to_string(lineno) + ": expected " +
                         std::to_string(count - 1) + " operands");
      }
    };
    Step s;
    if (tok[0] == "SWAP") {
      expect(3);
      s = Step{.kind = StepKind::swap, .row = index(tok[1]), .other = index(tok[2])};
    } else if (tok[0] == "SCALE") {
      expect(3);
      s = Step{.kind = StepKind::scale, .row = index(tok[1]), .scalar = parse_element(nf, tok[2])};
    } else if (tok[0] == "ELIM") {
      expect(4);
      s = Step{.kind = StepKind::eliminate,
               .row = index(tok[1]),
               .other = index(tok[2]),
               .scalar = parse_element(nf, tok[3])};
    } else if (tok[0] == "TRICK") {
      expect(5);
      s = Step{.kind = StepKind::trick,
               .column = index(tok[1]),
               .witness = {parse_element(nf, tok[2]), parse_element(nf, tok[3]),
                           parse_element(nf, tok[4])}};
    } else {
      throw ParseError("trace line " + std::to_string(lineno) + ": unknown step '" + tok[0] + "'");
    }
    trace.push_back(std::move(s));
  }
  return trace;
}

bool is_one_column_independent(const Matrix& m) {
  if (m.cols() < 2) throw Error("1-column independence needs at least two columns");
  const auto pattern = column_dependence_pattern(m);
  for (bool dependent : pattern) {
    if (dependent) return false;
  }
  return true;
}

std::vector<bool> column_dependence_pattern(const Matrix& m) {
  const std::size_t cols = m.cols();
  std::vector<Vector> columns;
  columns.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) columns.push_back(m.column(j));
  std::vector<bool> pattern(cols * cols, false);
  for (std::size_t a = 0; a < cols; ++a) {
    for (std::size_t b = 0; b < cols; ++b) {
      if (a == b) continue;
      pattern[a * cols + b] = left_multiple_of(m.nf(), columns[a], columns[b]).has_value();
    }
  }
  return pattern;
}

}  // namespace nearvec
