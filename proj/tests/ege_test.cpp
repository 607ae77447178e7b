#include <gtest/gtest.h>

#include <random>

#include "nearvec/closure.hpp"
#include "nearvec/ege.hpp"
#include "nearvec/error.hpp"
#include "nearvec/matrix_io.hpp"
#include "oracle.hpp"

namespace nearvec {
namespace {

constexpr Element k0{0}, k1{1}, k2{2}, kX{3}, k2X{5}, k2x{6};

class EgeTest : public ::testing::Test {
 protected:
  NearfieldPtr nf = Nearfield::build(3, 2);

  Matrix mat(std::size_t cols, std::vector<Vector> rows) const { return Matrix(nf, cols, std::move(rows)); }
};

// Shape produced by EGE: 1-led rows sorted by leading column, at most one
// nonzero per column, no zero rows.
void expect_canonical_shape(const Matrix& b) {
  std::optional<std::size_t> prev;
  for (const auto& row : b.row_list()) {
    const auto lead = leading_index(row);
    ASSERT_TRUE(lead.has_value());
    EXPECT_EQ(row[*lead], Nearfield::one());
    if (prev) EXPECT_GT(*lead, *prev);
    prev = lead;
  }
  for (std::size_t j = 0; j < b.cols(); ++j) EXPECT_LE(column_nonzeros(b, j), 1u);
}

TEST_F(EgeTest, RrefOfSmallMatrix) {
  const auto res = rref(mat(3, {{k2, kX, k0}, {k1, k0, k1}}));
  EXPECT_EQ(res.matrix, mat(3, {{k1, k0, k1}, {k0, k1, k2x}}));
  for (const auto& step : res.trace) EXPECT_NE(step.kind, StepKind::trick);
}

TEST_F(EgeTest, RrefDropsZeroRows) {
  const auto res = rref(mat(2, {{k1, kX}, {k2, k2x}, {k0, k0}}));
  EXPECT_EQ(res.matrix, mat(2, {{k1, kX}}));
}

TEST_F(EgeTest, FirstConflictColumn) {
  EXPECT_EQ(first_conflict_column(mat(3, {{k1, k0, k1}, {k0, k1, k2}})), 2u);
  EXPECT_FALSE(first_conflict_column(Matrix::identity(nf, 3)).has_value());
}

TEST_F(EgeTest, TrickOnSeedRows) {
  // Rows (1,0,1), (0,1,2): theta's conflict entry is 2+x.
  const Matrix m = mat(3, {{k1, k0, k1}, {k0, k1, k2}});
  const Witness w{k1, kX, kX};
  const Matrix out = distributivity_trick(m, 2, w);
  ASSERT_EQ(out.rows(), 3u);
  EXPECT_EQ(out.row(2), (Vector{k0, k0, k1}));
  EXPECT_EQ(out.row(0), (Vector{k1, k0, k0}));
  EXPECT_EQ(out.row(1), (Vector{k0, k1, k0}));
  const auto dec = ege(m);
  bool saw_trick = false;
  for (const auto& s : dec.trace) {
    if (s.kind != StepKind::trick) continue;
    saw_trick = true;
    EXPECT_EQ(s.theta[2], k2X);
  }
  EXPECT_TRUE(saw_trick);
}

TEST_F(EgeTest, TrickPreconditions) {
  const Matrix m = mat(3, {{k1, k0, k1}, {k0, k1, k2}});
  EXPECT_THROW(distributivity_trick(m, 1, Witness{k1, kX, kX}), Error);
  EXPECT_THROW(distributivity_trick(m, 2, Witness{k1, k1, k1}), Error);
  EXPECT_THROW(ege(m, Witness{k0, k0, k0}), Error);
}

TEST_F(EgeTest, GeneratesAllOfR3FromTwoVectors) {
  const Matrix v = mat(3, {{k1, k0, k1}, {k1, k1, k0}});
  const auto dec = ege(v);
  EXPECT_TRUE(dec.canonical);
  EXPECT_EQ(dec.dimension, 3u);
  EXPECT_EQ(dec.basis, Matrix::identity(nf, 3));
  EXPECT_EQ(format_trace(*nf, dec.trace), "ELIM 2 1 1\nTRICK 3 1 x x\n");
}

TEST_F(EgeTest, CustomWitnessGivesSameSubgroup) {
  const Matrix v = mat(3, {{k1, kX, k2}, {k1, k1, k0}});
  const auto w = Witness{kX, k1, kX};
  ASSERT_TRUE(is_witness(*nf, w));
  const auto a = ege(v);
  const auto b = ege(v, w);
  const auto ga = gen_closure(make_set(nf, 3, a.basis.row_list()));
  const auto gb = gen_closure(make_set(nf, 3, b.basis.row_list()));
  EXPECT_TRUE(ga == gb);
}

TEST_F(EgeTest, TraceRoundTripAndReplay) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Matrix m = oracle::random_matrix(rng, nf, 1 + i % 3, 1 + (i / 3) % 4);
    const auto dec = ege(m);
    const std::string text = format_trace(*nf, dec.trace);
    const Trace parsed = parse_trace(*nf, text);
    EXPECT_EQ(format_trace(*nf, parsed), text);
    EXPECT_EQ(replay(m, parsed), dec.basis);
  }
}

TEST_F(EgeTest, ParseTraceRejectsGarbage) {
  EXPECT_THROW(parse_trace(*nf, "SWAP 1\n"), Error);
  EXPECT_THROW(parse_trace(*nf, "JUMP 1 2\n"), Error);
  EXPECT_THROW(parse_trace(*nf, "SCALE 0 1\n"), Error);
  EXPECT_THROW(parse_trace(*nf, "ELIM 1 2 9\n"), Error);
  EXPECT_NO_THROW(parse_trace(*nf, "# comment\n\nSWAP 1 2\n"));
}

TEST_F(EgeTest, ReplayRejectsStepsThatDoNotApply) {
  const Matrix m = mat(2, {{k1, k0}});
  EXPECT_THROW(replay(m, parse_trace(*nf, "SWAP 1 2\n")), Error);
  EXPECT_THROW(replay(m, parse_trace(*nf, "TRICK 1 1 x x\n")), Error);
}

TEST_F(EgeTest, RandomMatricesMatchClosureOracle) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 120; ++i) {
    const std::size_t k = 1 + rng() % 3;
    const std::size_t m = 1 + rng() % 3;
    const Matrix in = oracle::random_matrix(rng, nf, k, m);
    const auto dec = ege(in);
    ASSERT_TRUE(dec.canonical);
    expect_canonical_shape(dec.basis);
    const auto naive_in = oracle::naive_gen(*nf, in.row_list(), m);
    const auto naive_out = oracle::naive_gen(*nf, dec.basis.row_list(), m);
    ASSERT_EQ(naive_in, naive_out) << format_matrix(in);
    std::uint64_t expected = 1;
    for (std::size_t d = 0; d < dec.dimension; ++d) expected *= 9;
    EXPECT_EQ(naive_in.size(), expected);
  }
}

TEST_F(EgeTest, WorksOverLargerNearfield) {
  const auto nf25 = Nearfield::build(5, 2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Matrix in = oracle::random_matrix(rng, nf25, 2, 3);
    const auto dec = ege(in);
    expect_canonical_shape(dec.basis);
    EXPECT_TRUE(gen_closure(make_set(nf25, 3, in.row_list())) ==
                gen_closure(make_set(nf25, 3, dec.basis.row_list())));
  }
}

TEST_F(EgeTest, FieldWithConflictIsNotCanonical) {
  const auto gf5 = Nearfield::build(5, 1);
  const Matrix m(gf5, 3, {{k1, k0, k1}, {k0, k1, k2}});
  const auto dec = ege(m);
  EXPECT_FALSE(dec.canonical);
  EXPECT_EQ(dec.dimension, 2u);
  const Matrix clean(gf5, 2, {{k1, k2}, {k2, Element{4}}});
  EXPECT_TRUE(ege(clean).canonical);
}

TEST_F(EgeTest, OneColumnIndependence) {
  EXPECT_TRUE(is_one_column_independent(mat(3, {{k1, k0, k1}, {k0, k1, k2}})));
  // Column 2 = x∘column 1.
  EXPECT_FALSE(is_one_column_independent(mat(2, {{k1, kX}, {kX, k2}})));
  EXPECT_FALSE(is_one_column_independent(mat(2, {{k1, k0}, {k2, k0}})));
  EXPECT_THROW(is_one_column_independent(mat(1, {{k1}})), Error);
  const auto pattern = column_dependence_pattern(mat(2, {{k1, kX}, {kX, k2}}));
  EXPECT_EQ(pattern, (std::vector<bool>{false, true, true, false}));
}

TEST_F(EgeTest, ColumnDependenceInvariantAlongTraces) {
  std::mt19937_64 rng(99);
  int steps = 0;
  for (int i = 0; i < 150; ++i) {
    const std::size_t k = 1 + rng() % 3;
    const std::size_t m = 2 + rng() % 3;
    const Matrix in = oracle::random_matrix(rng, nf, k, m);
    const auto dec = ege(in);
    replay(in, dec.trace, [&](const Matrix& before, const Step&, const Matrix& after) {
      ++steps;
      ASSERT_EQ(column_dependence_pattern(before), column_dependence_pattern(after));
    });
    EXPECT_EQ(column_dependence_pattern(in), column_dependence_pattern(dec.basis));
  }
  EXPECT_GT(steps, 0);
}

}  // namespace
}  // namespace nearvec
