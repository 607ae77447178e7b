#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "nearvec/element_codec.hpp"
#include "nearvec/error.hpp"
#include "nearvec/nearfield.hpp"
#include "oracle.hpp"

namespace nearvec {
namespace {

// Element codes for DN(3,2): c0 + 3*c1.
constexpr Element k0{0}, k1{1}, k2{2}, kX{3}, k1X{4}, k2X{5}, k2x{6}, k12x{7}, k22x{8};

TEST(DicksonPair, AcceptsAndRejects) {
  EXPECT_TRUE(validate_dickson_pair(3, 2).valid);
  EXPECT_TRUE(validate_dickson_pair(5, 2).valid);
  EXPECT_TRUE(validate_dickson_pair(5, 4).valid);
  EXPECT_TRUE(validate_dickson_pair(7, 3).valid);
  EXPECT_TRUE(validate_dickson_pair(4, 3).valid);
  EXPECT_TRUE(validate_dickson_pair(9, 2).valid);
  EXPECT_TRUE(validate_dickson_pair(2, 1).valid);

  auto v = validate_dickson_pair(3, 4);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.reason, "q ≡ 3 mod 4 and 4 | n");

  v = validate_dickson_pair(6, 2);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.reason, "q=6 is not a prime power");

  v = validate_dickson_pair(3, 5);
  EXPECT_FALSE(v.valid);
  EXPECT_NE(v.reason.find("does not divide q−1=2"), std::string::npos);

  EXPECT_FALSE(validate_dickson_pair(2, 2).valid);
  EXPECT_FALSE(validate_dickson_pair(1, 1).valid);
  EXPECT_FALSE(validate_dickson_pair(3, 0).valid);
}

TEST(DicksonPair, PrimePowerDecomposition) {
  const auto v = validate_dickson_pair(9, 2);
  EXPECT_EQ(v.p, 3u);
  EXPECT_EQ(v.l, 2u);
}

TEST(Nearfield, BuildRejectsInvalidPairAndOversize) {
  EXPECT_THROW(Nearfield::build(3, 4), Error);
  EXPECT_THROW(Nearfield::build(5, 2, 24), Error);
  EXPECT_NO_THROW(Nearfield::build(5, 2, 25));
}

TEST(Nearfield, Dn32Parameters) {
  const auto nf = Nearfield::build(3, 2);
  EXPECT_EQ(nf->order(), 9u);
  EXPECT_EQ(nf->degree(), 2u);
  EXPECT_FALSE(nf->is_field());
  EXPECT_EQ(nf->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));  // x^2 + 1
  EXPECT_EQ(nf->generator(), k1X);
  EXPECT_EQ(nf->coset_residues(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Nearfield, Dn32HandValues) {
  const auto nf = Nearfield::build(3, 2);
  EXPECT_EQ(nf->mul(kX, kX), k2);
  EXPECT_EQ(nf->mul(k1X, kX), k12x);
  EXPECT_EQ(nf->inv(kX), k2x);
  EXPECT_EQ(nf->inv(k2), k2);
  EXPECT_EQ(nf->add(k2X, k22x), k1);
  EXPECT_EQ(nf->neg(k12x), k2X);
  EXPECT_THROW(nf->inv(k0), Error);
  // Squares of GF(9) multiply untwisted.
  for (Element s : {k1, k2, kX, k2x}) EXPECT_EQ(nf->coset_index(s), 0u);
  for (Element s : {k1X, k2X, k12x, k22x}) EXPECT_EQ(nf->coset_index(s), 1u);
}

// Reference multiplication table of DN(3,2), row label = left operand, as element strings.
const char* const kPrintedTable[9][9] = {
    {"0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "1", "2", "x", "1+x", "2+x", "2x", "1+2x", "2+2x"},
    {"0", "2", "1", "2x", "2+2x", "1+2x", "x", "2+x", "1+x"},
    {"0", "x", "2x", "2", "1+2x", "1+x", "1", "2+2x", "2+x"},
    {"0", "1+x", "2+2x", "2+x", "2", "2x", "1+2x", "x", "1"},
    {"0", "2+x", "1+2x", "2+2x", "x", "2", "1+x", "1", "2x"},
    {"0", "2x", "x", "1", "2+x", "2+2x", "2", "1+x", "1+2x"},
    {"0", "1+2x", "2+x", "1+x", "2x", "1", "2+2x", "2", "x"},
    {"0", "2+2x", "1+x", "1+2x", "1", "x", "2+x", "2x", "2"},
};

TEST(Nearfield, Dn32TableTransposeMatchesPrintedTable) {
  const auto nf = Nearfield::build(3, 2);
  const auto table = mul_table(*nf);
  ASSERT_EQ(table.size(), 9u);
  for (std::uint32_t a = 0; a < 9; ++a) {
    for (std::uint32_t b = 0; b < 9; ++b) {
      EXPECT_EQ(format_element(*nf, table[b][a]), kPrintedTable[a][b]) << "a=" << a << " b=" << b;
    }
  }
}

TEST(Nearfield, Dn32FollowsSquareRule) {
  // a∘b = ab if a is a square in GF(9), ab^3 otherwise; GF(9) = Z3[x]/(x^2+1).
  const auto nf = Nearfield::build(3, 2);
  const oracle::SlowField gf(3, {1, 0, 1});
  std::vector<bool> square(9, false);
  for (std::uint32_t a = 1; a < 9; ++a) square[gf.mul(a, a)] = true;
  for (std::uint32_t a = 0; a < 9; ++a) {
    for (std::uint32_t b = 0; b < 9; ++b) {
      const std::uint32_t want = square[a] || a == 0 ? gf.mul(a, b) : gf.mul(a, gf.pow(b, 3));
      EXPECT_EQ(nf->mul(Element{a}, Element{b}).code, want);
    }
  }
}

class NearfieldOracle : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(NearfieldOracle, MatchesDefinition) {
  const auto [q, n] = GetParam();
  const auto nf = Nearfield::build(q, n);
  const oracle::SlowField probe(nf->p(), nf->modulus());
  ASSERT_FALSE(probe.has_zero_divisors()) << "modulus reducible";
  const oracle::SlowNearfield slow(nf->p(), nf->q(), nf->n(), nf->modulus());
  EXPECT_EQ(slow.generator(), nf->generator().code);
  for (std::uint32_t a = 0; a < nf->order(); ++a) {
    for (std::uint32_t b = 0; b < nf->order(); ++b) {
      ASSERT_EQ(nf->mul(Element{a}, Element{b}).code, slow.mul(a, b)) << a << "∘" << b;
      ASSERT_EQ(nf->add(Element{a}, Element{b}).code, slow.field().add(a, b));
      ASSERT_EQ(nf->field_mul(Element{a}, Element{b}).code, slow.field().mul(a, b));
    }
  }
}

TEST_P(NearfieldOracle, ModulusIsLexicographicallySmallest) {
  const auto [q, n] = GetParam();
  const auto nf = Nearfield::build(q, n);
  const std::uint32_t p = nf->p();
  const std::uint32_t d = nf->degree();
  // Walk monic candidates in the c0-first lexicographic order; the first
  // irreducible one must be the library's.
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint32_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint32_t> c(d + 1, 0);
    std::uint32_t rest = idx;
    // Digits of idx with c0 most significant.
    for (std::uint32_t i = d; i-- > 0;) {
      c[i] = rest % p;
      rest /= p;
    }
    c[d] = 1;
    if (!oracle::SlowField(p, c).has_zero_divisors()) {
      EXPECT_EQ(c, nf->modulus());
      return;
    }
  }
  FAIL() << "no irreducible polynomial found";
}

INSTANTIATE_TEST_SUITE_P(SmallPairs, NearfieldOracle,
                         ::testing::Values(std::pair{3, 2}, std::pair{5, 2}, std::pair{7, 2},
                                           std::pair{4, 3}, std::pair{9, 2}, std::pair{2, 1},
                                           std::pair{5, 1}));

class NearfieldLaws : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(NearfieldLaws, Exhaustive) {
  const auto [q, n] = GetParam();
  const auto nf = Nearfield::build(q, n);
  const std::uint32_t o = nf->order();
  for (std::uint32_t a = 0; a < o; ++a) {
    const Element x{a};
    EXPECT_EQ(nf->mul(x, Nearfield::one()), x);
    EXPECT_EQ(nf->mul(Nearfield::one(), x), x);
    EXPECT_EQ(nf->mul(Nearfield::zero(), x), Nearfield::zero());
    EXPECT_EQ(nf->mul(x, Nearfield::zero()), Nearfield::zero());
    EXPECT_EQ(nf->add(x, nf->neg(x)), Nearfield::zero());
    if (a != 0) {
      EXPECT_EQ(nf->mul(x, nf->inv(x)), Nearfield::one());
      EXPECT_EQ(nf->mul(nf->inv(x), x), Nearfield::one());
    }
    for (std::uint32_t b = 0; b < o; ++b) {
      const Element y{b};
      ASSERT_EQ(nf->add(x, y), nf->add(y, x));
      for (std::uint32_t c = 0; c < o; ++c) {
        const Element z{c};
        ASSERT_EQ(nf->mul(nf->mul(x, y), z), nf->mul(x, nf->mul(y, z)));
        ASSERT_EQ(nf->mul(x, nf->add(y, z)), nf->add(nf->mul(x, y), nf->mul(x, z)));
        ASSERT_EQ(nf->add(nf->add(x, y), z), nf->add(x, nf->add(y, z)));
      }
    }
  }
  const auto w = find_witness(*nf);
  if (nf->is_field()) {
    EXPECT_FALSE(w.has_value());
  } else {
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_witness(*nf, *w));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPairs, NearfieldLaws,
                         ::testing::Values(std::pair{3, 2}, std::pair{5, 2}, std::pair{7, 2},
                                           std::pair{4, 3}, std::pair{2, 1}, std::pair{3, 1}));

TEST(Witness, Dn32CanonicalWitness) {
  const auto nf = Nearfield::build(3, 2);
  const auto w = find_witness(*nf);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (Witness{k1, kX, kX}));
  // (1+x)∘x = 1+2x but 1∘x + x∘x = x + 2.
  EXPECT_EQ(nf->mul(k1X, kX), k12x);
  EXPECT_EQ(nf->add(nf->mul(k1, kX), nf->mul(kX, kX)), k2X);
}

TEST(Witness, FirstInLexicographicOrder) {
  const auto nf = Nearfield::build(5, 2);
  const auto w = find_witness(*nf);
  ASSERT_TRUE(w.has_value());
  const std::uint32_t o = nf->order();
  for (std::uint32_t a = 0; a < o; ++a) {
    for (std::uint32_t b = 0; b < o; ++b) {
      for (std::uint32_t c = 0; c < o; ++c) {
        const Witness t{Element{a}, Element{b}, Element{c}};
        if (t == *w) return;
        ASSERT_FALSE(is_witness(*nf, t));
      }
    }
  }
}

TEST(Witness, FieldHasNone) {
  EXPECT_FALSE(find_witness(*Nearfield::build(9, 1)).has_value());
  EXPECT_FALSE(find_witness(*Nearfield::build(2, 1)).has_value());
}

TEST(Nearfield, LargerOrderSpotChecks) {
  // 625 elements: sample the laws on a seeded grid instead of exhaustively.
  const auto nf = Nearfield::build(5, 4);
  EXPECT_EQ(nf->order(), 625u);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, 624);
  for (int i = 0; i < 20000; ++i) {
    const Element x{pick(rng)}, y{pick(rng)}, z{pick(rng)};
    ASSERT_EQ(nf->mul(nf->mul(x, y), z), nf->mul(x, nf->mul(y, z)));
    ASSERT_EQ(nf->mul(x, nf->add(y, z)), nf->add(nf->mul(x, y), nf->mul(x, z)));
    if (x.code != 0) ASSERT_EQ(nf->mul(nf->inv(x), x), Nearfield::one());
  }
}

TEST(Tables, LimitEnforced) {
  const auto nf = Nearfield::build(5, 4);
  EXPECT_NO_THROW(add_table(*nf));
  const auto big = Nearfield::build(9, 4);  // 6561 > table limit
  EXPECT_THROW(mul_table(*big), Error);
}

TEST(Codec, FormatsPolynomialAndCode) {
  const auto nf = Nearfield::build(3, 2);
  EXPECT_EQ(format_element(*nf, k0), "0");
  EXPECT_EQ(format_element(*nf, k22x), "2+2x");
  EXPECT_EQ(format_element(*nf, kX), "x");
  EXPECT_EQ(format_element(*nf, k22x, ElementStyle::code), "8");
  const auto nf4 = Nearfield::build(4, 3);  // GF(2^6)
  EXPECT_EQ(format_element(*nf4, Element{1 + 4}), "1+x^2");
}

TEST(Codec, ParseRoundTripAllElements) {
  for (auto [q, n] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{4, 3}}) {
    const auto nf = Nearfield::build(q, n);
    for (std::uint32_t c = 0; c < nf->order(); ++c) {
      const Element a{c};
      EXPECT_EQ(parse_element(*nf, format_element(*nf, a)), a);
      EXPECT_EQ(parse_element(*nf, format_element(*nf, a, ElementStyle::code)), a);
      EXPECT_EQ(parse_element(*nf, format_element(*nf, a), ParseMode::polynomial), a);
    }
  }
}

TEST(Codec, ParseErrors) {
  const auto nf = Nearfield::build(3, 2);
  EXPECT_EQ(parse_element(*nf, "X"), kX);
  EXPECT_EQ(parse_element(*nf, "2"), k2);
  EXPECT_EQ(parse_element(*nf, "7"), k12x);  // all-digit tokens are codes
  EXPECT_THROW(parse_element(*nf, "9"), ParseError);
  EXPECT_THROW(parse_element(*nf, "3x"), ParseError);
  EXPECT_THROW(parse_element(*nf, "x^2"), ParseError);
  EXPECT_THROW(parse_element(*nf, "x+1"), ParseError);
  EXPECT_THROW(parse_element(*nf, "1+"), ParseError);
  EXPECT_THROW(parse_element(*nf, ""), ParseError);
  EXPECT_THROW(parse_element(*nf, "y"), ParseError);
  EXPECT_THROW(parse_element(*nf, "2x", ParseMode::code), ParseError);
}

}  // namespace
}  // namespace nearvec
