#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nearvec {

// An element of DN(q,n), stored as the integer code sum c_i p^i of its
// coefficient vector over GF(p) (little-endian digits).
struct Element {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

struct PairVerdict {
  bool valid = false;
  std::string reason;  // empty when valid
  std::uint64_t p = 0;  // prime with q = p^l (0 if q is not a prime power)
  std::uint64_t l = 0;
};

// Checks the three Dickson-pair conditions on (q, n).
PairVerdict validate_dickson_pair(std::int64_t q, std::int64_t n);

// A triple violating right distributivity: (alpha+beta)∘lambda != alpha∘lambda + beta∘lambda.
struct Witness {
  Element alpha;
  Element beta;
  Element lambda;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Finite Dickson nearfield DN(q,n) = (GF(q^n), +, ∘).
///
/// The multiplication is a∘b = a · b^(q^j(a)) where a = g^k and j(a) is the
/// unique j in [0,n) with k ≡ (q^j - 1)/(q - 1) (mod n). The underlying field
/// is GF(p)[x]/(f) with f the lexicographically smallest monic irreducible
/// polynomial of degree l·n (coefficients compared from the constant term
/// up), and g is the primitive element of smallest code.
///
/// Instances are immutable after `build` and may be shared between threads.
class Nearfield {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 12;

  // Throws Error on an invalid pair or when q^n exceeds max_order (capped at kMaxOrder).
  static std::shared_ptr<const Nearfield> build(std::int64_t q, std::int64_t n,
                                                std::uint64_t max_order = kMaxOrder);

  std::uint64_t q() const { return q_; }
  std::uint64_t n() const { return n_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t l() const { return l_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t order() const { return order_; }
  bool is_field() const { return n_ == 1; }

  // Monic modulus coefficients c_0..c_d (c_d == 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Element generator() const { return generator_; }
  // residue[j] = (q^j - 1)/(q - 1) mod n for j = 0..n-1.
  const std::vector<std::uint32_t>& coset_residues() const { return residues_; }

  static constexpr Element zero() { return Element{0}; }
  static constexpr Element one() { return Element{1}; }
  bool contains(Element a) const { return a.code < order_; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const { return Element{neg_[a.code]}; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  // Untwisted product in GF(q^n).
  Element field_mul(Element a, Element b) const;
  // Nearfield product a∘b.
  Element mul(Element a, Element b) const;
  // Two-sided inverse for ∘; throws Error("division by zero") on 0.
  Element inv(Element a) const;

  // j(a) in [0,n); throws on a == 0.
  std::uint32_t coset_index(Element a) const;
  // k with a = g^k; throws on a == 0.
  std::uint32_t log(Element a) const;
  Element exp(std::uint64_t k) const { return Element{exp_[k % (order_ - 1)]}; }
  // b^(q^j) in the underlying field.
  Element frobenius(Element b, std::uint32_t j) const;

  // Base-p digits c_0..c_{d-1} of a.
  std::vector<std::uint32_t> digits(Element a) const;
  Element from_digits(const std::vector<std::uint32_t>& digits) const;

 private:
  Nearfield() = default;

  std::uint64_t q_ = 0;
  std::uint64_t n_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t l_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element generator_;
  std::vector<std::uint32_t> residues_;

  std::vector<std::uint32_t> exp_;       // size order-1
  std::vector<std::uint32_t> log_;       // size order, log_[0] unused
  std::vector<std::uint32_t> neg_;       // size order
  std::vector<std::uint32_t> coset_;     // j(a) per code, coset_[0] unused
  std::vector<std::uint64_t> qpow_;      // q^j mod (order-1), j = 0..n
  std::vector<std::uint32_t> add_cache_;  // order*order when order is small
  std::vector<std::uint32_t> mul_cache_;
};

using NearfieldPtr = std::shared_ptr<const Nearfield>;

// True iff w violates right distributivity in nf.
bool is_witness(const Nearfield& nf, const Witness& w);

// First right-distributivity violation in lexicographic (alpha, beta, lambda)
// code order; nullopt iff nf is a field (n == 1).
std::optional<Witness> find_witness(const Nearfield& nf);

// table[a][b] = a∘b (row = left operand). Throws when order > kMaxTableOrder.
std::vector<std::vector<Element>> mul_table(const Nearfield& nf);
std::vector<std::vector<Element>> add_table(const Nearfield& nf);

}  // namespace nearvec
