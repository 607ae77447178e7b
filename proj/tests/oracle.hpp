#pragma once

// Brute-force reference implementations used as test oracles. The arithmetic
// oracles only borrow the modulus; the set oracles use the vector helpers,
// whose scalar arithmetic is itself checked against SlowNearfield.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "nearvec/nearfield.hpp"
#include "nearvec/vectors.hpp"

namespace nearvec::oracle {

// GF(p^d) with elements as base-p digit vectors and a given monic modulus.
class SlowField {
 public:
  SlowField(std::uint32_t p, std::vector<std::uint32_t> modulus)
      : p_(p), d_(static_cast<std::uint32_t>(modulus.size() - 1)), mod_(std::move(modulus)) {
    order_ = 1;
    for (std::uint32_t i = 0; i < d_; ++i) order_ *= p_;
  }

  std::uint32_t order() const { return order_; }

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> out(d_);
    for (auto& c : out) {
      c = a % p_;
      a /= p_;
    }
    return out;
  }

  std::uint32_t code(const std::vector<std::uint32_t>& c) const {
    std::uint32_t out = 0;
    for (std::size_t i = c.size(); i-- > 0;) out = out * p_ + c[i];
    return out;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a);
    auto y = digits(b);
    for (std::uint32_t i = 0; i < d_; ++i) x[i] = (x[i] + y[i]) % p_;
    return code(x);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = digits(a);
    const auto y = digits(b);
    std::vector<std::uint32_t> prod(2 * d_, 0);
    for (std::uint32_t i = 0; i < d_; ++i) {
      for (std::uint32_t j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    for (std::uint32_t top = 2 * d_ - 1; top >= d_; --top) {
      const std::uint32_t c = prod[top];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= d_; ++i) {
        prod[top - d_ + i] = (prod[top - d_ + i] + (p_ - c) * mod_[i]) % p_;
      }
    }
    prod.resize(d_);
    return code(prod);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t out = 1;
    for (std::uint64_t i = 0; i < e; ++i) out = mul(out, a);
    return out;
  }

  // The modulus is irreducible iff the quotient ring has no zero divisors.
  bool has_zero_divisors() const {
    for (std::uint32_t a = 1; a < order_; ++a) {
      for (std::uint32_t b = 1; b < order_; ++b) {
        if (mul(a, b) == 0) return true;
      }
    }
    return false;
  }

 private:
  std::uint32_t p_;
  std::uint32_t d_;
  std::vector<std::uint32_t> mod_;
  std::uint32_t order_;
};

// DN(q,n) from the definition: a∘b = a·b^(q^j) where log a ≡ (q^j-1)/(q-1) mod n,
// using an independently found generator and discrete logs by repeated multiplication.
class SlowNearfield {
 public:
  SlowNearfield(std::uint32_t p, std::uint64_t q, std::uint64_t n, std::vector<std::uint32_t> modulus)
      : field_(p, std::move(modulus)), q_(q), n_(n) {
    const std::uint32_t group = field_.order() - 1;
    for (std::uint32_t g = 1; g < field_.order(); ++g) {
      std::uint32_t x = g;
      std::uint32_t ord = 1;
      while (x != 1) {
        x = field_.mul(x, g);
        ++ord;
      }
      if (ord == group) {
        gen_ = g;
        break;
      }
    }
    log_.assign(field_.order(), 0);
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k < group; ++k) {
      log_[x] = k;
      x = field_.mul(x, gen_);
    }
  }

  const SlowField& field() const { return field_; }
  std::uint32_t generator() const { return gen_; }

  std::uint32_t j_of(std::uint32_t a) const {
    std::uint64_t residue = 0;  // (q^j - 1)/(q - 1) = 1 + q + ... + q^(j-1)
    std::uint64_t qpow = 1;
    for (std::uint64_t j = 0; j < n_; ++j) {
      if (residue % n_ == log_[a] % n_) return static_cast<std::uint32_t>(j);
      residue += qpow;
      qpow *= q_;
    }
    return UINT32_MAX;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t twisted = b;
    for (std::uint32_t j = 0; j < j_of(a); ++j) twisted = field_.pow(twisted, q_);
    return field_.mul(a, twisted);
  }

 private:
  SlowField field_;
  std::uint64_t q_;
  std::uint64_t n_;
  std::uint32_t gen_ = 1;
  std::vector<std::uint32_t> log_;
};

// gen(V) by naive saturation: closed under + and right scalars.
inline std::set<Vector> naive_gen(const Nearfield& nf, const std::vector<Vector>& v, std::size_t m) {
  std::set<Vector> s{zero_vector(m)};
  for (const auto& x : v) s.insert(x);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Vector> cur(s.begin(), s.end());
    for (const auto& x : cur) {
      for (std::uint32_t r = 0; r < nf.order(); ++r) {
        changed |= s.insert(scale_right(nf, x, Element{r})).second;
      }
    }
    const std::vector<Vector> cur2(s.begin(), s.end());
    for (const auto& x : cur2) {
      for (const auto& y : cur2) changed |= s.insert(add(nf, x, y)).second;
    }
  }
  return s;
}

// LC_1(V): all finite sums of right-scaled elements of V, by naive enumeration
// of coefficient tuples (sums with one scalar per vector suffice because
// v∘a + v∘b = v∘(a+b)).
inline std::set<Vector> naive_lc1(const Nearfield& nf, const std::vector<Vector>& v, std::size_t m) {
  std::set<Vector> out;
  std::vector<std::uint32_t> coeff(v.size(), 0);
  while (true) {
    Vector acc = zero_vector(m);
    for (std::size_t i = 0; i < v.size(); ++i) acc = add(nf, acc, scale_right(nf, v[i], Element{coeff[i]}));
    out.insert(acc);
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == nf.order()) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  return out;
}

inline Vector random_vector(std::mt19937_64& rng, const Nearfield& nf, std::size_t m) {
  std::uniform_int_distribution<std::uint32_t> pick(0, nf.order() - 1);
  Vector v(m);
  for (auto& a : v) a = Element{pick(rng)};
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, const NearfieldPtr& nf, std::size_t k, std::size_t m) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vector(rng, *nf, m));
  return Matrix(nf, m, std::move(rows));
}

}  // namespace nearvec::oracle
