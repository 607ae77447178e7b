#include "nearvec/nearfield.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nearvec/error.hpp"

namespace nearvec {
__extension__ using u128 = unsigned __int128;
namespace {

constexpr std::uint64_t kAddCacheOrder = 1024;

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t f = 2; f * f <= value; ++f) {
    if (value % f != 0) continue;
    primes.push_back(f);
    while (value % f == 0) value /= f;
  }
  if (value > 1) primes.push_back(value);
  return primes;
}

// Polynomials over GF(p) as little-endian coefficient vectors.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return result;
}

Poly digits_of(std::uint64_t code, std::uint32_t p, std::uint32_t d) {
  Poly out(d, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

std::uint32_t code_of(const Poly& a, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return static_cast<std::uint32_t>(code);
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits_of(c, p, k);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree d, comparing the
// constant term first.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t d) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    // c_0 is the most significant digit of rank.
    Poly f(d + 1, 0);
    std::uint64_t r = rank;
    for (std::uint32_t i = d; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    f[d] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error("internal fault: no irreducible polynomial of degree " + std::to_string(d));
}

}  // namespace

PairVerdict validate_dickson_pair(std::int64_t q, std::int64_t n) {
  PairVerdict verdict;
  if (q < 2) {
    verdict.reason = "q must be at least 2";
    return verdict;
  }
  if (n < 1) {
    verdict.reason = "n must be at least 1";
    return verdict;
  }
  const auto uq = static_cast<std::uint64_t>(q);
  const auto un = static_cast<std::uint64_t>(n);
  const auto q_primes = prime_factors(uq);
  if (q_primes.size() != 1) {
    verdict.reason = "q=" + std::to_string(uq) + " is not a prime power";
    return verdict;
  }
  verdict.p = q_primes.front();
  for (std::uint64_t v = uq; v > 1; v /= verdict.p) ++verdict.l;

  for (std::uint64_t r : prime_factors(un)) {
    if ((uq - 1) % r != 0) {
      verdict.reason = std::to_string(r) + " does not divide q−1=" + std::to_string(uq - 1);
      return verdict;
    }
  }
  if (uq % 4 == 3 && un % 4 == 0) {
    verdict.reason = "q ≡ 3 mod 4 and 4 | n";
    return verdict;
  }
  verdict.valid = true;
  return verdict;
}

std::shared_ptr<const Nearfield> Nearfield::build(std::int64_t q, std::int64_t n,
                                                  std::uint64_t max_order) {
  const PairVerdict verdict = validate_dickson_pair(q, n);
  if (!verdict.valid) throw Error("invalid Dickson pair (" + std::to_string(q) + "," +
                                  std::to_string(n) + "): " + verdict.reason);
  const std::uint64_t limit = std::min(max_order, kMaxOrder);
  std::uint64_t order = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    if (order > limit / static_cast<std::uint64_t>(q)) {
      throw Error("nearfield order q^n exceeds limit " + std::to_string(limit));
    }
    order *= static_cast<std::uint64_t>(q);
  }

  std::shared_ptr<Nearfield> nf(new Nearfield());
  nf->q_ = static_cast<std::uint64_t>(q);
  nf->n_ = static_cast<std::uint64_t>(n);
  nf->p_ = static_cast<std::uint32_t>(verdict.p);
  nf->l_ = static_cast<std::uint32_t>(verdict.l);
  nf->degree_ = static_cast<std::uint32_t>(verdict.l * nf->n_);
  nf->order_ = static_cast<std::uint32_t>(order);

  const std::uint32_t p = nf->p_;
  const std::uint32_t d = nf->degree_;
  // DN(3,2) is pinned to x^2+1, the textbook presentation of GF(9).
  if (q == 3 && n == 2) {
    nf->modulus_ = {1, 0, 1};
  } else {
    nf->modulus_ = smallest_irreducible(p, d);
  }
  const Poly& f = nf->modulus_;

  // Smallest primitive element.
  const std::uint64_t group = order - 1;
  const auto group_primes = prime_factors(group);
  std::uint32_t gen = 0;
  for (std::uint32_t c = 1; c < order; ++c) {
    const Poly base = digits_of(c, p, d);
    bool primitive = true;
    for (std::uint64_t r : group_primes) {
      Poly t = poly_powmod(base, group / r, f, p);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = c;
      break;
    }
  }
  if (gen == 0) throw Error("internal fault: no primitive element");
  nf->generator_ = Element{gen};

  nf->exp_.resize(group);
  nf->log_.assign(order, 0);
  const Poly g = digits_of(gen, p, d);
  Poly cur{1};
  for (std::uint64_t k = 0; k < group; ++k) {
    const std::uint32_t code = code_of(cur, p);
    nf->exp_[k] = code;
    nf->log_[code] = static_cast<std::uint32_t>(k);
    cur = poly_mulmod(cur, g, f, p);
  }
  if (!(cur.size() == 1 && cur[0] == 1)) throw Error("internal fault: g^(order-1) != 1");

  nf->neg_.resize(order);
  for (std::uint32_t c = 0; c < order; ++c) {
    Poly dg = digits_of(c, p, d);
    for (auto& x : dg) x = (p - x) % p;
    nf->neg_[c] = code_of(dg, p);
  }

  // Coupling: residues (q^j-1)/(q-1) mod n must be a complete residue system.
  const std::uint64_t un = nf->n_;
  nf->residues_.resize(un);
  std::vector<std::int64_t> j_of_residue(un, -1);
  std::uint64_t acc = 0;  // 1 + q + ... + q^{j-1} mod n
  std::uint64_t qmod = nf->q_ % un;
  for (std::uint64_t j = 0; j < un; ++j) {
    nf->residues_[j] = static_cast<std::uint32_t>(acc);
    if (j_of_residue[acc] != -1) throw Error("internal fault: coupling residues collide");
    j_of_residue[acc] = static_cast<std::int64_t>(j);
    acc = (acc * qmod + 1) % un;
  }
  nf->coset_.assign(order, 0);
  for (std::uint32_t c = 1; c < order; ++c) {
    nf->coset_[c] = static_cast<std::uint32_t>(j_of_residue[nf->log_[c] % un]);
  }
  nf->qpow_.resize(un + 1);
  nf->qpow_[0] = 1 % group;
  for (std::uint64_t j = 1; j <= un; ++j) {
    nf->qpow_[j] = static_cast<std::uint64_t>(
        (static_cast<u128>(nf->qpow_[j - 1]) * nf->q_) % group);
  }

  if (order <= kAddCacheOrder) {
    nf->add_cache_.resize(static_cast<std::size_t>(order) * order);
    for (std::uint32_t a = 0; a < order; ++a) {
      const Poly da = digits_of(a, p, d);
      for (std::uint32_t b = 0; b < order; ++b) {
        const Poly db = digits_of(b, p, d);
        Poly s(d);
        for (std::uint32_t i = 0; i < d; ++i) s[i] = (da[i] + db[i]) % p;
        nf->add_cache_[static_cast<std::size_t>(a) * order + b] = code_of(s, p);
      }
    }
    std::vector<std::uint32_t> mul_cache(static_cast<std::size_t>(order) * order);
    for (std::uint32_t a = 0; a < order; ++a) {
      for (std::uint32_t b = 0; b < order; ++b) {
        mul_cache[static_cast<std::size_t>(a) * order + b] = nf->mul(Element{a}, Element{b}).code;
      }
    }
    nf->mul_cache_ = std::move(mul_cache);
  }
  return nf;
}

Element Nearfield::add(Element a, Element b) const {
  if (!add_cache_.empty()) {
    return Element{add_cache_[static_cast<std::size_t>(a.code) * order_ + b.code]};
  }
  std::uint32_t x = a.code;
  std::uint32_t y = b.code;
  std::uint64_t out = 0;
  std::uint64_t scale = 1;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Element{static_cast<std::uint32_t>(out)};
}

Element Nearfield::field_mul(Element a, Element b) const {
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint64_t group = order_ - 1;
  return Element{exp_[(static_cast<std::uint64_t>(log_[a.code]) + log_[b.code]) % group]};
}

Element Nearfield::mul(Element a, Element b) const {
  if (!mul_cache_.empty()) {
    return Element{mul_cache_[static_cast<std::size_t>(a.code) * order_ + b.code]};
  }
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint64_t group = order_ - 1;
  const std::uint64_t twist = qpow_[coset_[a.code]];
  const auto lb = static_cast<std::uint64_t>(
      (static_cast<u128>(log_[b.code]) * twist) % group);
  return Element{exp_[(log_[a.code] + lb) % group]};
}

Element Nearfield::inv(Element a) const {
  if (a.code == 0) throw Error("division by zero");
  // a·Frob_j(b) = 1  =>  b = Frob_{n-j}(a^{-1}).
  const std::uint64_t group = order_ - 1;
  const std::uint32_t j = coset_[a.code];
  const std::uint64_t field_inv_log = (group - log_[a.code]) % group;
  const auto lb = static_cast<std::uint64_t>(
      (static_cast<u128>(field_inv_log) * qpow_[(n_ - j) % n_]) % group);
  const Element b{exp_[lb]};
  if (mul(a, b) != one() || mul(b, a) != one()) {
    throw Error("internal fault: inverse check failed for code " + std::to_string(a.code));
  }
  return b;
}

std::uint32_t Nearfield::coset_index(Element a) const {
  if (a.code == 0) throw Error("coset index of zero is undefined");
  return coset_[a.code];
}

std::uint32_t Nearfield::log(Element a) const {
  if (a.code == 0) throw Error("logarithm of zero is undefined");
  return log_[a.code];
}

Element Nearfield::frobenius(Element b, std::uint32_t j) const {
  if (b.code == 0) return zero();
  const std::uint64_t group = order_ - 1;
  std::uint64_t power = 1 % group;
  for (std::uint32_t i = 0; i < j; ++i) {
    power = static_cast<std::uint64_t>((static_cast<u128>(power) * q_) % group);
  }
  return Element{exp_[static_cast<std::uint64_t>(
      (static_cast<u128>(log_[b.code]) * power) % group)]};
}

std::vector<std::uint32_t> Nearfield::digits(Element a) const {
  return digits_of(a.code, p_, degree_);
}

Element Nearfield::from_digits(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() > degree_) throw Error("too many digits for degree");
  for (auto c : digits) {
    if (c >= p_) throw Error("digit out of range");
  }
  return Element{code_of(digits, p_)};
}

bool is_witness(const Nearfield& nf, const Witness& w) {
  const Element lhs = nf.mul(nf.add(w.alpha, w.beta), w.lambda);
  const Element rhs = nf.add(nf.mul(w.alpha, w.lambda), nf.mul(w.beta, w.lambda));
  return lhs != rhs;
}

std::optional<Witness> find_witness(const Nearfield& nf) {
  if (nf.is_field()) return std::nullopt;
  const std::uint32_t order = nf.order();
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b) {
      for (std::uint32_t c = 0; c < order; ++c) {
        const Witness w{Element{a}, Element{b}, Element{c}};
        if (is_witness(nf, w)) return w;
      }
    }
  }
  throw Error("internal fault: proper nearfield without a distributivity witness");
}

namespace {

template <typename Op>
std::vector<std::vector<Element>> make_table(const Nearfield& nf, Op op) {
  if (nf.order() > Nearfield::kMaxTableOrder) {
    throw Error("order " + std::to_string(nf.order()) + " exceeds table limit " +
                std::to_string(Nearfield::kMaxTableOrder));
  }
  const std::uint32_t order = nf.order();
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b) table[a][b] = op(Element{a}, Element{b});
  }
  return table;
}

}  // namespace

std::vector<std::vector<Element>> mul_table(const Nearfield& nf) {
  return make_table(nf, [&](Element a, Element b) { return nf.mul(a, b); });
}

std::vector<std::vector<Element>> add_table(const Nearfield& nf) {
  return make_table(nf, [&](Element a, Element b) { return nf.add(a, b); });
}

}  // namespace nearvec
