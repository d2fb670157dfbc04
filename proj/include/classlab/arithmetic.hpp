#ifndef CLASSLAB_ARITHMETIC_HPP
#define CLASSLAB_ARITHMETIC_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace classlab {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("natural number product overflows 64 bits");
  return r;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0)
    r = checked_mul(r, base);
  return r;
}

} // namespace detail

/// A positive natural number carried together with its prime factorization.
/// Factors are kept sorted by prime with strictly positive exponents, so two
/// equal values always have identical factor lists.
class FactoredNatural {
public:
  FactoredNatural() = default;

  /// Factor `value` by trial division. Values in this project stay well
  /// below 2^40, so trial division up to sqrt is instant.
  FactoredNatural(std::uint64_t value) : value_(value) { // NOLINT(google-explicit-constructor)
    if (value == 0)
      throw std::invalid_argument("FactoredNatural requires a positive value");
    std::uint64_t n = value;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e > 0)
        factors_.push_back({p, e});
    }
    if (n > 1)
      factors_.push_back({n, 1});
  }

  /// Build from prime powers; primes need not be sorted or distinct.
  /// Primality of the given bases is not checked.
  static FactoredNatural from_factors(std::vector<PrimePower> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    FactoredNatural r;
    r.value_ = 1;
    for (const auto& f : factors) {
      if (f.prime < 2)
        throw std::invalid_argument("prime factor must be at least 2");
      if (f.exponent == 0)
        continue;
      r.value_ = detail::checked_mul(r.value_, detail::ipow(f.prime, f.exponent));
      if (!r.factors_.empty() && r.factors_.back().prime == f.prime)
        r.factors_.back().exponent += f.exponent;
      else
        r.factors_.push_back(f);
    }
    return r;
  }

  std::uint64_t value() const noexcept { return value_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }

  unsigned exponent(std::uint64_t p) const noexcept {
    for (const auto& f : factors_)
      if (f.prime == p)
        return f.exponent;
    return 0;
  }

  /// The largest power of `p` dividing the value.
  FactoredNatural p_part(std::uint64_t p) const {
    unsigned e = exponent(p);
    if (e == 0)
      return FactoredNatural{};
    return from_factors({{p, e}});
  }

  std::vector<std::uint64_t> primes() const {
    std::vector<std::uint64_t> r;
    for (const auto& f : factors_)
      r.push_back(f.prime);
    return r;
  }

  bool divides(const FactoredNatural& other) const noexcept {
    for (const auto& f : factors_)
      if (other.exponent(f.prime) < f.exponent)
        return false;
    return true;
  }

  bool is_prime_power_of(std::uint64_t p) const noexcept {
    return factors_.empty() || (factors_.size() == 1 && factors_.front().prime == p);
  }

  /// "2^3·3^2·5"; "1" for the empty product.
  std::string factorization_string() const {
    if (factors_.empty())
      return "1";
    std::string s;
    for (const auto& f : factors_) {
      if (!s.empty())
        s += "·";
      s += std::to_string(f.prime);
      if (f.exponent > 1)
        s += "^" + std::to_string(f.exponent);
    }
    return s;
  }

  friend FactoredNatural operator*(const FactoredNatural& a, const FactoredNatural& b) {
    std::vector<PrimePower> f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return from_factors(std::move(f));
  }

  /// Exact quotient; throws if `b` does not divide `a`.
  friend FactoredNatural operator/(const FactoredNatural& a, const FactoredNatural& b) {
    if (!b.divides(a))
      throw std::domain_error("inexact division " + std::to_string(a.value_) + " / " +
                              std::to_string(b.value_));
    std::vector<PrimePower> f;
    for (const auto& pf : a.factors_)
      f.push_back({pf.prime, pf.exponent - b.exponent(pf.prime)});
    return from_factors(std::move(f));
  }

  friend bool operator==(const FactoredNatural& a, const FactoredNatural& b) noexcept {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const FactoredNatural& a,
                                          const FactoredNatural& b) noexcept {
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const FactoredNatural& n) {
    return os << n.value_;
  }

private:
  std::uint64_t value_ = 1;
  std::vector<PrimePower> factors_;
};

inline FactoredNatural p_part(const FactoredNatural& n, std::uint64_t p) { return n.p_part(p); }

namespace detail {

template <class Pick>
FactoredNatural merge_exponents(const FactoredNatural& a, const FactoredNatural& b, Pick pick) {
  std::vector<PrimePower> f;
  for (const auto& pf : a.factors())
    f.push_back({pf.prime, pick(pf.exponent, b.exponent(pf.prime))});
  for (const auto& pf : b.factors())
    if (a.exponent(pf.prime) == 0)
      f.push_back({pf.prime, pick(0u, pf.exponent)});
  return FactoredNatural::from_factors(std::move(f));
}

} // namespace detail

inline FactoredNatural lcm(const FactoredNatural& a, const FactoredNatural& b) {
  return detail::merge_exponents(a, b, [](unsigned x, unsigned y) { return std::max(x, y); });
}

inline FactoredNatural gcd(const FactoredNatural& a, const FactoredNatural& b) {
  return detail::merge_exponents(a, b, [](unsigned x, unsigned y) { return std::min(x, y); });
}

/// N(G): a deduplicated, ascending set of class sizes.
class ClassSizeSet {
public:
  ClassSizeSet() = default;
  ClassSizeSet(std::initializer_list<std::uint64_t> values) {
    for (auto v : values)
      insert(FactoredNatural{v});
  }
  explicit ClassSizeSet(const std::vector<FactoredNatural>& values) {
    for (const auto& v : values)
      insert(v);
  }

  void insert(const FactoredNatural& n) {
    auto it = std::lower_bound(members_.begin(), members_.end(), n);
    if (it == members_.end() || *it != n)
      members_.insert(it, n);
  }

  bool contains(const FactoredNatural& n) const {
    return std::binary_search(members_.begin(), members_.end(), n);
  }

  const std::vector<FactoredNatural>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  std::vector<std::uint64_t> values() const {
    std::vector<std::uint64_t> r;
    for (const auto& m : members_)
      r.push_back(m.value());
    return r;
  }

  friend bool operator==(const ClassSizeSet&, const ClassSizeSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ClassSizeSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.members_.size(); ++i)
      os << (i ? ", " : "") << s.members_[i];
    return os << '}';
  }

private:
  std::vector<FactoredNatural> members_;
};

// ---------------------------------------------------------------------------
// Operations on class-size sets

/// {a·b : a ∈ n1, b ∈ n2}, the class sizes of a direct product.
inline ClassSizeSet product_nset(const ClassSizeSet& n1, const ClassSizeSet& n2) {
  ClassSizeSet r;
  for (const auto& a : n1)
    for (const auto& b : n2)
      r.insert(a * b);
  return r;
}

inline std::set<std::uint64_t> pi_of(const ClassSizeSet& n) {
  std::set<std::uint64_t> primes;
  for (const auto& m : n)
    for (const auto& f : m.factors())
      primes.insert(f.prime);
  return primes;
}

/// Members of `n` that are multiples of `d`.
inline ClassSizeSet multiples_in(const FactoredNatural& d, const ClassSizeSet& n) {
  ClassSizeSet r;
  for (const auto& m : n)
    if (d.divides(m))
      r.insert(m);
  return r;
}

/// True iff `d` divides some member of `n`.
inline bool divides_some(const FactoredNatural& d, const ClassSizeSet& n) {
  return std::any_of(n.begin(), n.end(), [&](const FactoredNatural& m) { return d.divides(m); });
}

inline ClassSizeSet candidates_with_p_part_le(const ClassSizeSet& n, std::uint64_t p,
                                              const FactoredNatural& bound) {
  ClassSizeSet r;
  for (const auto& m : n)
    if (m.p_part(p) <= bound)
      r.insert(m);
  return r;
}

inline ClassSizeSet candidates_with_p_part_eq(const ClassSizeSet& n, std::uint64_t p,
                                              const FactoredNatural& part) {
  ClassSizeSet r;
  for (const auto& m : n)
    if (m.p_part(p) == part)
      r.insert(m);
  return r;
}

inline ClassSizeSet without(const ClassSizeSet& n, const ClassSizeSet& drop) {
  ClassSizeSet r;
  for (const auto& m : n)
    if (!drop.contains(m))
      r.insert(m);
  return r;
}

inline ClassSizeSet intersect(const ClassSizeSet& a, const ClassSizeSet& b) {
  ClassSizeSet r;
  for (const auto& m : a)
    if (b.contains(m))
      r.insert(m);
  return r;
}

struct Feasibility {
  bool feasible = false;
  FactoredNatural required_divisor;
  ClassSizeSet witnesses;
};

/// Class sizes of commuting elements x, y of coprime orders constrain
/// |(xy)^G|: it is a multiple of lcm(a, b) and at most a·b. Returns the
/// members of `n` meeting both conditions.
inline Feasibility coprime_pair_feasible(const FactoredNatural& a, const FactoredNatural& b,
                                         const ClassSizeSet& n) {
  Feasibility f;
  f.required_divisor = lcm(a, b);
  const FactoredNatural cap = a * b;
  for (const auto& c : n)
    if (f.required_divisor.divides(c) && c <= cap)
      f.witnesses.insert(c);
  f.feasible = !f.witnesses.empty();
  return f;
}

/// For pairwise-commuting x, y, z of coprime orders, |(xyz)^G| is a multiple
/// of the lcm of the three pairwise product class sizes.
inline Feasibility coprime_triple_feasible(const FactoredNatural& ab, const FactoredNatural& ac,
                                           const FactoredNatural& bc, const ClassSizeSet& n) {
  Feasibility f;
  f.required_divisor = lcm(lcm(ab, ac), bc);
  f.witnesses = multiples_in(f.required_divisor, n);
  f.feasible = !f.witnesses.empty();
  return f;
}

/// lcm of every member: divides |G| for any G with N(G) = n.
inline FactoredNatural min_group_order(const ClassSizeSet& n) {
  FactoredNatural r;
  for (const auto& m : n)
    r = lcm(r, m);
  return r;
}

inline FactoredNatural max_p_part(const ClassSizeSet& n, std::uint64_t p) {
  FactoredNatural r;
  for (const auto& m : n)
    r = std::max(r, m.p_part(p));
  return r;
}

} // namespace classlab

#endif
