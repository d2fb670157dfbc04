#ifndef CLASSLAB_PERMUTATION_HPP
#define CLASSLAB_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arithmetic.hpp"
#include "error.hpp"

namespace classlab {

using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

/// A bijection of {0, ..., n-1} stored as its image table.
///
/// Points are 0-based internally and printed 1-based. Composition is
/// left-to-right: compose(p, q) first applies p, then q, and conjugation is
/// x^g = g^-1 x g.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    if (degree > kMaxDegree)
      throw std::invalid_argument("permutation degree exceeds 2^16");
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  /// Validates that `images` is a bijection.
  static Permutation from_images(std::vector<Point> images) {
    if (images.size() > kMaxDegree)
      throw std::invalid_argument("permutation degree exceeds 2^16");
    std::vector<bool> seen(images.size(), false);
    for (Point v : images) {
      if (v >= images.size() || seen[v])
        throw std::invalid_argument("image table is not a bijection");
      seen[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  template <class Int>
  static Permutation from_images(std::initializer_list<Int> images) {
    std::vector<Point> v;
    for (auto i : images)
      v.push_back(static_cast<Point>(i));
    return from_images(std::move(v));
  }

  /// Product of the given cycles (0-based points) on `degree` points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles) {
    Permutation p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        std::size_t a = cycle[i];
        if (a >= degree)
          throw std::invalid_argument("cycle point " + std::to_string(a + 1) +
                                      " outside degree " + std::to_string(degree));
        if (used[a])
          throw std::invalid_argument("cycles are not disjoint at point " +
                                      std::to_string(a + 1));
        used[a] = true;
        p.images_[a] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
      }
    }
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  /// Smallest point not fixed, or degree() for the identity.
  std::size_t first_moved_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return i;
    return images_.size();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);
};

inline void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
}

/// i ↦ q(p(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i)
    r.images_[i] = q.images_[p.images_[i]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i)
    r.images_[p.images_[i]] = static_cast<Point>(i);
  return r;
}

/// x^g = g^-1 x g, which maps g(i) to g(x(i)).
inline Permutation conjugate(const Permutation& x, const Permutation& g) {
  require_same_degree(x, g);
  Permutation r;
  r.images_.resize(x.degree());
  for (std::size_t i = 0; i < x.degree(); ++i)
    r.images_[g.images_[i]] = g.images_[x.images_[i]];
  return r;
}

inline bool commute(const Permutation& x, const Permutation& g) {
  require_same_degree(x, g);
  for (std::size_t i = 0; i < x.degree(); ++i)
    if (x[g[i]] != g[x[i]])
      return false;
  return true;
}

inline Permutation power(const Permutation& p, std::int64_t k) {
  Permutation base = k < 0 ? inverse(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation r = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1)
      r = compose(r, base);
    base = compose(base, base);
    e >>= 1;
  }
  return r;
}

/// Cycle lengths including fixed points, in descending order.
inline std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>{});
  return lengths;
}

inline FactoredNatural element_order(const Permutation& p) {
  FactoredNatural r;
  for (std::size_t len : cycle_type(p))
    r = lcm(r, FactoredNatural{len});
  return r;
}

inline bool is_p_element(const Permutation& x, std::uint64_t p) {
  return element_order(x).is_prime_power_of(p);
}

/// The π-part of x for the prime set `primes`: the power of x whose order is
/// the π-part of |x|. x is the product of its π- and π'-parts.
inline Permutation pi_part(const Permutation& x, const std::vector<std::uint64_t>& primes) {
  FactoredNatural ord = element_order(x);
  std::uint64_t keep = 1;
  for (auto q : primes)
    keep *= ord.p_part(q).value();
  std::uint64_t rest = ord.value() / keep;
  // Find k with k ≡ 1 (mod keep) and k ≡ 0 (mod rest); x^k is the π-part.
  for (std::uint64_t k = 0; k < ord.value(); k += rest)
    if (k % keep == 1 % keep)
      return power(x, static_cast<std::int64_t>(k));
  return Permutation::identity(x.degree());
}

/// Disjoint-cycle notation with 1-based points, e.g. "(1,2,3)(4,5)"; "()"
/// for the identity.
inline std::string to_cycle_string(const Permutation& p) {
  std::string s;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i)
      continue;
    s += '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i)
        s += ',';
      s += std::to_string(j + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

/// Parse disjoint-cycle notation. Whitespace is ignored. The degree is the
/// largest point mentioned unless `degree` is given.
inline Permutation parse_cycles(std::string_view text, std::size_t degree = 0) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '('", i + 1);
    ++i;
    std::vector<std::size_t> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    for (;;) {
      skip_ws();
      std::size_t start = i;
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > kMaxDegree)
          throw ParseError("point out of range", start + 1);
        ++i;
      }
      if (i == start)
        throw ParseError("expected a point", i + 1);
      if (value == 0)
        throw ParseError("points are 1-based", start + 1);
      cycle.push_back(value - 1);
      max_point = std::max(max_point, value);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')'", i + 1);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  if (degree == 0)
    degree = max_point;
  if (max_point > degree)
    throw ParseError("point exceeds degree " + std::to_string(degree), 1);
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1);
  }
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace classlab

#endif
