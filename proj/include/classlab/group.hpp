#ifndef CLASSLAB_GROUP_HPP
#define CLASSLAB_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "arithmetic.hpp"
#include "error.hpp"
#include "permutation.hpp"

namespace classlab {

inline constexpr std::uint64_t kDefaultEnumerationBound = 5'000'000;
inline constexpr std::uint64_t kDefaultCosetIndexBound = 10'000;

/// A permutation group with a base and strong generating set.
///
/// The BSGS is built by deterministic Schreier-Sims: base points are chosen
/// as the first point moved by the element that needs a new level, and
/// Schreier generators are tested in orbit order. Identical generator lists
/// therefore produce identical bases, transversals and enumeration order.
///
/// Every element factors uniquely as g = u_{k-1} ... u_1 u_0 (applied left
/// to right) with u_m drawn from the level-m transversal. The mixed-radix
/// number (i_0, ..., i_{k-1}) of transversal positions, level 0 most
/// significant, is the element's index; enumeration runs in index order.
class PermutationGroup {
public:
  explicit PermutationGroup(std::vector<Permutation> generators)
    : generators_(std::move(generators)) {
    if (generators_.empty())
      throw std::invalid_argument("a group needs at least one generator");
    degree_ = generators_.front().degree();
    for (const auto& g : generators_)
      if (g.degree() != degree_)
        throw std::invalid_argument("generators have different degrees");
    schreier_sims();
    for (const auto& g : generators_)
      if (!contains(g))
        throw Error("internal error: BSGS rejects one of its own generators");
    order_ = FactoredNatural{};
    for (const auto& level : levels_)
      order_ = order_ * FactoredNatural{level.orbit.size()};
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const FactoredNatural& order() const noexcept { return order_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& level : levels_)
      b.push_back(level.base);
    return b;
  }

  std::vector<std::size_t> basic_orbit_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& level : levels_)
      s.push_back(level.orbit.size());
    return s;
  }

  std::vector<Permutation> strong_generators() const { return strong_; }

  Permutation identity() const { return Permutation::identity(degree_); }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_)
      throw std::invalid_argument("degree mismatch in membership test");
    return strip(p, 0).first.is_identity();
  }

  bool is_trivial() const noexcept { return levels_.empty(); }

  /// Index of a member. The caller guarantees membership; only base images
  /// are consulted, so a non-member may map to an arbitrary index or nullopt.
  std::optional<std::uint64_t> index_of_member(const Permutation& p) const {
    const std::size_t k = levels_.size();
    std::vector<Point> img(k);
    for (std::size_t m = 0; m < k; ++m)
      img[m] = p[levels_[m].base];
    std::uint64_t idx = 0;
    for (std::size_t m = 0; m < k; ++m) {
      const auto& level = levels_[m];
      std::int32_t pos = level.position[img[m]];
      if (pos < 0)
        return std::nullopt;
      idx = idx * level.orbit.size() + static_cast<std::uint64_t>(pos);
      const Permutation& uinv = level.inverse_transversal[static_cast<std::size_t>(pos)];
      for (std::size_t r = m + 1; r < k; ++r)
        img[r] = uinv[img[r]];
    }
    return idx;
  }

  Permutation element_at(std::uint64_t index) const {
    if (index >= order_.value())
      throw std::out_of_range("element index out of range");
    const std::size_t k = levels_.size();
    std::vector<std::size_t> pos(k);
    for (std::size_t m = k; m-- > 0;) {
      pos[m] = index % levels_[m].orbit.size();
      index /= levels_[m].orbit.size();
    }
    Permutation g = identity();
    for (std::size_t m = 0; m < k; ++m)
      g = compose(levels_[m].transversal[pos[m]], g);
    return g;
  }

  /// Visit every element in index order. Refuses groups larger than `bound`.
  /// The visitor may return false to stop early.
  template <class Visitor>
  void for_each_element(Visitor&& visit, std::uint64_t bound = kDefaultEnumerationBound) const {
    require_enumerable(bound);
    if (levels_.empty()) {
      visit(identity());
      return;
    }
    std::vector<Permutation> partial(levels_.size());
    walk(0, identity(), partial, visit);
  }

  std::vector<Permutation> elements(std::uint64_t bound = kDefaultEnumerationBound) const {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(std::min(order_.value(), bound)));
    for_each_element([&](const Permutation& g) {
      out.push_back(g);
      return true;
    }, bound);
    return out;
  }

  void require_enumerable(std::uint64_t bound) const {
    if (order_.value() > bound)
      throw BoundExceeded("enumerating a group of order " + std::to_string(order_.value()),
                          bound);
  }

private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
  };

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  FactoredNatural order_;

  /// Sift through levels start..k-1; returns the residue and the level where
  /// sifting stopped (k when every level was passed).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t start) const {
    for (std::size_t m = start; m < levels_.size(); ++m) {
      const auto& level = levels_[m];
      std::int32_t pos = level.position[g[level.base]];
      if (pos < 0)
        return {std::move(g), m};
      g = compose(g, level.inverse_transversal[static_cast<std::size_t>(pos)]);
    }
    return {std::move(g), levels_.size()};
  }

  bool fixes_base_prefix(const Permutation& g, std::size_t count) const {
    for (std::size_t m = 0; m < count; ++m)
      if (g[levels_[m].base] != levels_[m].base)
        return false;
    return true;
  }

  void add_level_for(const Permutation& g) {
    Level level;
    level.base = static_cast<Point>(g.first_moved_point());
    levels_.push_back(std::move(level));
  }

  void rebuild_level(std::size_t m) {
    Level& level = levels_[m];
    level.generators.clear();
    for (const auto& s : strong_)
      if (fixes_base_prefix(s, m))
        level.generators.push_back(s);
    level.orbit.assign(1, level.base);
    level.position.assign(degree_, -1);
    level.position[level.base] = 0;
    level.transversal.assign(1, identity());
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
      Point beta = level.orbit[head];
      for (const auto& s : level.generators) {
        Point gamma = s[beta];
        if (level.position[gamma] >= 0)
          continue;
        level.position[gamma] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(gamma);
        level.transversal.push_back(compose(level.transversal[head], s));
      }
    }
    level.inverse_transversal.clear();
    for (const auto& u : level.transversal)
      level.inverse_transversal.push_back(inverse(u));
  }

  void schreier_sims() {
    for (const auto& g : generators_) {
      if (g.is_identity())
        continue;
      strong_.push_back(g);
      if (fixes_base_prefix(g, levels_.size()))
        add_level_for(g);
    }
    for (std::size_t m = 0; m < levels_.size(); ++m)
      rebuild_level(m);

    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool restarted = false;
      const Level& level = levels_[i];
      for (std::size_t head = 0; !restarted && head < level.orbit.size(); ++head) {
        for (const auto& s : level.generators) {
          Point gamma = s[level.orbit[head]];
          std::size_t gpos = static_cast<std::size_t>(level.position[gamma]);
          Permutation schreier = compose(compose(level.transversal[head], s),
                                         level.inverse_transversal[gpos]);
          if (schreier.is_identity())
            continue;
          auto [residue, stop] = strip(std::move(schreier), i + 1);
          if (residue.is_identity())
            continue;
          if (stop == levels_.size())
            add_level_for(residue);
          strong_.push_back(std::move(residue));
          for (std::size_t m = i + 1; m <= stop; ++m)
            rebuild_level(m);
          i = stop + 1;
          restarted = true;
          break;
        }
      }
    }
  }

  template <class Visitor>
  bool walk(std::size_t m, const Permutation& right, std::vector<Permutation>& partial,
            Visitor& visit) const {
    const Level& level = levels_[m];
    const bool last = m + 1 == levels_.size();
    for (const auto& u : level.transversal) {
      partial[m] = compose(u, right);
      if (last) {
        if (!visit(std::as_const(partial[m])))
          return false;
      } else if (!walk(m + 1, partial[m], partial, visit)) {
        return false;
      }
    }
    return true;
  }
};

inline PermutationGroup build_group(std::vector<Permutation> gens) {
  return PermutationGroup(std::move(gens));
}

inline PermutationGroup trivial_group(std::size_t degree = 1) {
  return PermutationGroup({Permutation::identity(degree)});
}

inline const FactoredNatural& group_order(const PermutationGroup& g) { return g.order(); }

inline bool contains(const PermutationGroup& g, const Permutation& p) { return g.contains(p); }

/// The smallest group containing `base` and `extra`, adding an element only
/// when it is not already a member.
inline PermutationGroup closure(const PermutationGroup& base, std::span<const Permutation> extra) {
  std::vector<Permutation> gens = base.generators();
  std::optional<PermutationGroup> current(base);
  for (const auto& e : extra) {
    if (current->contains(e))
      continue;
    gens.push_back(e);
    current.emplace(gens);
  }
  return *current;
}

/// Builds a group from a list of elements known to form (or generate) it,
/// using only as many of them as needed as generators.
inline PermutationGroup group_from_elements(std::size_t degree, std::span<const Permutation> elems) {
  return closure(trivial_group(degree), elems);
}

// ---------------------------------------------------------------------------
// Conjugacy

struct ConjugacyClass {
  Permutation representative;
  FactoredNatural size;
};

/// Orbit of `x` under conjugation by `gens`, breadth-first.
template <class Visitor>
void for_each_conjugate(const Permutation& x, std::span<const Permutation> gens, Visitor&& visit) {
  std::unordered_set<Permutation, PermutationHash> seen{x};
  std::deque<Permutation> queue{x};
  while (!queue.empty()) {
    Permutation y = std::move(queue.front());
    queue.pop_front();
    visit(y);
    for (const auto& g : gens) {
      Permutation z = conjugate(y, g);
      if (seen.insert(z).second)
        queue.push_back(std::move(z));
    }
  }
}

/// x^H for the group generated by `gens`; x itself need not lie in H.
inline ConjugacyClass conjugation_orbit(const Permutation& x, std::span<const Permutation> gens) {
  ConjugacyClass c{x, FactoredNatural{}};
  std::uint64_t count = 0;
  for_each_conjugate(x, gens, [&](const Permutation& y) {
    ++count;
    if (y < c.representative)
      c.representative = y;
  });
  c.size = FactoredNatural{count};
  return c;
}

inline void require_member(const PermutationGroup& g, const Permutation& x) {
  if (!g.contains(x))
    throw std::invalid_argument("element " + to_cycle_string(x) + " is not in the group");
}

inline ConjugacyClass conjugation_class_of(const PermutationGroup& g, const Permutation& x) {
  require_member(g, x);
  return conjugation_orbit(x, g.generators());
}

inline FactoredNatural centralizer_order(const PermutationGroup& g, const Permutation& x) {
  return g.order() / conjugation_class_of(g, x).size;
}

/// Every conjugacy class of a group, found by walking elements in index
/// order and expanding the conjugation orbit of each unvisited one.
class ClassPartition {
public:
  explicit ClassPartition(const PermutationGroup& g,
                          std::uint64_t bound = kDefaultEnumerationBound)
    : group_(&g) {
    g.require_enumerable(bound);
    const std::uint64_t n = g.order().value();
    class_of_.assign(static_cast<std::size_t>(n), kUnvisited);
    const auto& gens = g.generators();
    std::vector<Permutation> frontier;
    g.for_each_element([&](const Permutation& x) {
      std::uint64_t ix = *g.index_of_member(x);
      if (class_of_[ix] != kUnvisited)
        return true;
      const auto id = static_cast<std::uint32_t>(classes_.size());
      class_of_[ix] = id;
      Permutation rep = x;
      std::uint64_t size = 0;
      frontier.assign(1, x);
      while (!frontier.empty()) {
        Permutation y = std::move(frontier.back());
        frontier.pop_back();
        ++size;
        if (y < rep)
          rep = y;
        for (const auto& s : gens) {
          Permutation z = conjugate(y, s);
          std::uint64_t iz = *g.index_of_member(z);
          if (class_of_[iz] == kUnvisited) {
            class_of_[iz] = id;
            frontier.push_back(std::move(z));
          }
        }
      }
      classes_.push_back({std::move(rep), FactoredNatural{size}});
      return true;
    }, bound);
  }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }

  std::size_t class_index(const Permutation& x) const {
    auto ix = group_->index_of_member(x);
    if (!ix)
      throw std::invalid_argument("element is not in the group");
    return class_of_[*ix];
  }

  const FactoredNatural& class_size(const Permutation& x) const {
    return classes_[class_index(x)].size;
  }

  ClassSizeSet size_set() const {
    ClassSizeSet s;
    for (const auto& c : classes_)
      s.insert(c.size);
    return s;
  }

  const PermutationGroup& group() const noexcept { return *group_; }

private:
  static constexpr std::uint32_t kUnvisited = 0xffffffffu;
  const PermutationGroup* group_;
  std::vector<std::uint32_t> class_of_;
  std::vector<ConjugacyClass> classes_;
};

inline ClassSizeSet all_class_sizes(const PermutationGroup& g,
                                    std::uint64_t bound = kDefaultEnumerationBound) {
  return ClassPartition(g, bound).size_set();
}

inline std::vector<Permutation> centralizer_element_list(
    const PermutationGroup& g, const Permutation& x, std::uint64_t bound = kDefaultEnumerationBound) {
  require_member(g, x);
  std::vector<Permutation> out;
  g.for_each_element([&](const Permutation& y) {
    if (commute(x, y))
      out.push_back(y);
    return true;
  }, bound);
  return out;
}

inline PermutationGroup centralizer_elements(const PermutationGroup& g, const Permutation& x,
                                             std::uint64_t bound = kDefaultEnumerationBound) {
  auto elems = centralizer_element_list(g, x, bound);
  return group_from_elements(g.degree(), elems);
}

inline PermutationGroup center(const PermutationGroup& g,
                               std::uint64_t bound = kDefaultEnumerationBound) {
  std::vector<Permutation> central;
  g.for_each_element([&](const Permutation& y) {
    for (const auto& s : g.generators())
      if (!commute(y, s))
        return true;
    central.push_back(y);
    return true;
  }, bound);
  return group_from_elements(g.degree(), central);
}

inline bool is_subgroup(const PermutationGroup& k, const PermutationGroup& g) {
  if (k.degree() != g.degree())
    return false;
  return std::all_of(k.generators().begin(), k.generators().end(),
                     [&](const Permutation& s) { return g.contains(s); });
}

/// Normality of k in g, tested on generator conjugates.
inline bool is_normal(const PermutationGroup& k, const PermutationGroup& g) {
  if (!is_subgroup(k, g))
    return false;
  for (const auto& s : k.generators())
    for (const auto& t : g.generators())
      if (!k.contains(conjugate(s, t)))
        return false;
  return true;
}

/// Smallest normal subgroup of g containing x.
inline PermutationGroup normal_closure(const PermutationGroup& g, const Permutation& x) {
  require_member(g, x);
  std::vector<Permutation> gens{x};
  PermutationGroup current(gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& t : g.generators()) {
      Permutation c = conjugate(gens[i], t);
      if (!current.contains(c)) {
        gens.push_back(std::move(c));
        current = PermutationGroup(gens);
      }
    }
  }
  return current;
}

/// The action of g on the right cosets of a normal subgroup k.
class CosetAction {
public:
  CosetAction(const PermutationGroup& g, const PermutationGroup& k,
              std::uint64_t index_bound = kDefaultCosetIndexBound)
    : kernel_(k) {
    if (!is_subgroup(k, g))
      throw std::invalid_argument("coset action: K is not a subgroup of G");
    if (!is_normal(k, g))
      throw std::invalid_argument("coset action: K is not normal in G");
    const std::uint64_t index = (g.order() / k.order()).value();
    if (index > index_bound)
      throw BoundExceeded("coset index " + std::to_string(index), index_bound);

    representatives_.push_back(g.identity());
    std::vector<std::vector<Point>> images(g.generators().size());
    for (std::size_t head = 0; head < representatives_.size(); ++head) {
      for (std::size_t j = 0; j < g.generators().size(); ++j) {
        Permutation moved = compose(representatives_[head], g.generators()[j]);
        std::size_t target = find_coset(moved);
        if (target == representatives_.size())
          representatives_.push_back(std::move(moved));
        images[j].push_back(static_cast<Point>(target));
      }
    }
    std::vector<Permutation> gens;
    for (auto& im : images)
      gens.push_back(Permutation::from_images(std::move(im)));
    image_.emplace(std::move(gens));
  }

  const PermutationGroup& image() const { return *image_; }
  const std::vector<Permutation>& representatives() const noexcept { return representatives_; }
  std::size_t index() const noexcept { return representatives_.size(); }

  /// Position of the coset K·g among the representatives.
  std::size_t coset_of(const Permutation& g) const {
    std::size_t c = find_coset(g);
    if (c == representatives_.size())
      throw std::invalid_argument("element lies outside the acting group");
    return c;
  }

  /// Image of g in the quotient, acting on coset positions.
  Permutation image_of(const Permutation& g) const {
    std::vector<Point> im;
    im.reserve(representatives_.size());
    for (const auto& r : representatives_)
      im.push_back(static_cast<Point>(coset_of(compose(r, g))));
    return Permutation::from_images(std::move(im));
  }

private:
  PermutationGroup kernel_;
  std::vector<Permutation> representatives_;
  std::optional<PermutationGroup> image_;

  std::size_t find_coset(const Permutation& g) const {
    for (std::size_t i = 0; i < representatives_.size(); ++i)
      if (kernel_.contains(compose(g, inverse(representatives_[i]))))
        return i;
    return representatives_.size();
  }
};

inline PermutationGroup coset_action(const PermutationGroup& g, const PermutationGroup& k,
                                     std::uint64_t index_bound = kDefaultCosetIndexBound) {
  return CosetAction(g, k, index_bound).image();
}

} // namespace classlab

#endif
