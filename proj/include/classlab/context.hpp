#ifndef CLASSLAB_CONTEXT_HPP
#define CLASSLAB_CONTEXT_HPP

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>

#include "arithmetic.hpp"
#include "constructions.hpp"
#include "group.hpp"

namespace classlab {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunOptions {
  std::uint64_t enumeration_bound = kDefaultEnumerationBound;
  std::uint64_t coset_bound = kDefaultCosetIndexBound;
  std::uint64_t seed = kDefaultSeed;
  std::size_t commuting_pairs = 10'000;
};

namespace detail {

template <class T>
class Lazy {
public:
  const T& get(const std::function<T()>& make) {
    std::call_once(once_, [&] { value_.emplace(make()); });
    return *value_;
  }

private:
  std::once_flag once_;
  std::optional<T> value_;
};

} // namespace detail

/// Shared, lazily computed data for replays and instance checks. Safe to use
/// from several threads; each value is computed once.
class ReplayContext {
public:
  explicit ReplayContext(RunOptions options = {}) : options_(options) {}

  ReplayContext(const ReplayContext&) = delete;
  ReplayContext& operator=(const ReplayContext&) = delete;

  const RunOptions& options() const noexcept { return options_; }

  const PermutationGroup& a6() {
    return a6_.get([] { return alternating(6); });
  }

  const PermutationGroup& a6xa6() {
    return a6xa6_.get([this] { return direct_product(a6(), a6()); });
  }

  const ClassPartition& a6_classes() {
    return a6_classes_.get([this] { return ClassPartition(a6(), options_.enumeration_bound); });
  }

  const ClassPartition& a6xa6_classes() {
    return a6xa6_classes_.get(
        [this] { return ClassPartition(a6xa6(), options_.enumeration_bound); });
  }

  /// N(A6), by full class enumeration.
  const ClassSizeSet& n_a6() {
    return n_a6_.get([this] { return a6_classes().size_set(); });
  }

  /// N(A6×A6) as the product set of N(A6) with itself.
  const ClassSizeSet& target() {
    return target_.get([this] { return product_nset(n_a6(), n_a6()); });
  }

  /// N(A6×A6) by enumerating all 129600 elements.
  const ClassSizeSet& target_enumerated() {
    return target_enum_.get([this] { return a6xa6_classes().size_set(); });
  }

  const ClassSizeSet& n_a5() {
    return n_a5_.get([this] { return all_class_sizes(alternating(5), options_.enumeration_bound); });
  }

  const ClassSizeSet& n_u4_2() {
    return n_u42_.get([this] { return all_class_sizes(u4_2(), options_.enumeration_bound); });
  }

private:
  RunOptions options_;
  detail::Lazy<PermutationGroup> a6_, a6xa6_;
  detail::Lazy<ClassPartition> a6_classes_, a6xa6_classes_;
  detail::Lazy<ClassSizeSet> n_a6_, target_, target_enum_, n_a5_, n_u42_;
};

} // namespace classlab

#endif
