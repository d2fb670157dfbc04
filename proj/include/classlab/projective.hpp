#ifndef CLASSLAB_PROJECTIVE_HPP
#define CLASSLAB_PROJECTIVE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "finite_field.hpp"
#include "group.hpp"
#include "permutation.hpp"

namespace classlab {

/// The points of projective (d-1)-space over F_q, each stored as the
/// representative vector whose first nonzero coordinate is 1. Points are
/// numbered in lexicographic order of those vectors.
class ProjectivePointSet {
public:
  using Element = GaloisField::Element;

  ProjectivePointSet(std::shared_ptr<const GaloisField> field, std::size_t dim)
    : field_(std::move(field)), dim_(dim) {
    if (dim == 0)
      throw std::invalid_argument("projective space needs dimension at least 1");
    const std::size_t q = field_->size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i)
      total *= q;
    index_.assign(total, -1);
    std::vector<Element> v(dim, 0);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = dim; i-- > 0;) {
        v[i] = static_cast<Element>(c % q);
        c /= q;
      }
      if (normalize(v) == v && !is_zero(v)) {
        index_[code] = static_cast<std::int32_t>(points_.size());
        points_.push_back(v);
      }
    }
  }

  const GaloisField& field() const noexcept { return *field_; }
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Element>& point(std::size_t i) const { return points_.at(i); }

  /// Scale so the first nonzero coordinate is 1; the zero vector is returned
  /// unchanged.
  std::vector<Element> normalize(std::vector<Element> v) const {
    for (auto x : v) {
      if (x == 0)
        continue;
      Element s = field_->inv(x);
      for (auto& y : v)
        y = field_->mul(y, s);
      break;
    }
    return v;
  }

  /// Index of the point spanned by a nonzero vector.
  std::size_t index_of(const std::vector<Element>& v) const {
    if (v.size() != dim_ || is_zero(v))
      throw std::invalid_argument("vector does not span a projective point");
    auto n = normalize(v);
    std::size_t code = 0;
    for (auto x : n)
      code = code * field_->size() + x;
    return static_cast<std::size_t>(index_[code]);
  }

private:
  std::shared_ptr<const GaloisField> field_;
  std::size_t dim_;
  std::vector<std::vector<Element>> points_;
  std::vector<std::int32_t> index_;

  static bool is_zero(const std::vector<Element>& v) {
    for (auto x : v)
      if (x != 0)
        return false;
    return true;
  }
};

/// The permutation a semilinear map induces on projective points.
inline Permutation to_permutation(const SemilinearMap& map, const ProjectivePointSet& points) {
  if (map.matrix.dimension() != points.dimension())
    throw std::invalid_argument("map and point set have different dimensions");
  std::vector<Point> images;
  images.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto w = map.apply(points.point(i));
    bool zero = true;
    for (auto x : w)
      zero = zero && x == 0;
    if (zero)
      throw std::invalid_argument("map is singular and does not act on points");
    images.push_back(static_cast<Point>(points.index_of(w)));
  }
  try {
    return Permutation::from_images(std::move(images));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("map does not permute the projective points");
  }
}

inline Permutation to_permutation(const FieldMatrix& m, const ProjectivePointSet& points) {
  return to_permutation(SemilinearMap{m, 0}, points);
}

/// Permutation image of a semilinear group on projective points. Scalars
/// act trivially, so the image is the projective group.
inline PermutationGroup matrix_group_to_permutation(const std::vector<SemilinearMap>& gens,
                                                    const ProjectivePointSet& points) {
  std::vector<Permutation> perms;
  for (const auto& g : gens)
    perms.push_back(to_permutation(g, points));
  return PermutationGroup(std::move(perms));
}

inline PermutationGroup matrix_group_to_permutation(const std::vector<FieldMatrix>& gens,
                                                    const ProjectivePointSet& points) {
  std::vector<SemilinearMap> maps;
  for (const auto& g : gens)
    maps.push_back({g, 0});
  return matrix_group_to_permutation(maps, points);
}

} // namespace classlab

#endif
