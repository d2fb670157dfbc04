#ifndef CLASSLAB_COPRIME_ACTION_HPP
#define CLASSLAB_COPRIME_ACTION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "finite_field.hpp"

namespace classlab {

/// The acting group's order is divisible by p, so the coprime splitting
/// hypothesis fails. Not a counterexample.
class CoprimalityViolated : public Error {
public:
  using Error::Error;
};

/// A subspace of F_p^d given by a reduced row-echelon basis.
struct Subspace {
  unsigned p = 2;
  std::size_t ambient = 0;
  std::vector<std::vector<unsigned>> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
};

namespace linalg {

using Rows = std::vector<std::vector<unsigned>>;

inline unsigned inv_mod(unsigned a, unsigned p) {
  for (unsigned b = 1; b < p; ++b)
    if (a * b % p == 1)
      return b;
  throw std::domain_error("zero has no inverse mod p");
}

/// Reduced row-echelon form; zero rows dropped.
inline Rows row_reduce(Rows rows, unsigned p) {
  if (rows.empty())
    return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % p == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[pivot], rows[rank]);
    unsigned s = inv_mod(rows[rank][c] % p, p);
    for (auto& x : rows[rank])
      x = x * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0)
        continue;
      unsigned f = rows[r][c] % p;
      for (std::size_t j = 0; j < cols; ++j)
        rows[r][j] = (rows[r][j] + (p - f) * rows[rank][j]) % p;
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

inline std::size_t rank(const Rows& rows, unsigned p) { return row_reduce(rows, p).size(); }

/// Basis of {x : A x = 0} for A given by rows.
inline Rows nullspace(const Rows& a, std::size_t cols, unsigned p) {
  Rows r = row_reduce(a, p);
  std::vector<std::ptrdiff_t> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : r) {
    for (std::size_t c = 0; c < cols; ++c)
      if (row[c] != 0) {
        pivot_col_of_row.push_back(static_cast<std::ptrdiff_t>(c));
        is_pivot[c] = true;
        break;
      }
  }
  Rows basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<unsigned> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.size(); ++i)
      v[static_cast<std::size_t>(pivot_col_of_row[i])] = (p - r[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return row_reduce(basis, p);
}

} // namespace linalg

/// A group of invertible d×d matrices over F_p acting on row vectors.
class LinearAction {
public:
  LinearAction(unsigned p, std::size_t dim, std::vector<FieldMatrix> generators)
    : p_(p), dim_(dim), generators_(std::move(generators)) {
    if (generators_.empty())
      throw std::invalid_argument("linear action needs a generator");
    for (const auto& g : generators_) {
      if (g.field().characteristic() != p || g.field().degree() != 1)
        throw std::invalid_argument("generator is not over the prime field F_" + std::to_string(p));
      if (g.dimension() != dim)
        throw std::invalid_argument("generator has the wrong dimension");
      if (g.determinant() == 0)
        throw std::invalid_argument("generator is not invertible");
    }
  }

  unsigned prime() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<FieldMatrix>& generators() const noexcept { return generators_; }

  /// Order of the generated matrix group by closure; refuses past `bound`.
  std::uint64_t group_order(std::uint64_t bound = 200'000) const {
    struct Hash {
      std::size_t operator()(const std::vector<GaloisField::Element>& v) const noexcept {
        std::size_t h = 0;
        for (auto x : v)
          h = h * 31 + x;
        return h;
      }
    };
    const auto id = FieldMatrix::identity(generators_.front().field_ptr(), dim_);
    std::unordered_set<std::vector<GaloisField::Element>, Hash> seen{id.entries()};
    std::vector<FieldMatrix> queue{id};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& g : generators_) {
        FieldMatrix next = queue[head] * g;
        if (seen.insert(next.entries()).second) {
          if (seen.size() > bound)
            throw BoundExceeded("matrix group closure", bound);
          queue.push_back(std::move(next));
        }
      }
    }
    return seen.size();
  }

private:
  unsigned p_;
  std::size_t dim_;
  std::vector<FieldMatrix> generators_;
};

namespace detail {

inline linalg::Rows minus_identity_rows(const FieldMatrix& g, unsigned p) {
  const std::size_t d = g.dimension();
  linalg::Rows rows(d, std::vector<unsigned>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      rows[i][j] = (g.at(i, j) + (i == j ? p - 1 : 0)) % p;
  return rows;
}

} // namespace detail

/// C_V(A): vectors fixed by every generator, i.e. the common left kernel
/// of the maps g - 1.
inline Subspace fixed_subspace(const LinearAction& act) {
  const unsigned p = act.prime();
  const std::size_t d = act.dimension();
  // v (g - 1) = 0 for all g  ⇔  (g - 1)^T v^T = 0; stack the transposes.
  linalg::Rows system;
  for (const auto& g : act.generators()) {
    auto m = detail::minus_identity_rows(g, p);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<unsigned> row(d);
      for (std::size_t i = 0; i < d; ++i)
        row[i] = m[i][j];
      system.push_back(std::move(row));
    }
  }
  return {p, d, linalg::nullspace(system, d, p)};
}

/// [V, A]: the span of v(g - 1) over all v and generators g.
inline Subspace commutator_subspace(const LinearAction& act) {
  const unsigned p = act.prime();
  linalg::Rows rows;
  for (const auto& g : act.generators())
    for (auto& r : detail::minus_identity_rows(g, p))
      rows.push_back(std::move(r));
  return {p, act.dimension(), linalg::row_reduce(std::move(rows), p)};
}

inline bool subspaces_independent_and_spanning(const Subspace& a, const Subspace& b) {
  if (a.dimension() + b.dimension() != a.ambient)
    return false;
  linalg::Rows all = a.basis;
  all.insert(all.end(), b.basis.begin(), b.basis.end());
  return linalg::rank(all, a.p) == a.ambient;
}

/// Every generator maps the subspace into itself.
inline bool is_invariant(const Subspace& s, const LinearAction& act) {
  for (const auto& g : act.generators()) {
    for (const auto& v : s.basis) {
      std::vector<GaloisField::Element> w(v.begin(), v.end());
      auto image = g.apply(w);
      linalg::Rows extended = s.basis;
      extended.emplace_back(image.begin(), image.end());
      if (linalg::rank(extended, s.p) != s.dimension())
        return false;
    }
  }
  return true;
}

/// V = C_V(A) ⊕ [V, A]. Throws CoprimalityViolated when p divides |A|.
inline bool check_decomposition(const LinearAction& act) {
  if (act.group_order() % act.prime() == 0)
    throw CoprimalityViolated("acting group has order divisible by " +
                              std::to_string(act.prime()));
  const auto fixed = fixed_subspace(act);
  const auto comm = commutator_subspace(act);
  return subspaces_independent_and_spanning(fixed, comm) && is_invariant(fixed, act) &&
         is_invariant(comm, act);
}

/// Calls `visit` with every d×d matrix over F_p of exact prime order `order`.
inline void for_each_matrix_of_prime_order(unsigned p, std::size_t d, unsigned order,
                                           const std::function<void(const FieldMatrix&)>& visit) {
  const auto field = std::make_shared<const GaloisField>(p);
  const auto id = FieldMatrix::identity(field, d);
  std::vector<GaloisField::Element> entries(d * d, 0);
  for (;;) {
    FieldMatrix m(field, d, entries);
    if (!(m == id)) {
      FieldMatrix power = m;
      for (unsigned k = 1; k < order; ++k)
        power = power * m;
      if (power == id)
        visit(m);
    }
    std::size_t i = 0;
    while (i < entries.size() && ++entries[i] == p)
      entries[i++] = 0;
    if (i == entries.size())
      break;
  }
}

/// Companion matrix of the monic polynomial x^d + c_{d-1} x^{d-1} + ... + c_0
/// over F_p, acting on row vectors.
inline FieldMatrix companion_matrix(unsigned p, const std::vector<unsigned>& low_coeffs) {
  const std::size_t d = low_coeffs.size();
  auto field = std::make_shared<const GaloisField>(p);
  FieldMatrix m(field, d);
  for (std::size_t i = 0; i + 1 < d; ++i)
    m.at(i, i + 1) = 1;
  for (std::size_t j = 0; j < d; ++j)
    m.at(d - 1, j) = static_cast<GaloisField::Element>((p - low_coeffs[j] % p) % p);
  return m;
}

/// Block-diagonal sum of square matrices over the same field.
inline FieldMatrix block_sum(const FieldMatrix& a, const FieldMatrix& b) {
  const std::size_t d = a.dimension() + b.dimension();
  FieldMatrix m(a.field_ptr(), d);
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j)
      m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.dimension(); ++i)
    for (std::size_t j = 0; j < b.dimension(); ++j)
      m.at(a.dimension() + i, a.dimension() + j) = b.at(i, j);
  return m;
}

} // namespace classlab

#endif
