#ifndef CLASSLAB_FINITE_FIELD_HPP
#define CLASSLAB_FINITE_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace classlab {

/// A small finite field F_q, q = p^k, realized as F_p[t]/(f) with f monic
/// irreducible of degree k. Elements are encoded as integers 0..q-1 whose
/// base-p digits are the coefficients of 1, t, t^2, ... Arithmetic runs off
/// precomputed q×q tables.
class GaloisField {
public:
  using Element = std::uint16_t;

  /// The prime field F_p.
  explicit GaloisField(unsigned p) : GaloisField(p, {}) {}

  /// F_p[t]/(t^k + c_{k-1} t^{k-1} + ... + c_0) with `low_coeffs` = {c_0, ..., c_{k-1}}.
  GaloisField(unsigned p, std::vector<unsigned> low_coeffs)
    : p_(p), k_(low_coeffs.empty() ? 1 : static_cast<unsigned>(low_coeffs.size())),
      modulus_(std::move(low_coeffs)) {
    if (p < 2)
      throw std::invalid_argument("field characteristic must be a prime");
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw std::invalid_argument("field characteristic must be a prime");
    q_ = 1;
    for (unsigned i = 0; i < k_; ++i)
      q_ *= p_;
    if (q_ > 256)
      throw std::invalid_argument("field too large for table arithmetic");
    if (modulus_.empty())
      modulus_ = {0};
    build_tables();
    for (Element a = 1; a < q_; ++a) {
      bool has_inverse = false;
      for (Element b = 1; b < q_; ++b)
        if (mul(a, b) == 1)
          has_inverse = true;
      if (!has_inverse)
        throw std::invalid_argument("modulus is reducible; not a field");
    }
  }

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  unsigned size() const noexcept { return q_; }

  Element add(Element a, Element b) const noexcept { return add_[a * q_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * q_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element inv(Element a) const {
    if (a == 0)
      throw std::domain_error("inverse of zero in a finite field");
    return inv_[a];
  }

  /// x ↦ x^p.
  Element frobenius(Element a) const noexcept { return frob_[a]; }

  Element pow(Element a, unsigned e) const noexcept {
    Element r = 1;
    while (e-- > 0)
      r = mul(r, a);
    return r;
  }

  /// Element whose powers exhaust the nonzero elements.
  Element primitive_element() const {
    for (Element a = 1; a < q_; ++a) {
      unsigned order = 1;
      for (Element x = a; x != 1; x = mul(x, a))
        ++order;
      if (order == q_ - 1)
        return a;
    }
    throw std::logic_error("no primitive element");
  }

  bool is_square(Element a) const noexcept {
    for (Element b = 0; b < q_; ++b)
      if (mul(b, b) == a)
        return true;
    return false;
  }

  /// The element a_0 + a_1 t + ... given by its coefficients.
  Element from_coefficients(const std::vector<unsigned>& c) const {
    Element r = 0, scale = 1;
    for (unsigned i = 0; i < c.size() && i < k_; ++i) {
      r = static_cast<Element>(r + (c[i] % p_) * scale);
      scale = static_cast<Element>(scale * p_);
    }
    return r;
  }

  /// The class of t, or 1 in a prime field.
  Element generator_t() const noexcept { return k_ == 1 ? 1 : static_cast<Element>(p_); }

  std::string to_string(Element a) const {
    if (k_ == 1)
      return std::to_string(a);
    std::string s;
    for (unsigned i = 0; i < k_; ++i) {
      unsigned c = digit(a, i);
      if (c == 0)
        continue;
      if (!s.empty())
        s += "+";
      if (i == 0 || c != 1)
        s += std::to_string(c);
      if (i >= 1)
        s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

private:
  unsigned p_;
  unsigned k_;
  unsigned q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_, frob_;

  unsigned digit(Element a, unsigned i) const noexcept {
    for (unsigned j = 0; j < i; ++j)
      a = static_cast<Element>(a / p_);
    return a % p_;
  }

  std::vector<unsigned> coeffs(Element a) const {
    std::vector<unsigned> c(k_);
    for (unsigned i = 0; i < k_; ++i)
      c[i] = digit(a, i);
    return c;
  }

  Element encode(const std::vector<unsigned>& c) const {
    Element r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r = static_cast<Element>(r + c[i] * scale);
      scale = static_cast<Element>(scale * p_);
    }
    return r;
  }

  Element poly_mul(Element a, Element b) const {
    auto x = coeffs(a), y = coeffs(b);
    std::vector<unsigned> prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j)
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // Reduce t^k = -(c_0 + ... + c_{k-1} t^{k-1}).
    for (unsigned d = 2 * k_ - 1; d >= k_; --d) {
      unsigned lead = prod[d];
      prod[d] = 0;
      for (unsigned i = 0; i < k_; ++i)
        prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i] % p_) * lead) % p_;
      if (d == k_)
        break;
    }
    prod.resize(k_);
    return encode(prod);
  }

  void build_tables() {
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    frob_.resize(q_);
    for (Element a = 0; a < q_; ++a) {
      auto x = coeffs(a);
      std::vector<unsigned> n(k_);
      for (unsigned i = 0; i < k_; ++i)
        n[i] = (p_ - x[i]) % p_;
      neg_[a] = encode(n);
      for (Element b = 0; b < q_; ++b) {
        auto y = coeffs(b);
        std::vector<unsigned> s(k_);
        for (unsigned i = 0; i < k_; ++i)
          s[i] = (x[i] + y[i]) % p_;
        add_[a * q_ + b] = encode(s);
        mul_[a * q_ + b] = poly_mul(a, b);
      }
    }
    for (Element a = 1; a < q_; ++a)
      for (Element b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1)
          inv_[a] = b;
    for (Element a = 0; a < q_; ++a) {
      Element r = 1;
      for (unsigned i = 0; i < p_; ++i)
        r = mul_[r * q_ + a];
      frob_[a] = r;
    }
  }
};

/// A d×d matrix over a GaloisField; row vectors act on the right (v ↦ vM).
class FieldMatrix {
public:
  using Element = GaloisField::Element;

  FieldMatrix(std::shared_ptr<const GaloisField> field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), entries_(dim * dim, 0) {}

  FieldMatrix(std::shared_ptr<const GaloisField> field, std::size_t dim,
              std::vector<Element> row_major)
    : field_(std::move(field)), dim_(dim), entries_(std::move(row_major)) {
    if (entries_.size() != dim_ * dim_)
      throw std::invalid_argument("matrix entry count does not match dimension");
    for (auto e : entries_)
      if (e >= field_->size())
        throw std::invalid_argument("matrix entry outside the field");
  }

  static FieldMatrix identity(std::shared_ptr<const GaloisField> field, std::size_t dim) {
    FieldMatrix m(std::move(field), dim);
    for (std::size_t i = 0; i < dim; ++i)
      m.at(i, i) = 1;
    return m;
  }

  static FieldMatrix scalar(std::shared_ptr<const GaloisField> field, std::size_t dim, Element c) {
    FieldMatrix m(std::move(field), dim);
    for (std::size_t i = 0; i < dim; ++i)
      m.at(i, i) = c;
    return m;
  }

  const GaloisField& field() const noexcept { return *field_; }
  const std::shared_ptr<const GaloisField>& field_ptr() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return dim_; }

  Element& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  Element at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  std::vector<Element> apply(const std::vector<Element>& v) const {
    std::vector<Element> out(dim_, 0);
    for (std::size_t c = 0; c < dim_; ++c) {
      Element s = 0;
      for (std::size_t r = 0; r < dim_; ++r)
        s = field_->add(s, field_->mul(v[r], at(r, c)));
      out[c] = s;
    }
    return out;
  }

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.dim_ != b.dim_)
      throw std::invalid_argument("matrix dimension mismatch");
    FieldMatrix r(a.field_, a.dim_);
    const auto& f = *a.field_;
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t j = 0; j < a.dim_; ++j) {
        Element s = 0;
        for (std::size_t k = 0; k < a.dim_; ++k)
          s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
        r.at(i, j) = s;
      }
    return r;
  }

  FieldMatrix transpose() const {
    FieldMatrix t(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        t.at(j, i) = at(i, j);
    return t;
  }

  Element determinant() const {
    const auto& f = *field_;
    std::vector<Element> a = entries_;
    Element det = 1;
    for (std::size_t col = 0; col < dim_; ++col) {
      std::size_t pivot = col;
      while (pivot < dim_ && a[pivot * dim_ + col] == 0)
        ++pivot;
      if (pivot == dim_)
        return 0;
      if (pivot != col) {
        for (std::size_t j = 0; j < dim_; ++j)
          std::swap(a[pivot * dim_ + j], a[col * dim_ + j]);
        det = f.neg(det);
      }
      Element pv = a[col * dim_ + col];
      det = f.mul(det, pv);
      Element pinv = f.inv(pv);
      for (std::size_t r = col + 1; r < dim_; ++r) {
        Element factor = f.mul(a[r * dim_ + col], pinv);
        if (factor == 0)
          continue;
        for (std::size_t j = col; j < dim_; ++j)
          a[r * dim_ + j] = f.sub(a[r * dim_ + j], f.mul(factor, a[col * dim_ + j]));
      }
    }
    return det;
  }

  /// Entrywise Frobenius.
  FieldMatrix frobenius() const {
    FieldMatrix r = *this;
    for (auto& e : r.entries_)
      e = field_->frobenius(e);
    return r;
  }

  const std::vector<Element>& entries() const noexcept { return entries_; }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

private:
  std::shared_ptr<const GaloisField> field_;
  std::size_t dim_;
  std::vector<Element> entries_;
};

/// v ↦ frobenius^k(v) · M, a semilinear map of the row space.
struct SemilinearMap {
  FieldMatrix matrix;
  unsigned frobenius_power = 0;

  std::vector<GaloisField::Element> apply(std::vector<GaloisField::Element> v) const {
    const auto& f = matrix.field();
    for (unsigned i = 0; i < frobenius_power; ++i)
      for (auto& x : v)
        x = f.frobenius(x);
    return matrix.apply(v);
  }
};

} // namespace classlab

#endif
