#pragma once

// Group models, the formal group algebra K[G] and the two concrete algebra
// backends (square matrices, twisted cyclic algebra K[X]/(X^s - d_s)).

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "smbraid/error.hpp"
#include "smbraid/scalars.hpp"
#include "smbraid/words.hpp"

namespace smbraid {

// ---------------------------------------------------------------------------
// Matrices over Scalar.

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw domain_error("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }
  explicit Matrix(const std::vector<std::vector<Scalar>>& rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw domain_error("ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }
  static Matrix scalar(std::size_t n, const Scalar& s) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& s : data_)
      if (!s.is_zero()) return false;
    return true;
  }

  /// d when the matrix equals d * I.
  std::optional<Scalar> as_scalar() const {
    if (!square() || rows_ == 0) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !(*this)(i, j).is_zero()) return std::nullopt;
    for (std::size_t i = 1; i < rows_; ++i)
      if (!((*this)(i, i) == (*this)(0, 0))) return std::nullopt;
    return (*this)(0, 0);
  }

  bool is_identity() const {
    auto s = as_scalar();
    return s && s->is_one();
  }

  Scalar determinant() const {
    if (!square()) throw domain_error("determinant of non-square matrix");
    std::vector<std::size_t> cols(cols_);
    for (std::size_t j = 0; j < cols_; ++j) cols[j] = j;
    return minor_det(0, cols);
  }

  /// Exact inverse via the adjugate; the determinant must be a unit.
  Matrix inverse() const {
    Scalar det = determinant();
    if (!det.is_unit()) throw domain_error("matrix is not invertible (determinant " + det.str() + ")");
    Scalar inv_det = det.inverse();
    const std::size_t n = rows_;
    if (n == 1) return Matrix::scalar(1, inv_det);
    Matrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Matrix sub(n - 1, n - 1);
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
          if (r == i) continue;
          for (std::size_t c = 0, cc = 0; c < n; ++c) {
            if (c == j) continue;
            sub(rr, cc++) = (*this)(r, c);
          }
          ++rr;
        }
        Scalar cof = sub.determinant();
        adj(j, i) = ((i + j) % 2 == 0) ? cof * inv_det : -(cof * inv_det);
      }
    }
    return adj;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }
  friend Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.data_) x = s * x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw domain_error("matrix shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Row-major bracketed form, e.g. `[[1, 0], [0, 1]]`.
  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += (*this)(i, j).str();
      }
      out += "]";
    }
    return out + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

 private:
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix shape mismatch");
  }

  // Laplace expansion along row `row` over the remaining columns; the
  // matrices here are at most a handful of rows.
  Scalar minor_det(std::size_t row, const std::vector<std::size_t>& cols) const {
    if (cols.empty()) return Scalar(1);
    if (cols.size() == 1) return (*this)(row, cols[0]);
    Scalar sum(0);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Scalar& entry = (*this)(row, cols[k]);
      if (entry.is_zero()) continue;
      std::vector<std::size_t> rest;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (c != k) rest.push_back(cols[c]);
      Scalar term = entry * minor_det(row + 1, rest);
      sum = (k % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Matrix pow(const Matrix& m, long e) {
  if (!m.square()) throw domain_error("power of non-square matrix");
  if (e < 0) return pow(m.inverse(), -e);
  Matrix result = Matrix::identity(m.rows()), base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Group models.

/// Payload of a group element; which alternative is used depends on the model.
using GroupElement = std::variant<std::monostate, Permutation, std::vector<long>, Matrix>;

enum class GroupKind { trivial, symmetric, free_abelian, matrix };

class GroupModel {
 public:
  static GroupModel trivial() { return GroupModel(GroupKind::trivial, 1); }
  static GroupModel symmetric(int n) { return GroupModel(GroupKind::symmetric, checked(n, "symmetric group degree")); }
  static GroupModel free_abelian(int rank) { return GroupModel(GroupKind::free_abelian, checked(rank, "free abelian rank")); }
  /// Invertible dim x dim matrices over Q or Q[t, 1/t].
  static GroupModel matrix(int dim) { return GroupModel(GroupKind::matrix, checked(dim, "matrix dimension")); }

  GroupKind kind() const { return kind_; }
  int size() const { return size_; }

  GroupElement identity() const {
    switch (kind_) {
      case GroupKind::trivial: return std::monostate{};
      case GroupKind::symmetric: return identity_permutation(size_);
      case GroupKind::free_abelian: return std::vector<long>(static_cast<std::size_t>(size_), 0);
      case GroupKind::matrix: return Matrix::identity(static_cast<std::size_t>(size_));
    }
    return std::monostate{};
  }

  GroupElement multiply(const GroupElement& g, const GroupElement& h) const {
    check(g);
    check(h);
    switch (kind_) {
      case GroupKind::trivial: return std::monostate{};
      case GroupKind::symmetric: return compose(std::get<Permutation>(g), std::get<Permutation>(h));
      case GroupKind::free_abelian: {
        auto r = std::get<std::vector<long>>(g);
        const auto& b = std::get<std::vector<long>>(h);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
        return r;
      }
      case GroupKind::matrix: return std::get<Matrix>(g) * std::get<Matrix>(h);
    }
    return std::monostate{};
  }

  GroupElement invert(const GroupElement& g) const {
    check(g);
    switch (kind_) {
      case GroupKind::trivial: return std::monostate{};
      case GroupKind::symmetric: {
        const auto& p = std::get<Permutation>(g);
        Permutation r(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) r[static_cast<std::size_t>(p[k])] = static_cast<int>(k);
        return r;
      }
      case GroupKind::free_abelian: {
        auto r = std::get<std::vector<long>>(g);
        for (auto& x : r) x = -x;
        return r;
      }
      case GroupKind::matrix: return std::get<Matrix>(g).inverse();
    }
    return std::monostate{};
  }

  /// Canonical serialization; equal keys iff equal elements.
  std::string canonical_key(const GroupElement& g) const {
    check(g);
    switch (kind_) {
      case GroupKind::trivial: return "e";
      case GroupKind::symmetric: {
        std::string out;
        for (int v : std::get<Permutation>(g)) out += (out.empty() ? "" : ",") + std::to_string(v + 1);
        return out;
      }
      case GroupKind::free_abelian: {
        std::string out;
        for (long v : std::get<std::vector<long>>(g)) out += (out.empty() ? "" : ",") + std::to_string(v);
        return out;
      }
      case GroupKind::matrix: return std::get<Matrix>(g).str();
    }
    return {};
  }

  /// Throws unless g is a well-formed element of this model.
  void check(const GroupElement& g) const {
    bool ok = false;
    switch (kind_) {
      case GroupKind::trivial: ok = std::holds_alternative<std::monostate>(g); break;
      case GroupKind::symmetric:
        ok = std::holds_alternative<Permutation>(g) && std::get<Permutation>(g).size() == static_cast<std::size_t>(size_);
        break;
      case GroupKind::free_abelian:
        ok = std::holds_alternative<std::vector<long>>(g) &&
             std::get<std::vector<long>>(g).size() == static_cast<std::size_t>(size_);
        break;
      case GroupKind::matrix: {
        ok = std::holds_alternative<Matrix>(g);
        if (ok) {
          const auto& m = std::get<Matrix>(g);
          ok = m.rows() == static_cast<std::size_t>(size_) && m.cols() == m.rows();
        }
        break;
      }
    }
    if (!ok) throw backend_mismatch("element does not belong to group " + name());
  }

  std::string name() const {
    switch (kind_) {
      case GroupKind::trivial: return "trivial";
      case GroupKind::symmetric: return "symmetric(" + std::to_string(size_) + ")";
      case GroupKind::free_abelian: return "free_abelian(" + std::to_string(size_) + ")";
      case GroupKind::matrix: return "matrix(" + std::to_string(size_) + ")";
    }
    return {};
  }

  /// Faithful matrix image of an element (permutation matrices for S_n,
  /// 1x1 identity for the trivial group).
  Matrix as_matrix(const GroupElement& g) const {
    check(g);
    switch (kind_) {
      case GroupKind::trivial: return Matrix::identity(1);
      case GroupKind::symmetric: {
        const auto& p = std::get<Permutation>(g);
        Matrix m(p.size(), p.size());
        for (std::size_t k = 0; k < p.size(); ++k) m(static_cast<std::size_t>(p[k]), k) = Scalar(1);
        return m;
      }
      case GroupKind::matrix: return std::get<Matrix>(g);
      case GroupKind::free_abelian: break;
    }
    throw backend_mismatch("free abelian elements have no matrix image");
  }

  int matrix_dimension() const {
    switch (kind_) {
      case GroupKind::trivial: return 1;
      case GroupKind::symmetric:
      case GroupKind::matrix: return size_;
      case GroupKind::free_abelian: break;
    }
    throw backend_mismatch("free abelian group has no matrix realization");
  }

  friend bool operator==(const GroupModel&, const GroupModel&) = default;

 private:
  GroupModel(GroupKind kind, int size) : kind_(kind), size_(size) {}

  static int checked(int v, const char* what) {
    if (v < 1) throw domain_error(std::string(what) + " must be at least 1");
    return v;
  }

  GroupKind kind_;
  int size_;
};

// ---------------------------------------------------------------------------
// Formal group algebra K[G]: sparse map canonical key -> (element, coefficient).

class FormalElement {
 public:
  struct Term {
    GroupElement element;
    Scalar coeff;
  };

  explicit FormalElement(GroupModel group) : group_(std::move(group)) {}

  static FormalElement basis(const GroupModel& group, const GroupElement& g, const Scalar& c = Scalar(1)) {
    FormalElement x(group);
    x.add_term(g, c);
    return x;
  }

  const GroupModel& group() const { return group_; }
  const std::map<std::string, Term>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const GroupElement& g) const {
    auto it = terms_.find(group_.canonical_key(g));
    return it == terms_.end() ? Scalar(0) : it->second.coeff;
  }

  void add_term(const GroupElement& g, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = group_.canonical_key(g);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), Term{g, c});
      return;
    }
    it->second.coeff += c;
    if (it->second.coeff.is_zero()) terms_.erase(it);
  }

  /// d when the element equals d * [e].
  std::optional<Scalar> as_scalar() const {
    if (terms_.empty()) return Scalar(0);
    if (terms_.size() != 1) return std::nullopt;
    const auto& [key, term] = *terms_.begin();
    if (key != group_.canonical_key(group_.identity())) return std::nullopt;
    return term.coeff;
  }

  FormalElement& operator+=(const FormalElement& o) {
    same_group(o);
    for (const auto& [k, t] : o.terms_) add_term(t.element, t.coeff);
    return *this;
  }

  friend FormalElement operator+(FormalElement a, const FormalElement& b) { return a += b; }

  friend FormalElement operator*(const Scalar& s, const FormalElement& x) {
    FormalElement r(x.group_);
    if (s.is_zero()) return r;
    for (const auto& [k, t] : x.terms_) r.terms_.emplace(k, Term{t.element, s * t.coeff});
    return r;
  }

  /// Convolution: (sum a_g [g]) (sum b_h [h]) = sum a_g b_h [gh].
  friend FormalElement operator*(const FormalElement& x, const FormalElement& y) {
    x.same_group(y);
    FormalElement r(x.group_);
    for (const auto& [kx, tx] : x.terms_)
      for (const auto& [ky, ty] : y.terms_) r.add_term(x.group_.multiply(tx.element, ty.element), tx.coeff * ty.coeff);
    return r;
  }

  friend bool operator==(const FormalElement& a, const FormalElement& b) {
    if (!(a.group_ == b.group_) || a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second.coeff == ib->second.coeff)) return false;
    return true;
  }

  /// `coeff * <key> + ...`, keys in canonical order; `0` for the zero element.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, t] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + t.coeff.str() + ") * <" + k + ">";
    }
    return out;
  }

  void same_group(const FormalElement& o) const {
    if (!(group_ == o.group_)) throw backend_mismatch("formal elements over different groups");
  }

 private:
  GroupModel group_;
  std::map<std::string, Term> terms_;
};

// ---------------------------------------------------------------------------
// Twisted cyclic algebra: basis X^0 .. X^{s-1}, X^s = twist * X^0.

class CyclicElement {
 public:
  CyclicElement(std::size_t s, Scalar twist) : coeffs_(s), twist_(std::move(twist)) {
    if (s < 1) throw domain_error("cyclic algebra needs s >= 1");
    if (!twist_.is_unit()) throw domain_error("cyclic twist must be a unit, got " + twist_.str());
  }

  /// c * X^k for any integer k, reduced with the twist relation.
  static CyclicElement monomial(std::size_t s, const Scalar& twist, long k, const Scalar& c = Scalar(1)) {
    CyclicElement x(s, twist);
    const long sl = static_cast<long>(s);
    long wraps = k >= 0 ? k / sl : -((-k + sl - 1) / sl);
    long rem = k - wraps * sl;
    x.coeffs_[static_cast<std::size_t>(rem)] = c * pow(twist, wraps);
    return x;
  }

  std::size_t s() const { return coeffs_.size(); }
  const Scalar& twist() const { return twist_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  std::optional<Scalar> as_scalar() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return std::nullopt;
    return coeffs_[0];
  }

  CyclicElement& operator+=(const CyclicElement& o) {
    same_algebra(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  friend CyclicElement operator*(const Scalar& c, const CyclicElement& x) {
    CyclicElement r = x;
    for (auto& v : r.coeffs_) v = c * v;
    return r;
  }

  friend CyclicElement operator*(const CyclicElement& x, const CyclicElement& y) {
    x.same_algebra(y);
    const std::size_t s = x.s();
    CyclicElement r(s, x.twist_);
    for (std::size_t i = 0; i < s; ++i) {
      if (x.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < s; ++j) {
        if (y.coeffs_[j].is_zero()) continue;
        Scalar c = x.coeffs_[i] * y.coeffs_[j];
        if (i + j >= s)
          r.coeffs_[i + j - s] += x.twist_ * c;
        else
          r.coeffs_[i + j] += c;
      }
    }
    return r;
  }

  friend bool operator==(const CyclicElement&, const CyclicElement&) = default;

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out += (i ? ", " : "") + coeffs_[i].str();
    return out + ")";
  }

  void same_algebra(const CyclicElement& o) const {
    if (s() != o.s() || !(twist_ == o.twist_)) throw backend_mismatch("cyclic elements over different algebras");
  }

 private:
  std::vector<Scalar> coeffs_;
  Scalar twist_;
};

// ---------------------------------------------------------------------------
// Backends and the tagged algebra element.

struct FormalBackend {
  GroupModel group;
  friend bool operator==(const FormalBackend&, const FormalBackend&) = default;
};
struct MatrixBackend {
  std::size_t dim;
  friend bool operator==(const MatrixBackend&, const MatrixBackend&) = default;
};
struct CyclicBackend {
  std::size_t s;
  Scalar twist;
  friend bool operator==(const CyclicBackend&, const CyclicBackend&) = default;
};

using Backend = std::variant<FormalBackend, MatrixBackend, CyclicBackend>;

inline std::string backend_name(const Backend& b) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FormalBackend>) return "formal:" + x.group.name();
        else if constexpr (std::is_same_v<T, MatrixBackend>) return "matrix:" + std::to_string(x.dim);
        else return "cyclic:" + std::to_string(x.s) + ":" + x.twist.str();
      },
      b);
}

class AlgebraElement {
 public:
  using Payload = std::variant<FormalElement, Matrix, CyclicElement>;

  AlgebraElement(FormalElement x) : v_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  AlgebraElement(Matrix x) : v_(std::move(x)) {         // NOLINT(google-explicit-constructor)
    if (!std::get<Matrix>(v_).square()) throw domain_error("matrix algebra elements must be square");
  }
  AlgebraElement(CyclicElement x) : v_(std::move(x)) {}  // NOLINT(google-explicit-constructor)

  const Payload& payload() const { return v_; }
  bool is_formal() const { return std::holds_alternative<FormalElement>(v_); }
  bool is_matrix() const { return std::holds_alternative<Matrix>(v_); }
  bool is_cyclic() const { return std::holds_alternative<CyclicElement>(v_); }
  const FormalElement& formal() const { return std::get<FormalElement>(v_); }
  const Matrix& matrix() const { return std::get<Matrix>(v_); }
  const CyclicElement& cyclic() const { return std::get<CyclicElement>(v_); }

  Backend backend() const {
    if (is_formal()) return FormalBackend{formal().group()};
    if (is_matrix()) return MatrixBackend{matrix().rows()};
    return CyclicBackend{cyclic().s(), cyclic().twist()};
  }

  /// d when the element is d times the algebra identity.
  std::optional<Scalar> as_scalar() const {
    return std::visit([](const auto& x) { return x.as_scalar(); }, v_);
  }
  bool is_identity() const {
    auto s = as_scalar();
    return s && s->is_one();
  }
  bool is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
  }

  std::string str() const {
    return std::visit([](const auto& x) { return x.str(); }, v_);
  }
  /// Canonical text including the backend tag; equal keys iff equal elements.
  std::string key() const { return backend_name(backend()) + "|" + str(); }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return std::visit(
        [](const auto& x, const auto& y) -> AlgebraElement {
          using X = std::decay_t<decltype(x)>;
          using Y = std::decay_t<decltype(y)>;
          if constexpr (!std::is_same_v<X, Y>) {
            throw backend_mismatch("adding elements of different backends");
          } else if constexpr (std::is_same_v<X, Matrix>) {
            return x + y;
          } else {
            X r = x;
            r += y;
            return r;
          }
        },
        a.v_, b.v_);
  }

  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
    return std::visit([&s](const auto& x) -> AlgebraElement { return s * x; }, a.v_);
  }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return std::visit(
        [](const auto& x, const auto& y) -> AlgebraElement {
          using X = std::decay_t<decltype(x)>;
          using Y = std::decay_t<decltype(y)>;
          if constexpr (!std::is_same_v<X, Y>)
            throw backend_mismatch("multiplying elements of different backends");
          else
            return x * y;
        },
        a.v_, b.v_);
  }

  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + Scalar(-1) * b; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.v_ == b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) { return os << a.str(); }

 private:
  Payload v_;
};

inline AlgebraElement algebra_identity(const Backend& b) {
  return std::visit(
      [](const auto& x) -> AlgebraElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FormalBackend>) return FormalElement::basis(x.group, x.group.identity());
        else if constexpr (std::is_same_v<T, MatrixBackend>) return Matrix::identity(x.dim);
        else return CyclicElement::monomial(x.s, x.twist, 0);
      },
      b);
}

inline AlgebraElement algebra_zero(const Backend& b) {
  return std::visit(
      [](const auto& x) -> AlgebraElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FormalBackend>) return FormalElement(x.group);
        else if constexpr (std::is_same_v<T, MatrixBackend>) return Matrix(x.dim, x.dim);
        else return CyclicElement(x.s, x.twist);
      },
      b);
}

inline AlgebraElement alg_add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }
inline AlgebraElement alg_scale(const Scalar& s, const AlgebraElement& x) { return s * x; }
inline AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

/// Square-and-multiply; x^0 is the backend identity.
inline AlgebraElement alg_pow(const AlgebraElement& x, unsigned long e) {
  AlgebraElement result = algebra_identity(x.backend());
  AlgebraElement base = x;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

inline bool is_identity(const AlgebraElement& x) { return x.is_identity(); }

/// The unit of the group inside the algebra: 1*[g] in the formal backend, the
/// element's matrix in the matrix backend. The cyclic backend has no general
/// embedding.
inline AlgebraElement embed(const Backend& backend, const GroupModel& group, const GroupElement& g) {
  if (const auto* f = std::get_if<FormalBackend>(&backend)) {
    if (!(f->group == group)) throw backend_mismatch("element of " + group.name() + " in backend " + backend_name(backend));
    return FormalElement::basis(group, g);
  }
  if (const auto* m = std::get_if<MatrixBackend>(&backend)) {
    Matrix mat = group.as_matrix(g);
    if (mat.rows() != m->dim) throw backend_mismatch("matrix dimension mismatch in embed");
    return mat;
  }
  throw backend_mismatch("the cyclic backend has no embedding of group elements");
}

}  // namespace smbraid
