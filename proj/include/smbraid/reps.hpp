#pragma once

// Representations of the braid group B_n and their realization inside an
// algebra backend.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smbraid/algebra.hpp"
#include "smbraid/error.hpp"
#include "smbraid/scalars.hpp"
#include "smbraid/words.hpp"

namespace smbraid {

enum class Faithfulness { known_faithful, known_unfaithful, unknown };

inline const char* to_string(Faithfulness f) {
  switch (f) {
    case Faithfulness::known_faithful: return "known_faithful";
    case Faithfulness::known_unfaithful: return "known_unfaithful";
    case Faithfulness::unknown: return "unknown";
  }
  return "unknown";
}

/// Declarative faithfulness metadata. Nothing in the library decides
/// faithfulness of a braid representation; this only records known facts.
struct FaithfulnessInfo {
  Faithfulness status = Faithfulness::unknown;
  std::string citation;
  std::optional<Word> witness;  // nontrivial braid word mapped to the identity
};

/// rho(sigma_i) = unit * element.
struct GeneratorImage {
  Scalar unit;
  GroupElement element;
};

class BraidRep {
 public:
  /// Validates invertibility of every image and the braid relations
  /// in the native backend.
  BraidRep(int n, std::string name, GroupModel group, Backend native, std::vector<GeneratorImage> images,
           FaithfulnessInfo info)
      : n_(n), name_(std::move(name)), group_(std::move(group)), native_(std::move(native)),
        images_(std::move(images)), info_(std::move(info)) {
    if (n_ < 2) throw domain_error("braid representations need n >= 2");
    if (images_.size() != static_cast<std::size_t>(n_ - 1))
      throw domain_error("expected " + std::to_string(n_ - 1) + " generator images, got " + std::to_string(images_.size()));
    for (const auto& img : images_) {
      group_.check(img.element);
      if (!img.unit.is_unit()) throw domain_error("generator unit " + img.unit.str() + " is not invertible");
      inverse_images_.push_back({img.unit.inverse(), group_.invert(img.element)});
    }
    verify_braid_relations();
  }

  int n() const { return n_; }
  const std::string& name() const { return name_; }
  const GroupModel& group() const { return group_; }
  const Backend& native_backend() const { return native_; }
  const FaithfulnessInfo& faithfulness() const { return info_; }
  const GeneratorImage& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const GeneratorImage& inverse_image(int i) const { return inverse_images_.at(static_cast<std::size_t>(i - 1)); }

 private:
  void verify_braid_relations() const;

  int n_;
  std::string name_;
  GroupModel group_;
  Backend native_;
  std::vector<GeneratorImage> images_;
  std::vector<GeneratorImage> inverse_images_;
  FaithfulnessInfo info_;
};

/// Generator images of a representation precomputed inside one backend.
class Realization {
 public:
  Realization(Backend backend, int n, std::vector<AlgebraElement> sigma, std::vector<AlgebraElement> sigma_inv)
      : backend_(std::move(backend)), n_(n), sigma_(std::move(sigma)), sigma_inv_(std::move(sigma_inv)),
        identity_(algebra_identity(backend_)) {}

  const Backend& backend() const { return backend_; }
  int n() const { return n_; }
  const AlgebraElement& identity() const { return identity_; }
  AlgebraElement zero() const { return algebra_zero(backend_); }
  const AlgebraElement& sigma(int i) const { return sigma_.at(static_cast<std::size_t>(i - 1)); }
  const AlgebraElement& sigma_inv(int i) const { return sigma_inv_.at(static_cast<std::size_t>(i - 1)); }

  const AlgebraElement& braid_letter(const Letter& l) const {
    check_index(l.index);
    if (l.kind == LetterKind::sigma) return sigma(l.index);
    if (l.kind == LetterKind::sigma_inv) return sigma_inv(l.index);
    throw domain_error("tau letter in a braid word");
  }

  void check_index(int i) const {
    if (i < 1 || i > n_ - 1) throw domain_error("generator index " + std::to_string(i) + " out of range for n = " + std::to_string(n_));
  }

 private:
  Backend backend_;
  int n_;
  std::vector<AlgebraElement> sigma_;
  std::vector<AlgebraElement> sigma_inv_;
  AlgebraElement identity_;
};

namespace detail {

inline AlgebraElement image_in(const Backend& backend, const GroupModel& group, const GeneratorImage& img) {
  return img.unit * embed(backend, group, img.element);
}

}  // namespace detail

/// Realizes a representation in a backend. Formal and matrix backends use the
/// stored images; the cyclic backend (n = 2 only) sends sigma_1 to X, which
/// models the span of the powers of rho(sigma_1) when rho(sigma_1)^s equals
/// twist times the identity. That relation is checked here.
inline Realization realize(const BraidRep& rep, const Backend& backend) {
  std::vector<AlgebraElement> sig, inv;
  if (const auto* cyc = std::get_if<CyclicBackend>(&backend)) {
    if (rep.n() != 2) throw backend_mismatch("the cyclic backend models B_2 only");
    const auto& img = rep.image(1);
    Matrix m = img.unit * rep.group().as_matrix(img.element);
    auto power = pow(m, static_cast<long>(cyc->s)).as_scalar();
    if (!power || !(*power == cyc->twist))
      throw domain_error("rho(sigma_1)^" + std::to_string(cyc->s) + " is not " + cyc->twist.str() + " times the identity");
    sig.push_back(CyclicElement::monomial(cyc->s, cyc->twist, 1));
    inv.push_back(CyclicElement::monomial(cyc->s, cyc->twist, -1));
    return Realization(backend, 2, std::move(sig), std::move(inv));
  }
  if (const auto* mat = std::get_if<MatrixBackend>(&backend)) {
    if (static_cast<int>(mat->dim) != rep.group().matrix_dimension())
      throw backend_mismatch("matrix backend dimension " + std::to_string(mat->dim) + " does not fit " + rep.name());
  }
  for (int i = 1; i < rep.n(); ++i) {
    sig.push_back(detail::image_in(backend, rep.group(), rep.image(i)));
    inv.push_back(detail::image_in(backend, rep.group(), rep.inverse_image(i)));
  }
  return Realization(backend, rep.n(), std::move(sig), std::move(inv));
}

inline Realization realize(const BraidRep& rep) { return realize(rep, rep.native_backend()); }

/// Product of generator images, left to right.
inline AlgebraElement rep_eval(const Realization& real, const Word& w) {
  if (w.n() != real.n()) throw domain_error("word strand count does not match the representation");
  AlgebraElement acc = real.identity();
  for (const auto& l : w) acc = acc * real.braid_letter(l);
  return acc;
}

inline AlgebraElement rep_eval(const BraidRep& rep, const Word& w) { return rep_eval(realize(rep), w); }

inline void BraidRep::verify_braid_relations() const {
  Realization real = realize(*this);
  for (const auto& rel : relation_instances(n_)) {
    if (rel.family > 2) continue;
    if (!(rep_eval(real, rel.lhs) == rep_eval(real, rel.rhs)))
      throw domain_error(name_ + ": braid relation family " + std::to_string(rel.family) + " fails for " + to_string(rel.lhs) +
                         " = " + to_string(rel.rhs));
  }
}

// ---------------------------------------------------------------------------
// Shipped representations.

/// Identity with the block [[1-t, t], [1, 0]] at rows/cols (i, i+1).
inline Matrix burau_unreduced_matrix(int n, int i) {
  const auto t = Scalar::t();
  Matrix m = Matrix::identity(static_cast<std::size_t>(n));
  const auto k = static_cast<std::size_t>(i - 1);
  m(k, k) = Scalar(1) - t;
  m(k, k + 1) = t;
  m(k + 1, k) = Scalar(1);
  m(k + 1, k + 1) = Scalar(0);
  return m;
}

inline BraidRep burau_unreduced(int n) {
  if (n < 2) throw domain_error("burau_unreduced needs n >= 2");
  std::vector<GeneratorImage> images;
  for (int i = 1; i < n; ++i) images.push_back({Scalar(1), burau_unreduced_matrix(n, i)});
  FaithfulnessInfo info;
  if (n <= 3) {
    info = {Faithfulness::known_faithful, "Burau representation is faithful for n <= 3", std::nullopt};
  } else if (n == 4) {
    info = {Faithfulness::unknown, "faithfulness of the Burau representation for n = 4 is open", std::nullopt};
  } else {
    info = {Faithfulness::known_unfaithful, "Burau representation is unfaithful for n >= 5", std::nullopt};
  }
  return BraidRep(n, "burau-unreduced(" + std::to_string(n) + ")", GroupModel::matrix(n),
                  MatrixBackend{static_cast<std::size_t>(n)}, std::move(images), std::move(info));
}

inline BraidRep burau_reduced(int n) {
  const auto t = Scalar::t();
  FaithfulnessInfo info{Faithfulness::known_faithful, "Burau representation is faithful for n <= 3", std::nullopt};
  if (n == 2)
    return BraidRep(2, "burau-reduced(2)", GroupModel::trivial(), MatrixBackend{1},
                    {{-t, std::monostate{}}}, std::move(info));
  if (n == 3) {
    Matrix s1{{-t, Scalar(1)}, {Scalar(0), Scalar(1)}};
    Matrix s2{{Scalar(1), Scalar(0)}, {t, -t}};
    return BraidRep(3, "burau-reduced(3)", GroupModel::matrix(2), MatrixBackend{2},
                    {{Scalar(1), s1}, {Scalar(1), s2}}, std::move(info));
  }
  throw domain_error("burau_reduced is provided for n = 2 and n = 3 only");
}

inline BraidRep permutation_rep(int n) {
  if (n < 2) throw domain_error("permutation_rep needs n >= 2");
  std::vector<GeneratorImage> images;
  for (int i = 1; i < n; ++i) images.push_back({Scalar(1), transposition(n, i)});
  FaithfulnessInfo info{Faithfulness::known_unfaithful, "sigma_1^2 maps to the identity permutation",
                        sigma_power(n, 1, 2)};
  auto group = GroupModel::symmetric(n);
  return BraidRep(n, "perm(" + std::to_string(n) + ")", group, FormalBackend{group}, std::move(images), std::move(info));
}

/// Smallest r in [1, r_max] with x^r = 1. Over Q only +-1 are roots of unity;
/// a Laurent monomial c*t^k needs k = 0, and a non-monomial is not a unit.
inline std::optional<long> root_of_unity_order(const Scalar& x, long r_max) {
  if (x.is_zero()) throw domain_error("zero is not a unit");
  if (!x.is_rational()) return std::nullopt;
  long order = 0;
  if (x.rational() == Rational(1)) order = 1;
  else if (x.rational() == Rational(-1)) order = 2;
  if (order == 0 || order > r_max) return std::nullopt;
  return order;
}

/// Every sigma_i goes to the unit d (times the identity).
inline BraidRep scalar_char(const Scalar& d, int n) {
  if (!d.is_unit()) throw domain_error("scalar character needs a unit, got " + d.str());
  std::vector<GeneratorImage> images(static_cast<std::size_t>(n - 1), GeneratorImage{d, std::monostate{}});
  FaithfulnessInfo info;
  if (n == 2) {
    if (auto r = root_of_unity_order(d, 2)) {
      info = {Faithfulness::known_unfaithful, "d is a root of unity", sigma_power(2, 1, *r)};
    } else {
      info = {Faithfulness::known_faithful, "B_2 is infinite cyclic and d is not a root of unity", std::nullopt};
    }
  } else {
    Word w(n, {sigma(1), sigma_inv(2)});
    info = {Faithfulness::known_unfaithful, "abelian image", w};
  }
  return BraidRep(n, "scalar(" + d.str() + ")", GroupModel::trivial(), MatrixBackend{1}, std::move(images),
                  std::move(info));
}

/// Arbitrary invertible square matrices, one per generator.
inline BraidRep matrix_rep_from_images(int n, const std::vector<Matrix>& matrices) {
  if (n < 2) throw domain_error("matrix representations need n >= 2");
  if (matrices.size() != static_cast<std::size_t>(n - 1))
    throw domain_error("expected " + std::to_string(n - 1) + " matrices, got " + std::to_string(matrices.size()));
  const std::size_t dim = matrices.front().rows();
  std::vector<GeneratorImage> images;
  for (const auto& m : matrices) {
    if (!m.square() || m.rows() != dim) throw domain_error("generator matrices must be square of equal size");
    images.push_back({Scalar(1), m});
  }
  return BraidRep(n, "matrix(" + std::to_string(dim) + ")", GroupModel::matrix(static_cast<int>(dim)),
                  MatrixBackend{dim}, std::move(images), FaithfulnessInfo{});
}

}  // namespace smbraid
