#include <gtest/gtest.h>

#include <random>

#include "smbraid/algebra.hpp"

using namespace smbraid;

namespace {

const Matrix kM{{Scalar(0), Scalar(-2)}, {Scalar(1), Scalar(0)}};

GroupElement z(long e) { return std::vector<long>{e}; }

// K[Z] is the Laurent polynomial ring: [g^e] <-> t^e.
LaurentPoly to_laurent(const FormalElement& x) {
  LaurentPoly p;
  for (const auto& [k, term] : x.terms())
    p.add_term(std::get<std::vector<long>>(term.element).front(), term.coeff.rational());
  return p;
}

FormalElement random_z_element(std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-4, 4), e(-3, 3), len(0, 4);
  FormalElement x(GroupModel::free_abelian(1));
  for (long k = len(rng); k > 0; --k) x.add_term(z(e(rng)), Scalar(c(rng)));
  return x;
}

// Linear extension of the permutation-matrix homomorphism K[S_n] -> M_n(K).
Matrix perm_matrix_image(const FormalElement& x, int n) {
  Matrix acc(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const auto& [k, term] : x.terms()) acc = acc + term.coeff * x.group().as_matrix(term.element);
  return acc;
}

// K[X]/(X^2 + 2) -> K[M] with X -> M.
Matrix cyclic_to_matrix(const CyclicElement& x) {
  Matrix acc(2, 2);
  for (std::size_t k = 0; k < x.s(); ++k) acc = acc + x[k] * pow(kM, static_cast<long>(k));
  return acc;
}

Scalar random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  return Scalar(Rational(num(rng), den(rng)));
}

}  // namespace

TEST(Group, Symmetric) {
  auto s3 = GroupModel::symmetric(3);
  Permutation g = std::get<Permutation>(s3.multiply(Permutation{1, 0, 2}, Permutation{0, 2, 1}));
  for (int k = 0; k < 3; ++k) EXPECT_NE(g[static_cast<std::size_t>(k)], k);
  EXPECT_EQ(s3.canonical_key(s3.multiply(g, s3.multiply(g, g))), s3.canonical_key(s3.identity()));
  EXPECT_EQ(s3.canonical_key(s3.invert(g)), s3.canonical_key(s3.multiply(g, g)));
}

TEST(Group, FreeAbelianKey) {
  auto z1 = GroupModel::free_abelian(1);
  EXPECT_EQ(z1.canonical_key(z(5)), "5");
  EXPECT_EQ(z1.canonical_key(z1.multiply(z(2), z(3))), "5");
}

TEST(Group, MatrixIdentity) {
  auto g = GroupModel::matrix(2);
  EXPECT_EQ(std::get<Matrix>(g.identity()), (Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}));
  EXPECT_EQ(std::get<Matrix>(g.identity()).str(), "[[1, 0], [0, 1]]");
}

TEST(Matrix, InverseAndDeterminant) {
  std::mt19937 rng(2);
  for (int k = 0; k < 40; ++k) {
    Matrix a(3, 3), b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = random_rational(rng);
        b(i, j) = random_rational(rng);
      }
    EXPECT_EQ((a * b).determinant(), a.determinant() * b.determinant());
    if (!a.determinant().is_zero()) {
      EXPECT_TRUE((a * a.inverse()).is_identity());
    }
  }
  Matrix t{{Scalar(1) - Scalar::t(), Scalar::t()}, {Scalar(1), Scalar(0)}};
  EXPECT_EQ(t.determinant(), -Scalar::t());
  EXPECT_TRUE((t.inverse() * t).is_identity());
  Matrix sing{{Scalar(1), Scalar::t()}, {Scalar(1), Scalar(1)}};
  EXPECT_THROW(sing.inverse(), domain_error);
}

TEST(Formal, ConvolutionWithSingleton) {
  auto g = GroupModel::free_abelian(1);
  Scalar a(3), c(Rational(-1, 2));
  FormalElement x = FormalElement::basis(g, z(1), a) + FormalElement::basis(g, z(0), c);
  FormalElement y = x * FormalElement::basis(g, z(-1));
  FormalElement expect = FormalElement::basis(g, z(0), a) + FormalElement::basis(g, z(-1), c);
  EXPECT_EQ(y, expect);
}

TEST(Formal, ProductMatchesLaurentRing) {
  std::mt19937 rng(9);
  for (int k = 0; k < 300; ++k) {
    FormalElement x = random_z_element(rng), y = random_z_element(rng);
    EXPECT_EQ(to_laurent(x * y), to_laurent(x) * to_laurent(y));
    EXPECT_EQ(to_laurent(x + y), to_laurent(x) + to_laurent(y));
  }
}

TEST(Formal, ProductMatchesPermutationMatrices) {
  std::mt19937 rng(13);
  auto s3 = GroupModel::symmetric(3);
  std::vector<Permutation> elems{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int k = 0; k < 100; ++k) {
    FormalElement x(s3), y(s3);
    for (int j = 0; j < 3; ++j) {
      x.add_term(elems[pick(rng)], random_rational(rng));
      y.add_term(elems[pick(rng)], random_rational(rng));
    }
    EXPECT_EQ(perm_matrix_image(x * y, 3), perm_matrix_image(x, 3) * perm_matrix_image(y, 3));
  }
}

TEST(Formal, SquareOfThreeTerms) {
  auto g = GroupModel::free_abelian(1);
  Scalar a(2), b(Rational(1, 3)), c(-5);
  AlgebraElement x = FormalElement::basis(g, z(1), a) + FormalElement::basis(g, z(-1), b) + FormalElement::basis(g, z(0), c);
  FormalElement sq = alg_pow(x, 2).formal();
  EXPECT_EQ(sq.coefficient(z(2)), a * a);
  EXPECT_EQ(sq.coefficient(z(1)), Scalar(2) * a * c);
  EXPECT_EQ(sq.coefficient(z(0)), Scalar(2) * a * b + c * c);
  EXPECT_EQ(sq.coefficient(z(-1)), Scalar(2) * b * c);
  EXPECT_EQ(sq.coefficient(z(-2)), b * b);
  EXPECT_EQ(sq.support_size(), 5u);
}

TEST(Formal, Identity) {
  auto g = GroupModel::free_abelian(1);
  EXPECT_TRUE(is_identity(FormalElement::basis(g, z(0))));
  EXPECT_FALSE(is_identity(FormalElement::basis(g, z(1))));
  EXPECT_TRUE(is_identity(Matrix::identity(2)));
  EXPECT_EQ(FormalElement(g).str(), "0");
}

TEST(Cyclic, Products) {
  AlgebraElement x = CyclicElement::monomial(2, Scalar(-2), 1);
  AlgebraElement sq = x * x;
  EXPECT_EQ(sq.as_scalar(), Scalar(-2));
  EXPECT_EQ(alg_pow(x, 4).as_scalar(), Scalar(4));
  EXPECT_EQ(CyclicElement::monomial(2, Scalar(-2), -1), Scalar(Rational(-1, 2)) * CyclicElement::monomial(2, Scalar(-2), 1));
  EXPECT_THROW(CyclicElement(2, Scalar(0)), domain_error);
}

TEST(Cyclic, IsomorphicToMatrixAlgebra) {
  std::mt19937 rng(21);
  for (int k = 0; k < 200; ++k) {
    CyclicElement x(2, Scalar(-2)), y(2, Scalar(-2));
    for (std::size_t j = 0; j < 2; ++j) {
      x[j] = random_rational(rng);
      y[j] = random_rational(rng);
    }
    EXPECT_EQ(cyclic_to_matrix(x * y), cyclic_to_matrix(x) * cyclic_to_matrix(y));
  }
}

TEST(Matrix, PhiOneTwoOneImage) {
  Matrix inv{{Scalar(0), Scalar(1)}, {Scalar(Rational(-1, 2)), Scalar(0)}};
  EXPECT_EQ(kM.inverse(), inv);
  AlgebraElement sum = alg_add(alg_add(AlgebraElement(kM), alg_scale(Scalar(2), inv)), Matrix::identity(2));
  EXPECT_TRUE(sum.is_identity());
}

TEST(AlgebraElement, PowZeroAndMismatch) {
  AlgebraElement m = kM;
  EXPECT_TRUE(alg_pow(m, 0).is_identity());
  AlgebraElement f = FormalElement::basis(GroupModel::trivial(), std::monostate{});
  EXPECT_THROW(m * f, backend_mismatch);
  EXPECT_THROW(m + f, backend_mismatch);
  EXPECT_THROW(AlgebraElement(Matrix::identity(3)) * m, domain_error);
}

TEST(Embed, Elements) {
  auto z1 = GroupModel::free_abelian(1);
  FormalBackend fb{z1};
  EXPECT_TRUE(embed(fb, z1, z1.identity()).is_identity());
  EXPECT_EQ(embed(fb, z1, z(3)).formal().coefficient(z(3)), Scalar(1));
  auto s2 = GroupModel::symmetric(2);
  AlgebraElement swap = embed(FormalBackend{s2}, s2, Permutation{1, 0});
  EXPECT_EQ(swap.formal().support_size(), 1u);
  EXPECT_TRUE((swap * swap).is_identity());
  EXPECT_EQ(embed(MatrixBackend{2}, s2, Permutation{1, 0}).matrix(), (Matrix{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}));
  EXPECT_THROW(embed(CyclicBackend{2, Scalar(1)}, s2, Permutation{1, 0}), backend_mismatch);
}
