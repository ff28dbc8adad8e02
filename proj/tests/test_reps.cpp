#include <gtest/gtest.h>

#include <set>

#include "smbraid/reps.hpp"

using namespace smbraid;

namespace {

const Matrix kM{{Scalar(0), Scalar(-2)}, {Scalar(1), Scalar(0)}};

Word w(const char* text, int n) { return parse_word(text, n); }

}  // namespace

TEST(Burau, UnreducedTwo) {
  auto rep = burau_unreduced(2);
  Scalar t = Scalar::t();
  Matrix s1{{Scalar(1) - t, t}, {Scalar(1), Scalar(0)}};
  EXPECT_EQ(rep_eval(rep, w("s1", 2)).matrix(), s1);
  EXPECT_TRUE(rep_eval(rep, w("s1 S1", 2)).is_identity());
  EXPECT_EQ(rep.faithfulness().status, Faithfulness::known_faithful);
}

TEST(Burau, UnreducedEigenvalues) {
  // Roots 1 and -t of the characteristic polynomial make M - I and M + tI singular.
  Matrix m = rep_eval(burau_unreduced(2), w("s1", 2)).matrix();
  EXPECT_TRUE((m - Matrix::identity(2)).determinant().is_zero());
  EXPECT_TRUE((m + Matrix::scalar(2, Scalar::t())).determinant().is_zero());
  EXPECT_EQ(m.determinant(), -Scalar::t());
}

TEST(Burau, BraidRelations) {
  for (int n = 3; n <= 6; ++n) {
    auto rep = burau_unreduced(n);
    for (int i = 1; i + 1 < n; ++i) {
      Word lhs(n, {sigma(i), sigma(i + 1), sigma(i)});
      Word rhs(n, {sigma(i + 1), sigma(i), sigma(i + 1)});
      EXPECT_EQ(rep_eval(rep, lhs), rep_eval(rep, rhs));
    }
  }
  auto red = burau_reduced(3);
  EXPECT_EQ(rep_eval(red, w("s1 s2 s1", 3)), rep_eval(red, w("s2 s1 s2", 3)));
  EXPECT_FALSE(rep_eval(red, w("s1", 3)).matrix().as_scalar().has_value());
}

TEST(Burau, Metadata) {
  EXPECT_EQ(burau_unreduced(4).faithfulness().status, Faithfulness::unknown);
  EXPECT_EQ(burau_unreduced(5).faithfulness().status, Faithfulness::known_unfaithful);
  EXPECT_THROW(burau_reduced(4), domain_error);
}

TEST(Burau, ReducedTwoIsScalar) {
  auto rep = burau_reduced(2);
  EXPECT_EQ(rep_eval(rep, w("s1 s1 s1", 2)).as_scalar(), -pow(Scalar::t(), 3));
  auto ch = scalar_char(-Scalar::t(), 2);
  EXPECT_EQ(rep_eval(ch, w("s1 s1 S1 s1", 2)), rep_eval(rep, w("s1 s1 S1 s1", 2)));
}

TEST(Permutation, Rep) {
  auto rep = permutation_rep(3);
  EXPECT_TRUE(rep_eval(rep, w("s1 s1", 3)).is_identity());
  EXPECT_FALSE(w("s1 s1", 3).empty());
  EXPECT_EQ(rep_eval(rep, w("s1 s2 s1", 3)), rep_eval(rep, w("s2 s1 s2", 3)));
  ASSERT_TRUE(rep.faithfulness().witness.has_value());
  EXPECT_EQ(*rep.faithfulness().witness, w("s1 s1", 3));
}

TEST(ScalarChar, Faithfulness) {
  auto two = scalar_char(Scalar(2), 2);
  EXPECT_EQ(two.faithfulness().status, Faithfulness::known_faithful);
  std::set<std::string> seen;
  for (long k = -8; k <= 8; ++k) seen.insert(rep_eval(two, sigma_power(2, 1, k)).str());
  EXPECT_EQ(seen.size(), 17u);

  auto minus = scalar_char(Scalar(-1), 2);
  EXPECT_EQ(minus.faithfulness().status, Faithfulness::known_unfaithful);
  EXPECT_TRUE(rep_eval(minus, w("s1 s1", 2)).is_identity());
  EXPECT_EQ(scalar_char(Scalar(2), 3).faithfulness().status, Faithfulness::known_unfaithful);
  EXPECT_THROW(scalar_char(Scalar(0), 2), domain_error);
}

TEST(RepEval, Basics) {
  EXPECT_TRUE(rep_eval(burau_unreduced(3), Word(3)).is_identity());
  EXPECT_EQ(rep_eval(scalar_char(Scalar(2), 2), sigma_power(2, 1, -3)).as_scalar(), Scalar(Rational(1, 8)));
  EXPECT_THROW(rep_eval(burau_unreduced(3), w("t1", 3)), domain_error);
  EXPECT_THROW(rep_eval(burau_unreduced(3), w("s1", 2)), domain_error);
}

TEST(MatrixRep, FromImages) {
  auto rep = matrix_rep_from_images(2, {kM});
  EXPECT_EQ(rep_eval(rep, w("s1 s1", 2)).as_scalar(), Scalar(-2));
  std::set<std::string> seen;
  for (long k = 0; k <= 8; ++k) seen.insert(rep_eval(rep, sigma_power(2, 1, k)).str());
  EXPECT_EQ(seen.size(), 9u);

  Matrix a{{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}};
  Matrix b{{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(1)}};
  EXPECT_THROW(matrix_rep_from_images(3, {a, b}), domain_error);
  EXPECT_THROW(matrix_rep_from_images(2, {Matrix{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}}}), domain_error);
  EXPECT_THROW(matrix_rep_from_images(3, {kM}), domain_error);
}

TEST(Realize, Backends) {
  auto perm = permutation_rep(3);
  auto in_matrix = realize(perm, MatrixBackend{3});
  auto in_formal = realize(perm);
  Word x = w("s1 s2 S1 s2", 3);
  Matrix via_formal(3, 3);
  const auto fe = rep_eval(in_formal, x).formal();
  for (const auto& [k, term] : fe.terms()) via_formal = via_formal + term.coeff * perm.group().as_matrix(term.element);
  EXPECT_EQ(rep_eval(in_matrix, x).matrix(), via_formal);
  EXPECT_THROW(realize(perm, MatrixBackend{2}), backend_mismatch);

  auto m = matrix_rep_from_images(2, {kM});
  auto cyc = realize(m, CyclicBackend{2, Scalar(-2)});
  EXPECT_EQ(rep_eval(cyc, w("s1 s1 s1 s1", 2)).as_scalar(), Scalar(4));
  EXPECT_THROW(realize(m, CyclicBackend{2, Scalar(2)}), domain_error);
  EXPECT_THROW(realize(m, CyclicBackend{3, Scalar(-2)}), domain_error);
}

TEST(RootOfUnity, Orders) {
  EXPECT_EQ(root_of_unity_order(Scalar(-1), 8), 2);
  EXPECT_EQ(root_of_unity_order(Scalar(1), 8), 1);
  EXPECT_FALSE(root_of_unity_order(Scalar(2), 8).has_value());
  EXPECT_FALSE(root_of_unity_order(-Scalar::t(), 8).has_value());
  EXPECT_FALSE(root_of_unity_order(Scalar(-1), 1).has_value());
}
