#include <gtest/gtest.h>

#include <random>

#include "ellsl2/elliptic.hpp"
#include "ellsl2/errors.hpp"
#include "ellsl2/liealg.hpp"
#include "oracles.hpp"

using namespace ellsl2;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> g;
  ComplexMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = {g(rng), g(rng)};
  }
  return m;
}

}  // namespace

TEST(HalfInteger, Parsing) {
  EXPECT_EQ(HalfInteger::parse("5/2").twice(), 5);
  EXPECT_EQ(HalfInteger::parse("2.5").twice(), 5);
  EXPECT_EQ(HalfInteger::parse("3").twice(), 6);
  EXPECT_EQ(HalfInteger::parse("0").twice(), 0);
  EXPECT_EQ(HalfInteger::parse("1/2").str(), "1/2");
  EXPECT_EQ(HalfInteger::parse("2").str(), "2");
  for (const char* bad : {"-1/2", "1/3", "0.3", "abc", "", "-1"}) {
    EXPECT_THROW(HalfInteger::parse(bad), DomainError) << bad;
  }
  EXPECT_THROW(HalfInteger::from_double(0.75), DomainError);
}

TEST(Spin, HalfAndOne) {
  const auto r = build_spin(HalfInteger::parse("1/2"));
  ComplexMatrix jp(2, 2);
  jp << 0, 1, 0, 0;
  EXPECT_EQ(r.Jp(), jp);
  EXPECT_EQ(r.J0()(0, 0), Complex(0.5));
  EXPECT_EQ(r.J0()(1, 1), Complex(-0.5));
  const auto one = build_spin(HalfInteger::parse("1"));
  EXPECT_NEAR(ladder_coefficient(one.j, 0.0), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(ladder_coefficient(one.j, -1.0), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(one.Jp()(0, 1) - std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(Spin, NilpotencyAndRelations) {
  const auto r = build_spin(HalfInteger::parse("5/2"));
  EXPECT_EQ(r.dim(), 6);
  EXPECT_EQ(nilpotency_index(r.Jp()), 6);
  for (int tw = 0; tw <= 8; ++tw) {
    const auto s = build_spin(HalfInteger::from_twice(tw));
    const auto ref = oracle::spin_matrices(tw);
    EXPECT_LE(frobenius(s.Jp() - ref.Jp), 1e-14);
    EXPECT_LE(frobenius(s.Jm() - ref.Jm), 1e-14);
    EXPECT_LE(frobenius(commutator(s.Jp(), s.Jm()) - 2.0 * s.J0()), 1e-13);
    EXPECT_LE(frobenius(commutator(s.J0(), s.Jp()) - s.Jp()), 1e-13);
    EXPECT_LE(frobenius(commutator(s.J0(), s.Jm()) + s.Jm()), 1e-13);
    const double c = s.j.value() * (s.j.value() + 1.0);
    const ComplexMatrix cas = s.Jm() * s.Jp() + s.J0() * (s.J0() + ComplexMatrix::Identity(s.dim(), s.dim()));
    EXPECT_LE(frobenius(cas - c * ComplexMatrix::Identity(s.dim(), s.dim())), 1e-12);
  }
}

TEST(Matrix, DimensionMismatch) {
  EXPECT_THROW(commutator(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3)), DomainError);
  EXPECT_THROW(anticommutator(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3)), DomainError);
}

TEST(Matrix, ApplySeries) {
  std::mt19937_64 rng(2);
  const ComplexMatrix m = random_matrix(rng, 4, 4);
  EXPECT_LE(frobenius(mat_apply_series(TruncatedSeries::variable(6), m) - m), 1e-15);

  ComplexMatrix n = random_matrix(rng, 5, 5).triangularView<Eigen::StrictlyUpper>();
  ComplexMatrix expected = ComplexMatrix::Identity(5, 5);
  ComplexMatrix term = ComplexMatrix::Identity(5, 5);
  for (int i = 1; i < 5; ++i) {
    term = term * n / static_cast<double>(i);
    expected += term;
  }
  EXPECT_LE(frobenius(mat_apply_series(standard_series::exp(4), n) - expected), 1e-13);
  EXPECT_LE(frobenius(mat_apply_series(standard_series::exp(12), n) - expected), 1e-13);

  const auto one = build_spin(HalfInteger::parse("1"));
  const double h = 0.8;
  const ComplexMatrix x = mat_apply_series(asn_series(0.5, 3), (h / 2.0) * one.Jp());
  EXPECT_LE(frobenius(x - (h / 2.0) * one.Jp()), 1e-15);
}

TEST(Matrix, KronMixedProduct) {
  std::mt19937_64 rng(9);
  const auto a = random_matrix(rng, 2, 3);
  const auto b = random_matrix(rng, 3, 2);
  const auto c = random_matrix(rng, 3, 2);
  const auto d = random_matrix(rng, 2, 4);
  EXPECT_LE(frobenius(kron(a, b) * kron(c, d) - kron(a * c, b * d)), 1e-12);
}

TEST(Matrix, TensorSwap) {
  std::mt19937_64 rng(4);
  const auto a = random_matrix(rng, 2, 2);
  const auto b = random_matrix(rng, 3, 3);
  const ComplexMatrix p = tensor_swap(2, 3);
  EXPECT_LE(frobenius(p * kron(a, b) * p.transpose() - kron(b, a)), 1e-13);
}

TEST(Matrix, ClassicalCoproduct) {
  const auto h = build_spin(HalfInteger::parse("1/2"));
  const auto d = coproduct_classical(h, h);
  ComplexMatrix want = ComplexMatrix::Zero(4, 4);
  want.diagonal() << 1.0, 0.0, 0.0, -1.0;
  EXPECT_LE(frobenius(d.J0 - want), 1e-15);
  const auto e = coproduct_classical(h, build_spin(HalfInteger::parse("3/2")));
  EXPECT_LE(frobenius(commutator(e.Jp, e.Jm) - 2.0 * e.J0), 1e-13);
  EXPECT_LE(frobenius(commutator(e.J0, e.Jp) - e.Jp), 1e-13);
  EXPECT_EQ(nilpotency_index(e.Jp), 5);
}
