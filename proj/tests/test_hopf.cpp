#include <gtest/gtest.h>

#include "ellsl2/errors.hpp"
#include "ellsl2/hopf.hpp"

using namespace ellsl2;

namespace {

SpinRep spin(const char* j) { return build_spin(HalfInteger::parse(j)); }

}  // namespace

TEST(Hopf, TensorOrder) {
  EXPECT_EQ(tensor_order(HalfInteger::parse("1/2"), HalfInteger::parse("1")), 4u);
  EXPECT_EQ(tensor_order(HalfInteger::parse("1/2"), HalfInteger::parse("1/2")), 3u);
}

TEST(Hopf, Delta1OnTwoSpinHalves) {
  const auto h = spin("1/2");
  const auto ct = delta1({0.8, 0.5}, h, h);
  const auto classical = coproduct_classical(h, h);
  EXPECT_LE(frobenius(ct.DX() - classical.Jp), 1e-15);
  const auto rep = verify_coproduct(ct);
  EXPECT_TRUE(rep.passes(1e-12));
  EXPECT_LE(cocommutativity_gap(ct), 1e-13);
  EXPECT_LE(frobenius(delta1_x_from_factors({0.8, 0.5}, h, h) - ct.DX()), 1e-11);
}

TEST(Hopf, Delta1RelationsOnHalfTimesOne) {
  const auto ct = delta1({0.8, 0.5}, spin("1/2"), spin("1"));
  EXPECT_TRUE(verify_coproduct(ct).passes(1e-11));
  EXPECT_LE(frobenius(delta1_x_from_factors({0.8, 0.5}, spin("1/2"), spin("1")) - ct.DX()), 1e-11);
}

TEST(Hopf, DeltaUh) {
  const auto h = spin("1/2");
  const auto zero = delta_uh(0.0, h, spin("1"));
  const auto classical = coproduct_classical(h, spin("1"));
  EXPECT_LE(frobenius(zero.DX() - classical.Jp), 1e-15);
  EXPECT_LE(frobenius(zero.DY() - classical.Jm), 1e-15);
  EXPECT_LE(frobenius(zero.DJ0() - classical.J0), 1e-15);

  const auto ct = delta_uh(0.8, h, h);
  EXPECT_LE(frobenius(commutator(ct.DX(), ct.DY()) - 2.0 * ct.DJ0()), 1e-12);
  EXPECT_TRUE(verify_coproduct(ct).passes(1e-11));
  const auto a = uh_coassociativity(0.8, h, h, h);
  EXPECT_TRUE(a.passes(1e-12));
  EXPECT_NE(a.find("coassoc_Y"), nullptr);
  EXPECT_TRUE(uh_coassociativity(0.8, h, h, spin("1")).passes(1e-11));
}

TEST(Hopf, Delta2) {
  const auto h = spin("1/2");
  const auto one = spin("1");
  const auto at_one = delta2({0.7, 1.0}, h, one);
  const auto uh = delta_uh(0.7, h, one);
  EXPECT_LE(frobenius(at_one.DX() - uh.DX()), 1e-12);
  EXPECT_LE(frobenius(at_one.DY() - uh.DY()), 1e-12);
  EXPECT_LE(frobenius(at_one.DJ0() - uh.DJ0()), 1e-12);

  EXPECT_TRUE(verify_coproduct(delta2({0.7, 0.5}, h, one)).passes(1e-10));
  const auto ct = delta2({0.8, 0.5}, h, h);
  EXPECT_TRUE(verify_coproduct(ct).passes(1e-11));
  EXPECT_GT(cocommutativity_gap(ct), 0.1);
  EXPECT_LE(frobenius(delta2_x_nested({0.8, 0.5}, h, h) - ct.DX()), 1e-10);
  EXPECT_THROW(delta2_x_nested({0.0, 0.5}, h, h), DomainError);
}

TEST(Hopf, UnitModulusDelta1IsArctanhTransport) {
  const auto a = spin("1");
  const auto b = spin("1/2");
  const auto ct = delta1({0.9, 1.0}, a, b);
  const auto classical = coproduct_classical(a, b);
  const auto t = build_jordanian_triplet(classical, 0.9, tensor_order(a.j, b.j));
  EXPECT_LE(frobenius(ct.DX() - t.Xhat), 1e-11);
  EXPECT_LE(frobenius(ct.DY() - t.Yhat), 1e-11);
}

TEST(Hopf, GridOfTensorProducts) {
  for (auto [j1, j2] : {std::pair{"1/2", "1/2"}, std::pair{"1/2", "1"}, std::pair{"1", "1"}}) {
    for (double hv : {0.4, 1.2}) {
      for (double kv : {0.0, 0.5, 1.0}) {
        const DeformParams p{hv, kv};
        EXPECT_TRUE(verify_coproduct(delta1(p, spin(j1), spin(j2))).passes(1e-10));
        EXPECT_TRUE(verify_coproduct(delta2(p, spin(j1), spin(j2))).passes(1e-10));
        EXPECT_LE(frobenius(delta1_x_from_factors(p, spin(j1), spin(j2)) - delta1(p, spin(j1), spin(j2)).DX()),
                  1e-10);
        EXPECT_LE(frobenius(delta2_x_nested(p, spin(j1), spin(j2)) - delta2(p, spin(j1), spin(j2)).DX()), 1e-10);
      }
      EXPECT_TRUE(verify_coproduct(delta_uh(hv, spin(j1), spin(j2))).passes(1e-10));
    }
  }
}

TEST(Hopf, SourceNames) {
  EXPECT_EQ(parse_coproduct_source("1"), CoproductSource::delta1);
  EXPECT_EQ(parse_coproduct_source("uh"), CoproductSource::delta_uh);
  EXPECT_EQ(parse_coproduct_source("2"), CoproductSource::delta2);
  EXPECT_EQ(parse_coproduct_source(to_string(CoproductSource::delta2)), CoproductSource::delta2);
  EXPECT_THROW(parse_coproduct_source("3"), DomainError);
}
