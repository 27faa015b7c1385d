#include <gtest/gtest.h>

#include "ellsl2/deform.hpp"
#include "ellsl2/elliptic.hpp"
#include "ellsl2/errors.hpp"
#include "oracles.hpp"

using namespace ellsl2;

namespace {

SpinRep spin(const char* j) { return build_spin(HalfInteger::parse(j)); }

ComplexMatrix identity(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

}  // namespace

TEST(Deform, SpinHalfIsUndeformed) {
  const auto r = spin("1/2");
  for (double h : {0.0, 0.4, 2.0}) {
    for (double k : {0.0, 0.5, 1.0}) {
      const auto t = build_elliptic_triplet(r, {h, k});
      EXPECT_EQ(t.Xhat, r.Jp());
      EXPECT_EQ(t.Yhat, r.Jm());
      EXPECT_EQ(t.J0, r.J0());
      const auto rep = relation_residuals(t);
      for (const auto& e : rep.entries) EXPECT_EQ(e.value, 0.0) << e.name;
    }
  }
}

TEST(Deform, SpinOneClosedForm) {
  const auto r = spin("1");
  const double h = 0.9;
  const double k = 0.6;
  const auto t = build_elliptic_triplet(r, {h, k});
  EXPECT_LE(frobenius(t.Xhat - r.Jp()), 1e-15);
  const ComplexMatrix jp2 = r.Jp() * r.Jp();
  const ComplexMatrix y =
      r.Jm() - ((1.0 + k * k) / 4.0) * (h / 2.0) * (h / 2.0) * (jp2 * r.Jm() + r.Jm() * jp2);
  EXPECT_LE(frobenius(t.Yhat - y), 1e-14);
}

TEST(Deform, ClassicalLimit) {
  const auto r = spin("5/2");
  const auto t = build_elliptic_triplet(r, {0.0, 0.7});
  EXPECT_LE(frobenius(t.Xhat - r.Jp()), 1e-15);
  EXPECT_LE(frobenius(t.Yhat - r.Jm()), 1e-15);
  EXPECT_LE(frobenius(G_of(t) - t.Xhat), 1e-15);
}

TEST(Deform, BasisActionAtFiveHalves) {
  // Order-5 truncations with coefficients expanded by hand must already be
  // the full construction on the six-dimensional module.
  const auto s = oracle::spin_matrices(5);
  for (double h : {0.3, 0.9, 1.5}) {
    for (double k : {0.0, 0.4, 0.8, 1.0}) {
      const double k2 = k * k;
      const double w = h / 2.0;
      const ComplexMatrix p = s.Jp;
      const ComplexMatrix p2 = p * p;
      const ComplexMatrix p3 = p2 * p;
      const ComplexMatrix p4 = p2 * p2;
      const ComplexMatrix p5 = p4 * p;
      const ComplexMatrix x = p + w * w * (1.0 + k2) / 6.0 * p3 + std::pow(w, 4) * (9.0 + 6.0 * k2 + 9.0 * k2 * k2) / 120.0 * p5;
      const ComplexMatrix g = identity(6) - (1.0 + k2) / 4.0 * w * w * p2 +
                              oracle::quarter_root_u4(k2) * std::pow(w, 4) * p4;
      const auto t = build_elliptic_triplet(spin("5/2"), {h, k});
      EXPECT_LE(frobenius(t.Xhat - x), 1e-13) << h << " " << k;
      EXPECT_LE(frobenius(t.Yhat - g * s.Jm * g), 1e-13) << h << " " << k;
    }
  }
}

TEST(Deform, InvertMap) {
  const auto r = spin("1/2");
  const auto back = invert_map(build_elliptic_triplet(r, {0.7, 0.6}));
  EXPECT_EQ(back.Jp, r.Jp());
  EXPECT_EQ(back.Jm, r.Jm());
  const auto r2 = spin("2");
  const auto b2 = invert_map(build_elliptic_triplet(r2, {0.7, 0.6}));
  EXPECT_LE(frobenius(b2.Jp - r2.Jp()), 1e-11);
  EXPECT_LE(frobenius(b2.Jm - r2.Jm()), 1e-11);
  const auto bj = invert_map(build_jordanian_triplet(r2, 0.7));
  EXPECT_LE(frobenius(bj.Jp - r2.Jp()), 1e-11);
  EXPECT_LE(frobenius(bj.Jm - r2.Jm()), 1e-11);
}

TEST(Deform, DressingSquaresToCnDn) {
  const auto r = spin("5/2");
  const DeformParams p{0.9, 0.5};
  const auto t = build_elliptic_triplet(r, p);
  const ComplexMatrix g = mat_apply_series(deform_series::g_of_jp(p, t.order), r.Jp());
  const ComplexMatrix cd = mat_apply_series(deform_series::cndn_power_of_x(p, t.order, {1, 1}), t.Xhat);
  EXPECT_LE(frobenius(g * g - cd), 1e-12);
  const ComplexMatrix gx = mat_apply_series(deform_series::cndn_power_of_x(p, t.order, {1, 2}), t.Xhat);
  EXPECT_LE(frobenius(gx - g), 1e-12);
}

TEST(Deform, Jordanian) {
  const auto r = spin("1/2");
  const auto t = build_jordanian_triplet(r, 0.8);
  EXPECT_EQ(t.Xhat, r.Jp());
  EXPECT_EQ(t.Yhat, r.Jm());
  const auto t2 = build_jordanian_triplet(spin("2"), 0.9);
  const ComplexMatrix ch = mat_apply_series(ts_scale_argument(standard_series::cosh(t2.order), 0.9), t2.Xhat);
  EXPECT_LE(frobenius(commutator(t2.J0, t2.Yhat) + 0.5 * (ch * t2.Yhat + t2.Yhat * ch)), 1e-11);
  for (int tw = 1; tw <= 6; ++tw) {
    const auto rr = build_spin(HalfInteger::from_twice(tw));
    const auto a = build_jordanian_triplet(rr, 1.1);
    const auto b = build_elliptic_triplet(rr, {1.1, 1.0});
    EXPECT_LE(frobenius(a.Xhat - b.Xhat), 1e-12);
    EXPECT_LE(frobenius(a.Yhat - b.Yhat), 1e-12);
    const auto res = jordanian_relation_residuals(a.Xhat, a.Yhat, a.J0, 1.1, a.order);
    EXPECT_TRUE(res.passes(1e-11));
  }
}

TEST(Deform, Lift) {
  const auto r32 = spin("3/2");
  const auto uh = build_jordanian_triplet(r32, 0.8);
  const auto same = lift_uh_to_elliptic(uh, 1.0);
  EXPECT_LE(frobenius(same.Xhat - uh.Xhat), 1e-13);
  EXPECT_LE(frobenius(same.Yhat - uh.Yhat), 1e-13);
  const auto lifted = lift_uh_to_elliptic(uh, 0.5);
  const auto direct = build_elliptic_triplet(r32, {0.8, 0.5});
  EXPECT_EQ(lifted.provenance, Provenance::lifted_from_uh);
  EXPECT_LE(frobenius(lifted.Xhat - direct.Xhat), 1e-11);
  EXPECT_LE(frobenius(lifted.Yhat - direct.Yhat), 1e-11);
  const auto one = build_jordanian_triplet(spin("1"), 0.8);
  EXPECT_LE(frobenius(lift_uh_to_elliptic(one, 0.3).Xhat - one.Xhat), 1e-15);
  EXPECT_THROW(lift_uh_to_elliptic(direct, 0.5), DomainError);
}

TEST(Deform, GAndFAtUnitModulus) {
  const double h = 0.7;
  const auto t = build_elliptic_triplet(spin("2"), {h, 1.0});
  const ComplexMatrix sh = mat_apply_series(ts_dilate(standard_series::sinh(t.order), h), t.Xhat);
  const ComplexMatrix ch = mat_apply_series(ts_scale_argument(standard_series::cosh(t.order), h), t.Xhat);
  EXPECT_LE(frobenius(G_of(t) - sh), 1e-12);
  EXPECT_LE(frobenius(f_of(t) - ch), 1e-12);
}

TEST(Deform, FormsOfF) {
  for (int tw = 1; tw <= 5; ++tw) {
    const auto r = build_spin(HalfInteger::from_twice(tw));
    const DeformParams p{0.9, 0.6};
    const auto t = build_elliptic_triplet(r, p);
    const ComplexMatrix on_jp = mat_apply_series(deform_series::f_of_jp(p, t.order), r.Jp());
    const ComplexMatrix doubled = mat_apply_series(deform_series::f_of_x_double_argument(p, t.order), t.Xhat);
    EXPECT_LE(frobenius(on_jp - f_of(t)), 1e-12);
    EXPECT_LE(frobenius(doubled - f_of(t)), 1e-12);
  }
}

TEST(Deform, FIsDerivativeOfG) {
  for (double k : {0.0, 0.5, 1.0}) {
    const auto s = deform_series::sn_over_cndn(k, 12);
    const auto f = deform_series::f_unscaled(k, 11);
    EXPECT_LE(ts_max_abs_diff(ts_derive(s), f), 1e-13) << k;
  }
}

TEST(Deform, Casimir) {
  const auto one = build_elliptic_triplet(spin("1"), {0.5, 0.5});
  EXPECT_LE(frobenius(casimir(one, CasimirForm::classical) - 2.0 * identity(3)), 1e-13);
  const auto t = build_elliptic_triplet(spin("5/2"), {0.6, 0.4});
  EXPECT_LE(frobenius(casimir(t, CasimirForm::elliptic) - 8.75 * identity(6)), 1e-10);
  EXPECT_LE(frobenius(casimir(t, CasimirForm::jordanian) - 8.75 * identity(6)), 1e-10);
  const auto z = build_elliptic_triplet(spin("3/2"), {0.0, 0.4});
  EXPECT_LE(frobenius(casimir(z, CasimirForm::jordanian) - casimir(z, CasimirForm::classical)), 1e-14);
  EXPECT_EQ(parse_casimir_form("elliptic"), CasimirForm::elliptic);
  EXPECT_THROW(parse_casimir_form("quadratic"), DomainError);
}

TEST(Deform, RelationResiduals) {
  const auto t = build_elliptic_triplet(spin("3"), {1.1, 0.7});
  const auto rep = relation_residuals(t);
  for (const char* key : {"eq12", "eq13", "eq14", "jacobi_f_dG", "f_eq15_eq16", "f_eq15_eq17"}) {
    ASSERT_NE(rep.find(key), nullptr) << key;
  }
  EXPECT_TRUE(rep.passes(1e-10));
}

TEST(Deform, ComplexAndLargeModulus) {
  for (Complex k : {Complex(0.3, 0.2), Complex(1.5), Complex(0.0, 0.8)}) {
    const auto t = build_elliptic_triplet(spin("2"), {0.8, k});
    EXPECT_TRUE(relation_residuals(t).passes(1e-10)) << k;
  }
}

TEST(Deform, ExplicitOrderOverride) {
  const auto r = spin("2");
  const auto full = build_elliptic_triplet(r.gens, {0.8, 0.5}, 5);
  const auto longer = build_elliptic_triplet(r.gens, {0.8, 0.5}, 15);
  EXPECT_LE(frobenius(full.Xhat - longer.Xhat), 1e-14);
  const auto short_order = build_elliptic_triplet(r.gens, {0.8, 0.5}, 1);
  EXPECT_GT(frobenius(short_order.Xhat - full.Xhat), 1e-3);
}
