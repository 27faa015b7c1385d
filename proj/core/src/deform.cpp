#include "ellsl2/deform.hpp"

#include <algorithm>

#include "ellsl2/elliptic.hpp"
#include "ellsl2/errors.hpp"

namespace ellsl2 {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::direct_map: return "direct_map";
    case Provenance::jordanian: return "jordanian";
    case Provenance::lifted_from_uh: return "lifted_from_uh";
    case Provenance::automorphism_image: return "automorphism_image";
    case Provenance::coproduct: return "coproduct";
  }
  return "unknown";
}

double DeformedTriplet::scale() const {
  return std::max({1.0, frobenius(Xhat), frobenius(Yhat), frobenius(J0)});
}

std::size_t default_order(HalfInteger j) { return static_cast<std::size_t>(j.twice()) + 1; }

namespace deform_series {

namespace {

TruncatedSeries one_minus(const TruncatedSeries& s) {
  return TruncatedSeries::constant(1.0, s.order()) - s;
}

// w^2 and w^4 monomials as series of the given order.
TruncatedSeries monomial(std::size_t power, Complex c, std::size_t order) {
  TruncatedSeries s(order);
  if (power > order) return s;
  auto coeffs = s.coeffs();
  coeffs[power] = c;
  return TruncatedSeries(std::move(coeffs));
}

}  // namespace

TruncatedSeries x_of_jp(const DeformParams& p, std::size_t order) {
  return ts_dilate(asn_series(p.k, order), p.half_h());
}

TruncatedSeries g_of_jp(const DeformParams& p, std::size_t order) {
  const TruncatedSeries w2 = monomial(2, 1.0, order);
  const TruncatedSeries inside = one_minus(w2) * one_minus(p.ksq() * w2);
  return ts_scale_argument(ts_pow_rational(inside, {1, 4}), p.half_h());
}

TruncatedSeries jp_of_x(const DeformParams& p, std::size_t order) {
  return ts_dilate(sn_cn_dn_series(p.k, order).sn, p.half_h());
}

TruncatedSeries cndn_power_of_x(const DeformParams& p, std::size_t order, Fraction e) {
  const JacobiSeries js = sn_cn_dn_series(p.k, order);
  return ts_scale_argument(ts_pow_rational(js.cn * js.dn, e), p.half_h());
}

TruncatedSeries sn_over_cndn(Complex k, std::size_t order) {
  const JacobiSeries js = sn_cn_dn_series(k, order);
  return ts_divide(js.sn, js.cn * js.dn);
}

TruncatedSeries f_unscaled(Complex k, std::size_t order) {
  const JacobiSeries js = sn_cn_dn_series(k, order);
  const TruncatedSeries sn2 = js.sn * js.sn;
  const TruncatedSeries cndn = js.cn * js.dn;
  return ts_divide(one_minus((k * k) * (sn2 * sn2)), cndn * cndn);
}

TruncatedSeries G_of_x(const DeformParams& p, std::size_t order) {
  return ts_dilate(sn_over_cndn(p.k, order), p.half_h());
}

TruncatedSeries f_of_x(const DeformParams& p, std::size_t order) {
  return ts_scale_argument(f_unscaled(p.k, order), p.half_h());
}

TruncatedSeries f_of_x_double_argument(const DeformParams& p, std::size_t order) {
  // 2 S(v) / sn(2v) = (S(v)/v) / (sn(2v)/(2v)); both quotients start at 1.
  const std::size_t n = order + 1;
  const TruncatedSeries s_over_v = ts_divide_by_variable(sn_over_cndn(p.k, n));
  const TruncatedSeries sn2v = ts_scale_argument(sn_cn_dn_series(p.k, n).sn, 2.0);
  const TruncatedSeries sn2v_over_2v = 0.5 * ts_divide_by_variable(sn2v);
  return ts_scale_argument(ts_divide(s_over_v, sn2v_over_2v), p.half_h());
}

TruncatedSeries f_of_jp(const DeformParams& p, std::size_t order) {
  const TruncatedSeries w2 = monomial(2, 1.0, order);
  const TruncatedSeries num = one_minus(monomial(4, p.ksq(), order));
  const TruncatedSeries den = one_minus(w2) * one_minus(p.ksq() * w2);
  return ts_scale_argument(ts_divide(num, den), p.half_h());
}

}  // namespace deform_series

DeformedTriplet build_elliptic_triplet(const GeneratorTriple& classical, const DeformParams& p,
                                       std::size_t order) {
  DeformedTriplet t;
  t.params = p;
  t.order = order;
  t.provenance = Provenance::direct_map;
  t.Xhat = mat_apply_series(deform_series::x_of_jp(p, order), classical.Jp);
  const ComplexMatrix g = mat_apply_series(deform_series::g_of_jp(p, order), classical.Jp);
  t.Yhat = g * classical.Jm * g;
  t.J0 = classical.J0;
  return t;
}

DeformedTriplet build_elliptic_triplet(const SpinRep& rep, const DeformParams& p) {
  DeformedTriplet t = build_elliptic_triplet(rep.gens, p, default_order(rep.j));
  t.j = rep.j;
  return t;
}

GeneratorTriple invert_map(const DeformedTriplet& t) {
  const DeformParams& p = t.params;
  const ComplexMatrix g_inv =
      mat_apply_series(deform_series::cndn_power_of_x(p, t.order, {-1, 2}), t.Xhat);
  return {mat_apply_series(deform_series::jp_of_x(p, t.order), t.Xhat), g_inv * t.Yhat * g_inv, t.J0};
}

DeformedTriplet build_jordanian_triplet(const GeneratorTriple& classical, Complex h, std::size_t order) {
  DeformedTriplet t;
  t.params = {h, 1.0};
  t.order = order;
  t.provenance = Provenance::jordanian;
  const Complex half_h = 0.5 * h;
  t.Xhat = mat_apply_series(ts_dilate(standard_series::arctanh(order), half_h), classical.Jp);
  TruncatedSeries one_minus_w2 = TruncatedSeries::constant(1.0, order);
  if (order >= 2) {
    auto c = one_minus_w2.coeffs();
    c[2] = -1.0;
    one_minus_w2 = TruncatedSeries(std::move(c));
  }
  const ComplexMatrix s =
      mat_apply_series(ts_scale_argument(ts_pow_rational(one_minus_w2, {1, 2}), half_h), classical.Jp);
  t.Yhat = s * classical.Jm * s;
  t.J0 = classical.J0;
  return t;
}

DeformedTriplet build_jordanian_triplet(const SpinRep& rep, Complex h) {
  DeformedTriplet t = build_jordanian_triplet(rep.gens, h, default_order(rep.j));
  t.j = rep.j;
  return t;
}

DeformedTriplet lift_uh_to_elliptic(const DeformedTriplet& t_uh, Complex k) {
  if (t_uh.provenance != Provenance::jordanian && t_uh.provenance != Provenance::coproduct) {
    throw DomainError("lift_uh_to_elliptic: input triplet must have Jordanian provenance, got " +
                      to_string(t_uh.provenance));
  }
  if (std::abs(t_uh.params.ksq() - 1.0) > 1e-15) {
    throw DomainError("lift_uh_to_elliptic: input triplet must satisfy k^2 = 1");
  }
  const std::size_t n = t_uh.order;
  const DeformParams p{t_uh.params.h, k};
  const TruncatedSeries tanh = standard_series::tanh(n);
  const TruncatedSeries x_series = ts_compose(asn_series(k, n), tanh);

  const TruncatedSeries t2 = tanh * tanh;
  const TruncatedSeries one = TruncatedSeries::constant(1.0, n);
  const TruncatedSeries dressing = ts_pow_rational(ts_divide(one - p.ksq() * t2, one - t2), {1, 4});

  DeformedTriplet out;
  out.params = p;
  out.order = n;
  out.j = t_uh.j;
  out.provenance = Provenance::lifted_from_uh;
  out.Xhat = mat_apply_series(ts_dilate(x_series, p.half_h()), t_uh.Xhat);
  const ComplexMatrix q = mat_apply_series(ts_scale_argument(dressing, p.half_h()), t_uh.Xhat);
  out.Yhat = q * t_uh.Yhat * q;
  out.J0 = t_uh.J0;
  return out;
}

ComplexMatrix G_of(const DeformedTriplet& t) {
  return mat_apply_series(deform_series::G_of_x(t.params, t.order), t.Xhat);
}

ComplexMatrix f_of(const DeformedTriplet& t) {
  return mat_apply_series(deform_series::f_of_x(t.params, t.order), t.Xhat);
}

CasimirForm parse_casimir_form(const std::string& name) {
  if (name == "classical") return CasimirForm::classical;
  if (name == "jordanian") return CasimirForm::jordanian;
  if (name == "elliptic") return CasimirForm::elliptic;
  throw DomainError("unknown Casimir form '" + name + "' (expected classical|jordanian|elliptic)");
}

std::string to_string(CasimirForm f) {
  switch (f) {
    case CasimirForm::classical: return "classical";
    case CasimirForm::jordanian: return "jordanian";
    case CasimirForm::elliptic: return "elliptic";
  }
  return "unknown";
}

ComplexMatrix casimir(const DeformedTriplet& t, CasimirForm form) {
  const auto d = t.dim();
  const ComplexMatrix j0_part = t.J0 * (t.J0 + ComplexMatrix::Identity(d, d));
  const DeformParams& p = t.params;
  const std::size_t n = t.order;
  switch (form) {
    case CasimirForm::classical: {
      const GeneratorTriple c = invert_map(t);
      return c.Jm * c.Jp + j0_part;
    }
    case CasimirForm::jordanian: {
      // Jordanian pair from the elliptic one: (h/2) X = arctanh(sn((h/2) X^)),
      // Y = r Y^ r with r = ((1 - sn^2)/(1 - k^2 sn^2))^{1/4} at (h/2) X^.
      const JacobiSeries js = sn_cn_dn_series(p.k, n);
      const TruncatedSeries one = TruncatedSeries::constant(1.0, n);
      const TruncatedSeries sn2 = js.sn * js.sn;
      const TruncatedSeries r = ts_pow_rational(ts_divide(one - sn2, one - p.ksq() * sn2), {1, 4});
      const ComplexMatrix x =
          mat_apply_series(ts_dilate(ts_compose(standard_series::arctanh(n), js.sn), p.half_h()), t.Xhat);
      const ComplexMatrix rm = mat_apply_series(ts_scale_argument(r, p.half_h()), t.Xhat);
      const ComplexMatrix y = rm * t.Yhat * rm;
      const ComplexMatrix ch = mat_apply_series(ts_scale_argument(standard_series::cosh(n), p.half_h()), x);
      const ComplexMatrix sh = mat_apply_series(ts_dilate(standard_series::sinh(n), p.half_h()), x);
      return ch * y * sh + j0_part;
    }
    case CasimirForm::elliptic: {
      const ComplexMatrix g_inv = mat_apply_series(deform_series::cndn_power_of_x(p, n, {-1, 2}), t.Xhat);
      const ComplexMatrix sn = mat_apply_series(deform_series::jp_of_x(p, n), t.Xhat);
      return g_inv * t.Yhat * g_inv * sn + j0_part;
    }
  }
  throw DomainError("unknown Casimir form");
}

ResidualReport relation_residuals(const DeformedTriplet& t) {
  const double scale = t.scale();
  const DeformParams& p = t.params;
  const std::size_t n = t.order;
  const ComplexMatrix G = G_of(t);
  const ComplexMatrix f = f_of(t);

  ResidualReport r;
  r.add("eq12", frobenius(commutator(t.Xhat, t.Yhat) - 2.0 * t.J0), scale);
  r.add("eq13", frobenius(commutator(t.J0, t.Xhat) - G), scale);
  r.add("eq14", frobenius(commutator(t.J0, t.Yhat) + 0.5 * anticommutator(f, t.Yhat)), scale);

  const std::size_t check_order = std::max<std::size_t>(n, 1) + 1;
  r.add("jacobi_f_dG", ts_max_abs_diff(ts_derive(deform_series::sn_over_cndn(p.k, check_order)),
                                       deform_series::f_unscaled(p.k, check_order - 1)));

  const ComplexMatrix f16 = mat_apply_series(deform_series::f_of_x_double_argument(p, n), t.Xhat);
  r.add("f_eq15_eq16", frobenius(f - f16), scale);
  const GeneratorTriple c = invert_map(t);
  const ComplexMatrix f17 = mat_apply_series(deform_series::f_of_jp(p, n), c.Jp);
  r.add("f_eq15_eq17", frobenius(f - f17), scale);
  return r;
}

ResidualReport jordanian_relation_residuals(const ComplexMatrix& x, const ComplexMatrix& y,
                                            const ComplexMatrix& j0, Complex h, std::size_t order) {
  const double scale = std::max({1.0, frobenius(x), frobenius(y), frobenius(j0)});
  const ComplexMatrix sinh_over_h = mat_apply_series(ts_dilate(standard_series::sinh(order), h), x);
  const ComplexMatrix cosh_hx = mat_apply_series(ts_scale_argument(standard_series::cosh(order), h), x);
  ResidualReport r;
  r.add("eq22", frobenius(commutator(x, y) - 2.0 * j0), scale);
  r.add("eq23", frobenius(commutator(j0, x) - sinh_over_h), scale);
  r.add("eq24", frobenius(commutator(j0, y) + 0.5 * anticommutator(cosh_hx, y)), scale);
  return r;
}

}  // namespace ellsl2
