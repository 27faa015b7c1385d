#include "ellsl2/hopf.hpp"

#include <algorithm>

#include "ellsl2/elliptic.hpp"
#include "ellsl2/errors.hpp"

namespace ellsl2 {

std::string to_string(CoproductSource s) {
  switch (s) {
    case CoproductSource::delta1: return "delta1";
    case CoproductSource::delta_uh: return "delta_uh";
    case CoproductSource::delta2: return "delta2";
  }
  return "unknown";
}

CoproductSource parse_coproduct_source(const std::string& s) {
  if (s == "1" || s == "delta1") return CoproductSource::delta1;
  if (s == "uh" || s == "delta_uh") return CoproductSource::delta_uh;
  if (s == "2" || s == "delta2") return CoproductSource::delta2;
  throw DomainError("unknown coproduct '" + s + "' (expected 1|uh|2)");
}

std::size_t tensor_order(HalfInteger j1, HalfInteger j2) {
  return static_cast<std::size_t>(j1.twice() + j2.twice()) + 1;
}

CoproductTriple delta1(const DeformParams& p, const SpinRep& r1, const SpinRep& r2) {
  CoproductTriple ct;
  ct.source = CoproductSource::delta1;
  ct.j1 = r1.j;
  ct.j2 = r2.j;
  ct.triple = build_elliptic_triplet(coproduct_classical(r1, r2), p, tensor_order(r1.j, r2.j));
  ct.triple.provenance = Provenance::coproduct;
  return ct;
}

DeformedTriplet uh_coproduct(const DeformedTriplet& a, const DeformedTriplet& b) {
  const Complex h = a.params.h;
  const ComplexMatrix ia = ComplexMatrix::Identity(a.dim(), a.dim());
  const ComplexMatrix ib = ComplexMatrix::Identity(b.dim(), b.dim());
  const ComplexMatrix exp_b =
      mat_apply_series(ts_scale_argument(standard_series::exp(b.order), h), b.Xhat);
  const ComplexMatrix exp_minus_a =
      mat_apply_series(ts_scale_argument(standard_series::exp(a.order), -h), a.Xhat);

  DeformedTriplet out;
  out.params = {h, 1.0};
  out.order = a.order + b.order - 1;
  out.provenance = Provenance::coproduct;
  out.Xhat = kron(a.Xhat, ib) + kron(ia, b.Xhat);
  out.Yhat = kron(a.Yhat, exp_b) + kron(exp_minus_a, b.Yhat);
  out.J0 = kron(a.J0, exp_b) + kron(exp_minus_a, b.J0);
  return out;
}

CoproductTriple delta_uh(Complex h, const SpinRep& r1, const SpinRep& r2) {
  CoproductTriple ct;
  ct.source = CoproductSource::delta_uh;
  ct.j1 = r1.j;
  ct.j2 = r2.j;
  ct.triple = uh_coproduct(build_jordanian_triplet(r1, h), build_jordanian_triplet(r2, h));
  return ct;
}

CoproductTriple delta2(const DeformParams& p, const SpinRep& r1, const SpinRep& r2) {
  CoproductTriple ct = delta_uh(p.h, r1, r2);
  ct.source = CoproductSource::delta2;
  const ComplexMatrix dj0 = ct.triple.J0;
  ct.triple = lift_uh_to_elliptic(ct.triple, p.k);
  ct.triple.provenance = Provenance::coproduct;
  ct.triple.J0 = dj0;
  return ct;
}

namespace {

CoproductTriple rebuild(const CoproductTriple& ct, const SpinRep& r1, const SpinRep& r2) {
  switch (ct.source) {
    case CoproductSource::delta1: return delta1(ct.triple.params, r1, r2);
    case CoproductSource::delta_uh: return delta_uh(ct.triple.params.h, r1, r2);
    case CoproductSource::delta2: return delta2(ct.triple.params, r1, r2);
  }
  throw DomainError("unknown coproduct source");
}

}  // namespace

double cocommutativity_gap(const CoproductTriple& ct) {
  const SpinRep r1 = build_spin(ct.j1);
  const SpinRep r2 = build_spin(ct.j2);
  const CoproductTriple op = rebuild(ct, r2, r1);
  const auto d1 = static_cast<Eigen::Index>(r1.dim());
  const auto d2 = static_cast<Eigen::Index>(r2.dim());
  // tau(Delta x) on V1 (x) V2 is P^T (Delta^{21} x) P with P: V1 (x) V2 -> V2 (x) V1.
  const ComplexMatrix p = tensor_swap(d1, d2);
  auto flipped = [&](const ComplexMatrix& m) -> ComplexMatrix { return p.transpose() * m * p; };
  return std::max({frobenius(ct.DX() - flipped(op.DX())), frobenius(ct.DY() - flipped(op.DY())),
                   frobenius(ct.DJ0() - flipped(op.DJ0()))});
}

ResidualReport verify_coproduct(const CoproductTriple& ct) {
  ResidualReport r;
  if (ct.source == CoproductSource::delta_uh) {
    r = jordanian_relation_residuals(ct.DX(), ct.DY(), ct.DJ0(), ct.triple.params.h, ct.triple.order);
  } else {
    const ResidualReport full = relation_residuals(ct.triple);
    for (const auto& e : full.entries) {
      if (e.name == "eq12" || e.name == "eq13" || e.name == "eq14") r.entries.push_back(e);
    }
  }
  r.add_info("cocommutativity_gap", cocommutativity_gap(ct));
  return r;
}

ComplexMatrix delta1_x_from_factors(const DeformParams& p, const SpinRep& r1, const SpinRep& r2) {
  const DeformedTriplet t1 = build_elliptic_triplet(r1, p);
  const DeformedTriplet t2 = build_elliptic_triplet(r2, p);
  const ComplexMatrix s1 = mat_apply_series(deform_series::jp_of_x(p, t1.order), t1.Xhat);
  const ComplexMatrix s2 = mat_apply_series(deform_series::jp_of_x(p, t2.order), t2.Xhat);
  const ComplexMatrix sum = kron(s1, ComplexMatrix::Identity(t2.dim(), t2.dim())) +
                            kron(ComplexMatrix::Identity(t1.dim(), t1.dim()), s2);
  return mat_apply_series(deform_series::x_of_jp(p, tensor_order(r1.j, r2.j)), sum);
}

ComplexMatrix delta2_x_nested(const DeformParams& p, const SpinRep& r1, const SpinRep& r2) {
  if (p.h == Complex{}) throw DomainError("delta2_x_nested: requires h != 0");
  auto primitive_part = [&p](const DeformedTriplet& t) {
    const TruncatedSeries sn = sn_cn_dn_series(p.k, t.order).sn;
    const TruncatedSeries atanh_sn = ts_compose(standard_series::arctanh(t.order), sn);
    return mat_apply_series(ts_dilate(atanh_sn, p.half_h()), t.Xhat);
  };
  const DeformedTriplet t1 = build_elliptic_triplet(r1, p);
  const DeformedTriplet t2 = build_elliptic_triplet(r2, p);
  const ComplexMatrix q = kron(primitive_part(t1), ComplexMatrix::Identity(t2.dim(), t2.dim())) +
                          kron(ComplexMatrix::Identity(t1.dim(), t1.dim()), primitive_part(t2));
  const std::size_t n = tensor_order(r1.j, r2.j);
  const ComplexMatrix tanh_q = mat_apply_series(ts_scale_argument(standard_series::tanh(n), p.half_h()), q);
  return (2.0 / p.h) * mat_apply_series(asn_series(p.k, n), tanh_q);
}

ResidualReport uh_coassociativity(Complex h, const SpinRep& r1, const SpinRep& r2, const SpinRep& r3) {
  const DeformedTriplet a = build_jordanian_triplet(r1, h);
  const DeformedTriplet b = build_jordanian_triplet(r2, h);
  const DeformedTriplet c = build_jordanian_triplet(r3, h);
  const DeformedTriplet left = uh_coproduct(uh_coproduct(a, b), c);
  const DeformedTriplet right = uh_coproduct(a, uh_coproduct(b, c));
  const double scale = std::max(left.scale(), right.scale());
  ResidualReport r;
  r.add("coassoc_X", frobenius(left.Xhat - right.Xhat), scale);
  r.add("coassoc_Y", frobenius(left.Yhat - right.Yhat), scale);
  r.add("coassoc_J0", frobenius(left.J0 - right.J0), scale);
  return r;
}

}  // namespace ellsl2
