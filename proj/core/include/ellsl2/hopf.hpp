#pragma once

#include <string>

#include "ellsl2/deform.hpp"
#include "ellsl2/liealg.hpp"
#include "ellsl2/report.hpp"

namespace ellsl2 {

enum class CoproductSource { delta1, delta_uh, delta2 };

std::string to_string(CoproductSource s);
// Accepts "1", "uh", "2" (and the long names).
CoproductSource parse_coproduct_source(const std::string& s);

// Coproduct images (Delta X^, Delta Y^, Delta J0) realized as matrices on
// V_{j1} (x) V_{j2}. For delta_uh the triple holds (Delta X, Delta Y, Delta J0)
// with k = 1.
struct CoproductTriple {
  DeformedTriplet triple;
  CoproductSource source = CoproductSource::delta1;
  HalfInteger j1;
  HalfInteger j2;

  const ComplexMatrix& DX() const { return triple.Xhat; }
  const ComplexMatrix& DY() const { return triple.Yhat; }
  const ComplexMatrix& DJ0() const { return triple.J0; }
};

// 2(j1 + j2) + 1, the nilpotency index of Delta J+.
std::size_t tensor_order(HalfInteger j1, HalfInteger j2);

// Deformation map applied to the primitive Delta J_i.
CoproductTriple delta1(const DeformParams& p, const SpinRep& r1, const SpinRep& r2);

// Jordanian coproduct: Delta X primitive, Delta Y = Y (x) e^{hX} + e^{-hX} (x) Y,
// Delta J0 = J0 (x) e^{hX} + e^{-hX} (x) J0.
CoproductTriple delta_uh(Complex h, const SpinRep& r1, const SpinRep& r2);

// delta_uh transported through the lift (h/2) X^ = sn^{-1}(tanh((h/2) X), k).
CoproductTriple delta2(const DeformParams& p, const SpinRep& r1, const SpinRep& r2);

// Jordanian coproduct of two Jordanian-type triplets (either may itself live
// on a tensor product); used for the coassociativity check.
DeformedTriplet uh_coproduct(const DeformedTriplet& a, const DeformedTriplet& b);

// Relation residuals of the source algebra on the tensor space plus the
// informational cocommutativity gap max_i ||Delta x_i - tau(Delta x_i)||_F.
ResidualReport verify_coproduct(const CoproductTriple& ct);

double cocommutativity_gap(const CoproductTriple& ct);

// (2/h) sn^{-1}(sn((h/2) X^) (x) 1 + 1 (x) sn((h/2) X^)), built from the
// single-factor elliptic triplets.
ComplexMatrix delta1_x_from_factors(const DeformParams& p, const SpinRep& r1, const SpinRep& r2);

// (2/h) sn^{-1}(tanh(arctanh sn((h/2) X^) (x) 1 + 1 (x) arctanh sn((h/2) X^))), with
// each function applied separately. Requires h != 0.
ComplexMatrix delta2_x_nested(const DeformParams& p, const SpinRep& r1, const SpinRep& r2);

// (Delta (x) id) Delta vs (id (x) Delta) Delta for the Jordanian coproduct on
// V1 (x) V2 (x) V3, per generator (keys coassoc_X, coassoc_Y, coassoc_J0).
ResidualReport uh_coassociativity(Complex h, const SpinRep& r1, const SpinRep& r2, const SpinRep& r3);

}  // namespace ellsl2
