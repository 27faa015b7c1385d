#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ellsl2/liealg.hpp"
#include "ellsl2/report.hpp"
#include "ellsl2/series.hpp"

namespace ellsl2 {

// Deformation scale h and elliptic modulus k. Every map of the form
// (2/h) F((h/2) M) with F odd is realized through ts_dilate, so h = 0 is a
// regular point rather than a division.
struct DeformParams {
  Complex h{0.0, 0.0};
  Complex k{0.0, 0.0};

  Complex ksq() const { return k * k; }
  Complex half_h() const { return 0.5 * h; }
};

enum class Provenance { direct_map, jordanian, lifted_from_uh, automorphism_image, coproduct };

std::string to_string(Provenance p);

// (X^, Y^, J0) on a finite-dimensional module. For the Jordanian triplet
// (X, Y, J0) the modulus is stored as k = 1.
struct DeformedTriplet {
  ComplexMatrix Xhat;
  ComplexMatrix Yhat;
  ComplexMatrix J0;
  DeformParams params;
  // Series order used by every matrix function on this module.
  std::size_t order = 0;
  std::optional<HalfInteger> j;
  Provenance provenance = Provenance::direct_map;

  Eigen::Index dim() const { return J0.rows(); }
  double scale() const;
};

// 2j + 1, the nilpotency index of J+ on the spin-j module.
std::size_t default_order(HalfInteger j);

// Series (in the variable named in each comment) whose matrix evaluation
// realizes the maps of the construction.
namespace deform_series {

// X^ = (2/h) sn^{-1}((h/2) J+, k), as a series in J+.
TruncatedSeries x_of_jp(const DeformParams& p, std::size_t order);
// g(J+) = ((1 - (h/2)^2 J+^2)(1 - k^2 (h/2)^2 J+^2))^{1/4}, in J+.
TruncatedSeries g_of_jp(const DeformParams& p, std::size_t order);
// J+ = (2/h) sn((h/2) X^, k), in X^.
TruncatedSeries jp_of_x(const DeformParams& p, std::size_t order);
// g(X^) = (cn dn)^{1/2} at (h/2) X^; pass {-1, 2} for its inverse.
TruncatedSeries cndn_power_of_x(const DeformParams& p, std::size_t order, Fraction e);
// G(X^) = (2/h) sn/(cn dn) at (h/2) X^.
TruncatedSeries G_of_x(const DeformParams& p, std::size_t order);
// f(X^) = (1 - k^2 sn^4) / (cn dn)^2 at (h/2) X^.
TruncatedSeries f_of_x(const DeformParams& p, std::size_t order);
// f(X^) = (2 / sn(h X^)) sn/(cn dn) at (h/2) X^ (double-argument form).
TruncatedSeries f_of_x_double_argument(const DeformParams& p, std::size_t order);
// f expressed through J+: (1 - k^2 w^4) / ((1 - w^2)(1 - k^2 w^2)), w = (h/2) J+.
TruncatedSeries f_of_jp(const DeformParams& p, std::size_t order);
// Unscaled S(v) = sn/(cn dn) and F(v) = (1 - k^2 sn^4)/(cn dn)^2, for the
// derivative check S' = F.
TruncatedSeries sn_over_cndn(Complex k, std::size_t order);
TruncatedSeries f_unscaled(Complex k, std::size_t order);

}  // namespace deform_series

DeformedTriplet build_elliptic_triplet(const GeneratorTriple& classical, const DeformParams& p,
                                       std::size_t order);
DeformedTriplet build_elliptic_triplet(const SpinRep& rep, const DeformParams& p);

// Recovers (J+, J-, J0) from a triplet with elliptic or Jordanian provenance.
GeneratorTriple invert_map(const DeformedTriplet& t);

// k^2 = 1: (h/2) X = arctanh((h/2) J+), Y = (1 - (h/2)^2 J+^2)^{1/2} J- (...)^{1/2}.
DeformedTriplet build_jordanian_triplet(const GeneratorTriple& classical, Complex h, std::size_t order);
DeformedTriplet build_jordanian_triplet(const SpinRep& rep, Complex h);

// (h/2) X^ = sn^{-1}(tanh((h/2) X), k) with Y^ dressed on both sides by
// ((1 - k^2 tanh^2)/(1 - tanh^2))^{1/4}. Requires Jordanian provenance.
DeformedTriplet lift_uh_to_elliptic(const DeformedTriplet& t_uh, Complex k);

ComplexMatrix G_of(const DeformedTriplet& t);
ComplexMatrix f_of(const DeformedTriplet& t);

enum class CasimirForm { classical, jordanian, elliptic };
CasimirForm parse_casimir_form(const std::string& name);
std::string to_string(CasimirForm f);

// The Casimir operator expressed through the selected triplet; equals
// j(j+1) times the identity on the spin-j module.
ComplexMatrix casimir(const DeformedTriplet& t, CasimirForm form);

// Residuals of the deformed relations (keys eq12, eq13, eq14), the
// f = dG/dX^ coefficient gap (jacobi_f_dG), and the mutual gaps between the
// three expressions of f (f_eq15_eq16, f_eq15_eq17).
ResidualReport relation_residuals(const DeformedTriplet& t);

// Residuals of the Jordanian relations [X,Y] = 2J0, [J0,X] = sinh(hX)/h,
// [J0,Y] = -(cosh(hX) Y + Y cosh(hX))/2 (keys eq22, eq23, eq24).
ResidualReport jordanian_relation_residuals(const ComplexMatrix& x, const ComplexMatrix& y,
                                            const ComplexMatrix& j0, Complex h, std::size_t order);

}  // namespace ellsl2
