#pragma once

#include <cstddef>

#include "ellsl2/series.hpp"

namespace ellsl2 {

// Inverse Jacobi sn as a truncated series in u, obtained by termwise
// integration of (1 - u^2)^{-1/2} (1 - k^2 u^2)^{-1/2}. Odd; the modulus may
// be complex since the coefficients are polynomials in k^2.
TruncatedSeries asn_series(Complex k, std::size_t order);

struct JacobiSeries {
  TruncatedSeries sn;
  TruncatedSeries cn;
  TruncatedSeries dn;
};

// sn by reversion of asn_series; cn = (1 - sn^2)^{1/2}, dn = (1 - k^2 sn^2)^{1/2}.
JacobiSeries sn_cn_dn_series(Complex k, std::size_t order);

// Complete elliptic integral of the first kind by the arithmetic-geometric
// mean, K(k) = pi / (2 AGM(1, sqrt(1 - k^2))). Requires 0 <= k < 1.
double complete_K(double k);
// K'(k) = K(sqrt(1 - k^2)). Requires 0 < k <= 1.
double complete_Kprime(double k);

struct JacobiValues {
  Complex sn;
  Complex cn;
  Complex dn;
  // Set when the evaluation hit a pole of sn: a non-finite intermediate, or
  // |sn| above 1e13 (the argument is within rounding of the pole).
  bool pole = false;
};

// sn, cn, dn at complex u for real modulus 0 <= k < 1 via the descending
// Landen (Gauss) transformation: the modulus is descended until it drops
// below 1e-15, the trigonometric limit is taken, and the values are carried
// back up by the rational ascent formulas.
JacobiValues jacobi_numeric(Complex u, double k);

struct PeriodPair {
  Complex first;
  Complex second;
};

struct EllipticConstants {
  double k = 0.0;
  double K = 0.0;
  double Kprime = 0.0;
  PeriodPair sn;  // (4K, 2iK')
  PeriodPair cn;  // (4K, 2(K + iK'))
  PeriodPair dn;  // (2K, 4iK')
};

// Primitive period table. Requires 0 < k < 1.
EllipticConstants periods(double k);

}  // namespace ellsl2
