#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ellsl2/deform.hpp"
#include "ellsl2/report.hpp"
#include "ellsl2/rewrite.hpp"

namespace ellsl2 {

// Translation X -> X + offset * 1 together with the sign flips of (Y, J0).
// Offsets are stored exactly: for the Jordanian target as a count of
// i pi / h steps, for the elliptic target as (2/h)(nK K + nKp i K').
struct ShiftSpec {
  enum class Target { uh, elliptic };

  Target target = Target::uh;
  int half_periods = 0;  // uh: offset = half_periods * i pi / h
  int n_K = 0;           // elliptic
  int n_Kp = 0;          // elliptic
  bool flip_y = true;
  bool flip_j0 = true;
  // Branch of the induced inversion on (J+, J-, J0); 0 when not applicable.
  int epsilon = 0;

  static ShiftSpec uh_half_period(int times = 1);
  static ShiftSpec elliptic_iKp();
  static ShiftSpec elliptic_2K_iKp();

  Complex offset(const DeformParams& p) const;
  std::string name() const;
};

// Sum of terms c sn^a cn^b dn^c (integer exponents) with complex
// coefficients. Used to push the half- and quarter-period translation
// formulas through G and f before converting back to a power series.
class JacobiLaurent {
 public:
  struct Exponents {
    int sn = 0;
    int cn = 0;
    int dn = 0;
    friend auto operator<=>(const Exponents&, const Exponents&) = default;
  };

  static JacobiLaurent constant(Complex c);
  static JacobiLaurent term(Complex c, Exponents e);
  static JacobiLaurent sn() { return term(1.0, {1, 0, 0}); }
  static JacobiLaurent cn() { return term(1.0, {0, 1, 0}); }
  static JacobiLaurent dn() { return term(1.0, {0, 0, 1}); }

  const std::map<Exponents, Complex>& terms() const { return terms_; }

  friend JacobiLaurent operator+(const JacobiLaurent& a, const JacobiLaurent& b);
  friend JacobiLaurent operator-(const JacobiLaurent& a, const JacobiLaurent& b);
  friend JacobiLaurent operator*(const JacobiLaurent& a, const JacobiLaurent& b);
  friend JacobiLaurent operator*(Complex s, const JacobiLaurent& a);
  // Integer power; negative powers require a single term.
  JacobiLaurent pow(int n) const;

  // Power series at 0; throws DomainError when a term carries a negative
  // power of sn (pole at the origin).
  TruncatedSeries to_series(Complex k, std::size_t order) const;
  Complex evaluate(Complex sn, Complex cn, Complex dn) const;

 private:
  void add(const Exponents& e, Complex c);
  std::map<Exponents, Complex> terms_;
};

// Images of sn, cn, dn at argument u + shift, each a single Laurent term.
struct HalfPeriodTable {
  JacobiLaurent sn;
  JacobiLaurent cn;
  JacobiLaurent dn;
};

// u -> u + 2K: (-sn, -cn, dn).
HalfPeriodTable shift_2K();
// u -> u + iK': (1/(k sn), -i dn/(k sn), -i cn/sn).
HalfPeriodTable shift_iKp(Complex k);
// Composition: apply `second` after `first`.
HalfPeriodTable compose_shifts(const HalfPeriodTable& first, const HalfPeriodTable& second);
HalfPeriodTable table_for(const ShiftSpec& s, Complex k);

JacobiLaurent substitute(const JacobiLaurent& e, const HalfPeriodTable& t);

// sn/(cn dn) and (1 - k^2 sn^4)/(cn dn)^2 as Laurent expressions.
JacobiLaurent G_expression();
JacobiLaurent f_expression(Complex k);

struct ShiftImage {
  DeformedTriplet base;
  DeformedTriplet image;  // X' = X + offset 1, Y' = +-Y, J0' = +-J0
  ShiftSpec spec;
  ResidualReport residuals;
};

// (X^, Y^, J0) -> (-X^, -Y^, J0), relations re-verified on the image.
ShiftImage sign_involution(const DeformedTriplet& t);

// (X, Y, J0) -> (X + times * i pi/h, (-1)^times Y, (-1)^times J0) on a
// Jordanian triplet. Residuals use the exact phase e^{i pi times} for the
// exponentials of the shifted argument and include the highest-weight
// eigenvalue check (key eq59). Requires h != 0.
ShiftImage half_period_shift_uh(const DeformedTriplet& t, int times = 1);

// Elliptic translation by (2/h) iK' or (2/h)(2K + iK'). G and f at the
// shifted argument are obtained from the translation table as series in X^.
// Requires real 0 < k < 1 and h != 0.
ShiftImage period_shift_elliptic(const DeformedTriplet& t, const ShiftSpec& s);

// (J+, J-, J0) induced by an image whose offset is a whole period of the
// function that realizes J+ (even multiples of i pi/h for tanh). Odd
// multiples give J+ proportional to J+^{-1}, which has no finite-dimensional
// realization; those throw DomainError.
GeneratorTriple induced_generators(const ShiftImage& img);

// Numeric confirmation, via jacobi_numeric at pole-avoiding sample points,
// of the translation table and the primitive periods.
ResidualReport scalar_shift_identities(double k, int samples = 50, std::uint64_t seed = 7);

// Exact check of the induced inversion with branch epsilon at the given
// rational (h, k) samples: automorphism and involution residuals must vanish.
struct InversionCheck {
  Rational h;
  Rational k;
  int epsilon = 1;
  SymbolicReport automorphism;
  SymbolicReport involution;

  bool ok() const { return automorphism.all_zero() && involution.all_zero(); }
};

std::vector<InversionCheck> inversion_symbolic_checks(int epsilon, const std::vector<std::pair<Rational, Rational>>& samples);
std::vector<std::pair<Rational, Rational>> default_rational_samples();

}  // namespace ellsl2
