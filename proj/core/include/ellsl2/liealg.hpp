#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ellsl2/series.hpp"

namespace ellsl2 {

using ComplexMatrix = Eigen::MatrixXcd;

// A non-negative half-integer stored as 2j.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  // Accepts "5/2", "2.5", "3". Throws DomainError on anything else.
  static HalfInteger parse(const std::string& text);
  static HalfInteger from_double(double j);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr std::size_t dim() const { return static_cast<std::size_t>(twice_) + 1; }
  std::string str() const;

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return HalfInteger(a.twice_ + b.twice_); }

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

// Images of (J+, J-, J0) on some module; the classical triple when they obey
// [J0, J+-] = +-J+-, [J+, J-] = 2 J0.
struct GeneratorTriple {
  ComplexMatrix Jp;
  ComplexMatrix Jm;
  ComplexMatrix J0;

  Eigen::Index dim() const { return J0.rows(); }
};

// Spin-j module in the basis |j, j>, |j, j-1>, ..., |j, -j> (descending m),
// so J+ is strictly upper triangular.
struct SpinRep {
  HalfInteger j;
  std::vector<double> m_labels;
  GeneratorTriple gens;

  std::size_t dim() const { return j.dim(); }
  const ComplexMatrix& Jp() const { return gens.Jp; }
  const ComplexMatrix& Jm() const { return gens.Jm; }
  const ComplexMatrix& J0() const { return gens.J0; }
};

// Ladder coefficient a_m = sqrt((j - m)(j + m + 1)).
double ladder_coefficient(HalfInteger j, double m);

SpinRep build_spin(HalfInteger j);

// AB - BA; throws DomainError on a dimension mismatch.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
// AB + BA.
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

// sum_i c_i M^i by Horner's scheme. The result is exact, not a truncation,
// whenever M^(order + 1) = 0.
ComplexMatrix mat_apply_series(const TruncatedSeries& s, const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Delta J_i = J_i (x) 1 + 1 (x) J_i.
GeneratorTriple coproduct_classical(const GeneratorTriple& a, const GeneratorTriple& b);
GeneratorTriple coproduct_classical(const SpinRep& a, const SpinRep& b);

// Permutation P with P (v (x) w) = w (x) v for v of size d1 and w of size d2.
ComplexMatrix tensor_swap(Eigen::Index d1, Eigen::Index d2);

// Smallest n with ||M^n||_F <= tol (capped at dim + 1).
int nilpotency_index(const ComplexMatrix& m, double tol = 1e-12);

double frobenius(const ComplexMatrix& m);

}  // namespace ellsl2
