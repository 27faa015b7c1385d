#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ellsl2 {

using Complex = std::complex<double>;

// Exponent of a binomial-series power, e.g. {1, 4} for a fourth root.
struct Fraction {
  long num = 0;
  long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// A one-variable formal power series c_0 + c_1 u + ... + c_N u^N + O(u^{N+1})
// over complex doubles. Values are immutable; every operation returns a new
// series. Binary operations on mixed orders truncate to the smaller order.
class TruncatedSeries {
 public:
  // Zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0);
  // Order is coeffs.size() - 1; an empty vector yields the order-0 zero series.
  explicit TruncatedSeries(std::vector<Complex> coeffs);
  TruncatedSeries(std::initializer_list<Complex> coeffs);

  static TruncatedSeries constant(Complex c, std::size_t order);
  // The series u.
  static TruncatedSeries variable(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Complex{}; }

  TruncatedSeries truncated(std::size_t order) const;
  // Same coefficients, padded with zeros up to `order`.
  TruncatedSeries extended(std::size_t order) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(Complex s, const TruncatedSeries& a);
  friend TruncatedSeries operator*(const TruncatedSeries& a, Complex s) { return s * a; }

 private:
  std::vector<Complex> coeffs_;
};

// Cauchy product truncated at min(a.order(), b.order()).
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// outer(inner(u)). Requires inner[0] == 0 exactly; throws DomainError otherwise.
TruncatedSeries ts_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// Compositional inverse t with ts_compose(s, t) = u. Requires s[0] == 0 and s[1] != 0.
TruncatedSeries ts_revert(const TruncatedSeries& s);

// Principal branch of s^p. Requires s[0] == 1 exactly.
TruncatedSeries ts_pow_rational(const TruncatedSeries& s, Fraction p);

// Termwise derivative; order N-1 (an order-0 input gives the order-0 zero series).
TruncatedSeries ts_derive(const TruncatedSeries& s);

// Termwise antiderivative with zero constant term; order N+1.
TruncatedSeries ts_integrate(const TruncatedSeries& s);

// Multiplicative inverse 1/s. Requires s[0] != 0.
TruncatedSeries ts_reciprocal(const TruncatedSeries& s);

// a / b, requires b[0] != 0.
TruncatedSeries ts_divide(const TruncatedSeries& a, const TruncatedSeries& b);

// s(u) / u for s[0] == 0; order N-1.
TruncatedSeries ts_divide_by_variable(const TruncatedSeries& s);

// s(lambda * u).
TruncatedSeries ts_scale_argument(const TruncatedSeries& s, Complex lambda);

// (1/lambda) s(lambda * u) for s[0] == 0, coefficients s_n lambda^{n-1}.
// Regular at lambda = 0, where it reduces to s_1 u.
TruncatedSeries ts_dilate(const TruncatedSeries& s, Complex lambda);

// Horner evaluation of the retained polynomial.
Complex ts_eval(const TruncatedSeries& s, Complex u);

// max_i |a_i - b_i| over the common order.
double ts_max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace ellsl2

namespace ellsl2::standard_series {

// Taylor series at 0 of the elementary functions used by the hyperbolic
// (k^2 = 1) constructions. Each is returned to the requested order.
TruncatedSeries exp(std::size_t order);
TruncatedSeries sinh(std::size_t order);
TruncatedSeries cosh(std::size_t order);
TruncatedSeries tanh(std::size_t order);
TruncatedSeries arctanh(std::size_t order);

}  // namespace ellsl2::standard_series
