#include "ellsl2/series.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "ellsl2/errors.hpp"

namespace ellsl2 {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coeffs)
    : TruncatedSeries(std::vector<Complex>(coeffs)) {}

TruncatedSeries TruncatedSeries::constant(Complex c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order >= this->order()) return *this;
  return TruncatedSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::extended(std::size_t order) const {
  if (order <= this->order()) return *this;
  auto c = coeffs_;
  c.resize(order + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator-() const {
  auto c = coeffs_;
  for (auto& x : c) x = -x;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == Complex{}) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
  auto c = a.coeffs_;
  for (auto& x : c) x *= s;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries ts_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner[0] != Complex{}) {
    throw DomainError("ts_compose: inner series has a nonzero constant term");
  }
  const std::size_t n = std::min(outer.order(), inner.order());
  const auto& c = outer.coeffs();
  // Horner in the series ring: (((c_n) g + c_{n-1}) g + ...) g + c_0.
  TruncatedSeries acc = TruncatedSeries::constant(c[n], n);
  const TruncatedSeries g = inner.truncated(n);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * g + TruncatedSeries::constant(c[i], n);
  }
  return acc;
}

TruncatedSeries ts_revert(const TruncatedSeries& s) {
  if (s[0] != Complex{}) throw DomainError("ts_revert: constant term must be zero");
  if (s.order() < 1 || s[1] == Complex{}) {
    throw DomainError("ts_revert: linear coefficient must be nonzero");
  }
  const std::size_t n = s.order();
  const TruncatedSeries u = TruncatedSeries::variable(n);
  const TruncatedSeries ds = ts_derive(s).extended(n);

  // Newton iteration t <- t - (s(t) - u) / s'(t); each step doubles the
  // number of correct coefficients.
  TruncatedSeries t = (1.0 / s[1]) * u;
  const int steps = std::bit_width(n) + 1;
  for (int it = 0; it < steps; ++it) {
    const TruncatedSeries residual = ts_compose(s, t) - u;
    const TruncatedSeries slope = ts_compose(ds, t);
    t = t - ts_divide(residual, slope);
  }
  return t;
}

TruncatedSeries ts_pow_rational(const TruncatedSeries& s, Fraction p) {
  if (p.den == 0) throw DomainError("ts_pow_rational: zero denominator");
  if (s[0] != Complex{1.0, 0.0}) {
    throw DomainError("ts_pow_rational: constant term must be exactly 1");
  }
  const std::size_t n = s.order();
  const double e = p.value();
  const auto& a = s.coeffs();
  std::vector<Complex> b(n + 1);
  b[0] = 1.0;
  // J.C.P. Miller recurrence: n b_n = sum_{k=1}^{n} (e k - (n - k)) a_k b_{n-k}.
  for (std::size_t m = 1; m <= n; ++m) {
    Complex acc{};
    for (std::size_t k = 1; k <= m; ++k) {
      acc += (e * static_cast<double>(k) - static_cast<double>(m - k)) * a[k] * b[m - k];
    }
    b[m] = acc / static_cast<double>(m);
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries ts_derive(const TruncatedSeries& s) {
  if (s.order() == 0) return TruncatedSeries(0);
  std::vector<Complex> c(s.order());
  for (std::size_t i = 1; i <= s.order(); ++i) c[i - 1] = static_cast<double>(i) * s[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries ts_integrate(const TruncatedSeries& s) {
  std::vector<Complex> c(s.order() + 2);
  for (std::size_t i = 0; i <= s.order(); ++i) c[i + 1] = s[i] / static_cast<double>(i + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries ts_reciprocal(const TruncatedSeries& s) {
  if (s[0] == Complex{}) throw DomainError("ts_reciprocal: constant term is zero");
  const std::size_t n = s.order();
  std::vector<Complex> r(n + 1);
  r[0] = 1.0 / s[0];
  for (std::size_t m = 1; m <= n; ++m) {
    Complex acc{};
    for (std::size_t k = 1; k <= m; ++k) acc += s[k] * r[m - k];
    r[m] = -acc * r[0];
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries ts_divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * ts_reciprocal(b);
}

TruncatedSeries ts_divide_by_variable(const TruncatedSeries& s) {
  if (s[0] != Complex{}) throw DomainError("ts_divide_by_variable: constant term must be zero");
  if (s.order() == 0) return TruncatedSeries(0);
  return TruncatedSeries(std::vector<Complex>(s.coeffs().begin() + 1, s.coeffs().end()));
}

TruncatedSeries ts_scale_argument(const TruncatedSeries& s, Complex lambda) {
  auto c = s.coeffs();
  Complex p = 1.0;
  for (auto& x : c) {
    x *= p;
    p *= lambda;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries ts_dilate(const TruncatedSeries& s, Complex lambda) {
  if (s[0] != Complex{}) throw DomainError("ts_dilate: constant term must be zero");
  auto c = s.coeffs();
  Complex p = 1.0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    c[i] *= p;
    p *= lambda;
  }
  return TruncatedSeries(std::move(c));
}

Complex ts_eval(const TruncatedSeries& s, Complex u) {
  const auto& c = s.coeffs();
  Complex acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * u + c[i];
  return acc;
}

double ts_max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  double m = 0.0;
  for (std::size_t i = 0; i <= n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace ellsl2

namespace ellsl2::standard_series {

TruncatedSeries exp(std::size_t order) {
  std::vector<Complex> c(order + 1);
  double f = 1.0;
  for (std::size_t i = 0; i <= order; ++i) {
    if (i > 0) f /= static_cast<double>(i);
    c[i] = f;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries sinh(std::size_t order) {
  auto c = exp(order).coeffs();
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = 0.0;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries cosh(std::size_t order) {
  auto c = exp(order).coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = 0.0;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries tanh(std::size_t order) { return ts_divide(sinh(order), cosh(order)); }

TruncatedSeries arctanh(std::size_t order) {
  std::vector<Complex> c(order + 1);
  for (std::size_t i = 1; i <= order; i += 2) c[i] = 1.0 / static_cast<double>(i);
  return TruncatedSeries(std::move(c));
}

}  // namespace ellsl2::standard_series
