#include "ellsl2/elliptic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ellsl2/errors.hpp"

namespace ellsl2 {

namespace {

// 1 - c u^2 as a series of the given order.
TruncatedSeries one_minus_square(Complex c, std::size_t order) {
  TruncatedSeries s = TruncatedSeries::constant(1.0, order);
  if (order < 2) return s;
  auto coeffs = s.coeffs();
  coeffs[2] = -c;
  return TruncatedSeries(std::move(coeffs));
}

double agm(double a, double b) {
  for (int i = 0; i < 64; ++i) {
    if (std::abs(a - b) <= 1e-15 * a) break;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return a;
}

constexpr double kDescentFloor = 1e-15;
constexpr int kMaxDescent = 32;

constexpr double kPoleMagnitude = 1e13;

}  // namespace

TruncatedSeries asn_series(Complex k, std::size_t order) {
  if (order == 0) return TruncatedSeries(0);
  const std::size_t n = order - 1;
  const TruncatedSeries integrand =
      ts_pow_rational(one_minus_square(1.0, n) * one_minus_square(k * k, n), {-1, 2});
  return ts_integrate(integrand);
}

JacobiSeries sn_cn_dn_series(Complex k, std::size_t order) {
  if (order == 0) {
    return {TruncatedSeries(0), TruncatedSeries::constant(1.0, 0), TruncatedSeries::constant(1.0, 0)};
  }
  TruncatedSeries sn = ts_revert(asn_series(k, order));
  const TruncatedSeries sn2 = sn * sn;
  const TruncatedSeries one = TruncatedSeries::constant(1.0, order);
  TruncatedSeries cn = ts_pow_rational(one - sn2, {1, 2});
  TruncatedSeries dn = ts_pow_rational(one - (k * k) * sn2, {1, 2});
  return {std::move(sn), std::move(cn), std::move(dn)};
}

double complete_K(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw DomainError("complete_K: modulus must satisfy 0 <= k < 1 (K diverges at k = 1), got " +
                      std::to_string(k));
  }
  return std::numbers::pi / (2.0 * agm(1.0, std::sqrt((1.0 - k) * (1.0 + k))));
}

double complete_Kprime(double k) {
  if (!(k > 0.0 && k <= 1.0)) {
    throw DomainError("complete_Kprime: modulus must satisfy 0 < k <= 1 (K' diverges at k = 0), got " +
                      std::to_string(k));
  }
  return std::numbers::pi / (2.0 * agm(1.0, k));
}

JacobiValues jacobi_numeric(Complex u, double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw DomainError("jacobi_numeric: modulus must satisfy 0 <= k < 1, got " + std::to_string(k));
  }
  // Descent: mu_{n+1} = k_n^2 / (1 + k'_n)^2, k'_{n+1} = 2 sqrt(k'_n) / (1 + k'_n).
  std::array<double, kMaxDescent> mu{};
  int depth = 0;
  double kn = k;
  double kpn = std::sqrt((1.0 - k) * (1.0 + k));
  Complex v = u;
  while (kn >= kDescentFloor && depth < kMaxDescent) {
    const double next = (kn / (1.0 + kpn)) * (kn / (1.0 + kpn));
    kpn = 2.0 * std::sqrt(kpn) / (1.0 + kpn);
    kn = next;
    mu[depth++] = next;
    v /= (1.0 + next);
  }

  JacobiValues r{std::sin(v), std::cos(v), Complex{1.0, 0.0}, false};
  for (int i = depth; i-- > 0;) {
    const double m = mu[i];
    const Complex s2 = r.sn * r.sn;
    const Complex denom = 1.0 + m * s2;
    if (denom == Complex{}) {
      r.pole = true;
      break;
    }
    const Complex sn = (1.0 + m) * r.sn / denom;
    const Complex cn = r.cn * r.dn / denom;
    const Complex dn = (1.0 - m * s2) / denom;
    r.sn = sn;
    r.cn = cn;
    r.dn = dn;
  }
  auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  if (!finite(r.sn) || !finite(r.cn) || !finite(r.dn)) r.pole = true;
  // Beyond this magnitude the argument sits within rounding of a pole and
  // the digits carry no information.
  if (std::abs(r.sn) > kPoleMagnitude) r.pole = true;
  return r;
}

EllipticConstants periods(double k) {
  if (!(k > 0.0 && k < 1.0)) {
    throw DomainError("periods: modulus must satisfy 0 < k < 1, got " + std::to_string(k));
  }
  EllipticConstants c;
  c.k = k;
  c.K = complete_K(k);
  c.Kprime = complete_Kprime(k);
  const Complex iKp{0.0, c.Kprime};
  c.sn = {4.0 * c.K, 2.0 * iKp};
  c.cn = {4.0 * c.K, 2.0 * (c.K + iKp)};
  c.dn = {2.0 * c.K, 4.0 * iKp};
  return c;
}

}  // namespace ellsl2
