#include "ellsl2/liealg.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ellsl2/errors.hpp"

namespace ellsl2 {

HalfInteger HalfInteger::from_double(double j) {
  const double twice = 2.0 * j;
  if (!std::isfinite(j) || j < 0.0 || std::abs(twice - std::round(twice)) > 1e-12 || twice > 1e6) {
    throw DomainError("spin must be a non-negative half-integer, got " + std::to_string(j));
  }
  return HalfInteger(static_cast<int>(std::lround(twice)));
}

HalfInteger HalfInteger::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return from_double(v);
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const long n = std::stol(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    const long d = std::stol(den, &used);
    if (used != den.size() || (d != 1 && d != 2) || n < 0) throw std::invalid_argument(text);
    return HalfInteger(static_cast<int>(d == 1 ? 2 * n : n));
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("cannot parse '" + text + "' as a non-negative half-integer");
  }
}

std::string HalfInteger::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

double ladder_coefficient(HalfInteger j, double m) {
  const double jj = j.value();
  const double p = (jj - m) * (jj + m + 1.0);
  return p > 0.0 ? std::sqrt(p) : 0.0;
}

SpinRep build_spin(HalfInteger j) {
  const auto d = static_cast<Eigen::Index>(j.dim());
  SpinRep rep;
  rep.j = j;
  rep.gens.Jp = ComplexMatrix::Zero(d, d);
  rep.gens.Jm = ComplexMatrix::Zero(d, d);
  rep.gens.J0 = ComplexMatrix::Zero(d, d);
  rep.m_labels.resize(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    const double m = j.value() - static_cast<double>(i);
    rep.m_labels[static_cast<std::size_t>(i)] = m;
    rep.gens.J0(i, i) = m;
    // J+ |m> = a_m |m+1>, which sits one row above.
    if (i > 0) rep.gens.Jp(i - 1, i) = ladder_coefficient(j, m);
    // J- |m> = a_{m-1} |m-1>.
    if (i + 1 < d) rep.gens.Jm(i + 1, i) = ladder_coefficient(j, m - 1.0);
  }
  return rep;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DomainError("commutator: dimension mismatch");
  }
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DomainError("anticommutator: dimension mismatch");
  }
  return a * b + b * a;
}

ComplexMatrix mat_apply_series(const TruncatedSeries& s, const ComplexMatrix& m) {
  const auto& c = s.coeffs();
  const auto d = m.rows();
  ComplexMatrix acc = c.back() * ComplexMatrix::Identity(d, d);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * m;
    acc.diagonal().array() += c[i];
  }
  return acc;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

GeneratorTriple coproduct_classical(const GeneratorTriple& a, const GeneratorTriple& b) {
  const ComplexMatrix ia = ComplexMatrix::Identity(a.dim(), a.dim());
  const ComplexMatrix ib = ComplexMatrix::Identity(b.dim(), b.dim());
  return {kron(a.Jp, ib) + kron(ia, b.Jp), kron(a.Jm, ib) + kron(ia, b.Jm),
          kron(a.J0, ib) + kron(ia, b.J0)};
}

GeneratorTriple coproduct_classical(const SpinRep& a, const SpinRep& b) {
  return coproduct_classical(a.gens, b.gens);
}

ComplexMatrix tensor_swap(Eigen::Index d1, Eigen::Index d2) {
  ComplexMatrix p = ComplexMatrix::Zero(d1 * d2, d1 * d2);
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = 0; j < d2; ++j) p(j * d1 + i, i * d2 + j) = 1.0;
  }
  return p;
}

int nilpotency_index(const ComplexMatrix& m, double tol) {
  const auto d = m.rows();
  ComplexMatrix power = ComplexMatrix::Identity(d, d);
  for (int n = 1; n <= d + 1; ++n) {
    power = power * m;
    if (power.norm() <= tol) return n;
  }
  return static_cast<int>(d) + 1;
}

double frobenius(const ComplexMatrix& m) { return m.norm(); }

}  // namespace ellsl2
