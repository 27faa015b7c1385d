#include "ellsl2/autos.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "ellsl2/elliptic.hpp"
#include "ellsl2/errors.hpp"

namespace ellsl2 {

namespace {

constexpr Complex kI{0.0, 1.0};

bool is_jordanian(const DeformedTriplet& t) {
  return t.provenance == Provenance::jordanian || std::abs(t.params.ksq() - 1.0) == 0.0;
}

double relative_gap(Complex lhs, Complex rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); }

}  // namespace

ShiftSpec ShiftSpec::uh_half_period(int times) {
  ShiftSpec s;
  s.target = Target::uh;
  s.half_periods = times;
  s.flip_y = s.flip_j0 = (times % 2) != 0;
  s.epsilon = (times % 2) != 0 ? 1 : 0;
  return s;
}

ShiftSpec ShiftSpec::elliptic_iKp() {
  ShiftSpec s;
  s.target = Target::elliptic;
  s.n_Kp = 1;
  s.epsilon = 1;
  return s;
}

ShiftSpec ShiftSpec::elliptic_2K_iKp() {
  ShiftSpec s;
  s.target = Target::elliptic;
  s.n_K = 2;
  s.n_Kp = 1;
  s.epsilon = -1;
  return s;
}

Complex ShiftSpec::offset(const DeformParams& p) const {
  if (p.h == Complex{}) throw DomainError("period shifts require h != 0");
  if (target == Target::uh) return static_cast<double>(half_periods) * kI * std::numbers::pi / p.h;
  const double k = p.k.real();
  if (p.k.imag() != 0.0 || !(k > 0.0 && k < 1.0)) {
    throw DomainError("elliptic period shifts require a real modulus 0 < k < 1");
  }
  const double K = complete_K(k);
  const double Kp = complete_Kprime(k);
  return (2.0 / p.h) * (static_cast<double>(n_K) * K + static_cast<double>(n_Kp) * kI * Kp);
}

std::string ShiftSpec::name() const {
  if (target == Target::uh) return half_periods == 1 ? "uh-half" : "uh-half^" + std::to_string(half_periods);
  if (n_K == 0 && n_Kp == 1) return "ell-iKp";
  if (n_K == 2 && n_Kp == 1) return "ell-2KiKp";
  return "ell-" + std::to_string(n_K) + "K+" + std::to_string(n_Kp) + "iKp";
}

JacobiLaurent JacobiLaurent::constant(Complex c) { return term(c, {}); }

JacobiLaurent JacobiLaurent::term(Complex c, Exponents e) {
  JacobiLaurent out;
  out.add(e, c);
  return out;
}

void JacobiLaurent::add(const Exponents& e, Complex c) {
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

JacobiLaurent operator+(const JacobiLaurent& a, const JacobiLaurent& b) {
  JacobiLaurent out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, c);
  return out;
}

JacobiLaurent operator-(const JacobiLaurent& a, const JacobiLaurent& b) { return a + (-1.0) * b; }

JacobiLaurent operator*(Complex s, const JacobiLaurent& a) {
  JacobiLaurent out;
  for (const auto& [e, c] : a.terms_) out.add(e, s * c);
  return out;
}

JacobiLaurent operator*(const JacobiLaurent& a, const JacobiLaurent& b) {
  JacobiLaurent out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add({ea.sn + eb.sn, ea.cn + eb.cn, ea.dn + eb.dn}, ca * cb);
    }
  }
  return out;
}

JacobiLaurent JacobiLaurent::pow(int n) const {
  if (n >= 0) {
    JacobiLaurent out = constant(1.0);
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
  }
  if (terms_.size() != 1) throw DomainError("JacobiLaurent: only single terms have inverses");
  const auto& [e, c] = *terms_.begin();
  return term(std::pow(c, n), {e.sn * n, e.cn * n, e.dn * n});
}

TruncatedSeries JacobiLaurent::to_series(Complex k, std::size_t order) const {
  const JacobiSeries js = sn_cn_dn_series(k, order);
  TruncatedSeries out(order);
  for (const auto& [e, c] : terms_) {
    if (e.sn < 0) throw DomainError("JacobiLaurent: negative power of sn has a pole at the origin");
    TruncatedSeries t = TruncatedSeries::constant(c, order);
    for (int i = 0; i < e.sn; ++i) t = t * js.sn;
    if (e.cn != 0) t = t * ts_pow_rational(js.cn, {e.cn, 1});
    if (e.dn != 0) t = t * ts_pow_rational(js.dn, {e.dn, 1});
    out = out + t;
  }
  return out;
}

Complex JacobiLaurent::evaluate(Complex sn, Complex cn, Complex dn) const {
  Complex acc{};
  for (const auto& [e, c] : terms_) acc += c * std::pow(sn, e.sn) * std::pow(cn, e.cn) * std::pow(dn, e.dn);
  return acc;
}

HalfPeriodTable shift_2K() {
  return {JacobiLaurent::term(-1.0, {1, 0, 0}), JacobiLaurent::term(-1.0, {0, 1, 0}), JacobiLaurent::dn()};
}

HalfPeriodTable shift_iKp(Complex k) {
  if (k == Complex{}) throw DomainError("the iK' translation requires k != 0");
  return {JacobiLaurent::term(1.0 / k, {-1, 0, 0}), JacobiLaurent::term(-kI / k, {-1, 0, 1}),
          JacobiLaurent::term(-kI, {-1, 1, 0})};
}

JacobiLaurent substitute(const JacobiLaurent& e, const HalfPeriodTable& t) {
  JacobiLaurent out;
  for (const auto& [ex, c] : e.terms()) {
    out = out + c * (t.sn.pow(ex.sn) * t.cn.pow(ex.cn) * t.dn.pow(ex.dn));
  }
  return out;
}

HalfPeriodTable compose_shifts(const HalfPeriodTable& first, const HalfPeriodTable& second) {
  // f(u + a + b): translate by `first`, then express the result at u + b.
  return {substitute(first.sn, second), substitute(first.cn, second), substitute(first.dn, second)};
}

HalfPeriodTable table_for(const ShiftSpec& s, Complex k) {
  if (s.target != ShiftSpec::Target::elliptic) throw DomainError("table_for: not an elliptic shift");
  if (s.n_K == 0 && s.n_Kp == 1) return shift_iKp(k);
  if (s.n_K == 2 && s.n_Kp == 1) return compose_shifts(shift_2K(), shift_iKp(k));
  throw DomainError("table_for: unsupported shift " + s.name());
}

JacobiLaurent G_expression() { return JacobiLaurent::term(1.0, {1, -1, -1}); }

JacobiLaurent f_expression(Complex k) {
  return (JacobiLaurent::constant(1.0) - (k * k) * JacobiLaurent::sn().pow(4)) *
         JacobiLaurent::term(1.0, {0, -2, -2});
}

ShiftImage sign_involution(const DeformedTriplet& t) {
  ShiftImage img;
  img.base = t;
  img.spec.target = is_jordanian(t) ? ShiftSpec::Target::uh : ShiftSpec::Target::elliptic;
  img.spec.flip_y = true;
  img.spec.flip_j0 = false;
  img.image = t;
  img.image.Xhat = -t.Xhat;
  img.image.Yhat = -t.Yhat;
  img.image.provenance = Provenance::automorphism_image;
  if (is_jordanian(t)) {
    img.residuals = jordanian_relation_residuals(img.image.Xhat, img.image.Yhat, img.image.J0, t.params.h, t.order);
  } else {
    const ResidualReport full = relation_residuals(img.image);
    for (const auto& e : full.entries) {
      if (e.name == "eq12" || e.name == "eq13" || e.name == "eq14") img.residuals.entries.push_back(e);
    }
  }
  return img;
}

ShiftImage half_period_shift_uh(const DeformedTriplet& t, int times) {
  if (!is_jordanian(t)) throw DomainError("half_period_shift_uh: triplet must have Jordanian provenance");
  if (t.params.h == Complex{}) {
    throw DomainError("half_period_shift_uh: h = 0 (the shift i pi/h has no classical limit)");
  }
  ShiftImage img;
  img.base = t;
  img.spec = ShiftSpec::uh_half_period(times);
  const Complex offset = img.spec.offset(t.params);
  const double sign = (times % 2) != 0 ? -1.0 : 1.0;
  const auto d = t.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);

  img.image = t;
  img.image.provenance = Provenance::automorphism_image;
  img.image.Xhat = t.Xhat + offset * id;
  img.image.Yhat = sign * t.Yhat;
  img.image.J0 = sign * t.J0;

  // e^{h X'} = e^{i pi times} e^{h X} exactly, hence sinh and cosh of h X'
  // are those of h X times (-1)^times.
  const Complex h = t.params.h;
  const ComplexMatrix sinh_over_h = sign * mat_apply_series(ts_dilate(standard_series::sinh(t.order), h), t.Xhat);
  const ComplexMatrix cosh_hx = sign * mat_apply_series(ts_scale_argument(standard_series::cosh(t.order), h), t.Xhat);
  const double scale = std::max({1.0, frobenius(img.image.Xhat), frobenius(img.image.Yhat), frobenius(img.image.J0)});
  const auto& x = img.image.Xhat;
  const auto& y = img.image.Yhat;
  const auto& j0 = img.image.J0;
  img.residuals.add("eq22", frobenius(commutator(x, y) - 2.0 * j0), scale);
  img.residuals.add("eq23", frobenius(commutator(j0, x) - sinh_over_h), scale);
  img.residuals.add("eq24", frobenius(commutator(j0, y) + 0.5 * anticommutator(cosh_hx, y)), scale);

  // Highest-weight state |j,j> is the first basis vector.
  const Eigen::VectorXcd top = Eigen::VectorXcd::Unit(d, 0);
  img.residuals.add("eq59", (x * top - offset * top).norm(), std::max(1.0, std::abs(offset)));
  return img;
}

ShiftImage period_shift_elliptic(const DeformedTriplet& t, const ShiftSpec& s) {
  if (s.target != ShiftSpec::Target::elliptic) throw DomainError("period_shift_elliptic: not an elliptic shift");
  if (t.provenance != Provenance::direct_map && t.provenance != Provenance::lifted_from_uh) {
    throw DomainError("period_shift_elliptic: triplet must have elliptic provenance");
  }
  const DeformParams& p = t.params;
  const Complex offset = s.offset(p);  // validates h and k
  const auto d = t.dim();

  ShiftImage img;
  img.base = t;
  img.spec = s;
  img.image = t;
  img.image.provenance = Provenance::automorphism_image;
  img.image.Xhat = t.Xhat + offset * ComplexMatrix::Identity(d, d);
  img.image.Yhat = s.flip_y ? ComplexMatrix(-t.Yhat) : t.Yhat;
  img.image.J0 = s.flip_j0 ? ComplexMatrix(-t.J0) : t.J0;

  const HalfPeriodTable table = table_for(s, p.k);
  const TruncatedSeries g_shift = ts_dilate(substitute(G_expression(), table).to_series(p.k, t.order), p.half_h());
  const TruncatedSeries f_shift =
      ts_scale_argument(substitute(f_expression(p.k), table).to_series(p.k, t.order), p.half_h());
  const ComplexMatrix G_prime = mat_apply_series(g_shift, t.Xhat);
  const ComplexMatrix f_prime = mat_apply_series(f_shift, t.Xhat);

  const auto& x = img.image.Xhat;
  const auto& y = img.image.Yhat;
  const auto& j0 = img.image.J0;
  const double scale = std::max({1.0, frobenius(x), frobenius(y), frobenius(j0)});
  img.residuals.add("eq12", frobenius(commutator(x, y) - 2.0 * j0), scale);
  img.residuals.add("eq13", frobenius(commutator(j0, x) - G_prime), scale);
  img.residuals.add("eq14", frobenius(commutator(j0, y) + 0.5 * anticommutator(f_prime, y)), scale);
  img.residuals.add_info("G_shifted_plus_G", frobenius(G_prime + G_of(t)));
  img.residuals.add_info("f_shifted_plus_f", frobenius(f_prime + f_of(t)));
  return img;
}

GeneratorTriple induced_generators(const ShiftImage& img) {
  if (img.spec.target == ShiftSpec::Target::uh && img.spec.half_periods % 2 == 0) {
    // tanh has period i pi, so (2/h) tanh((h/2) X') = (2/h) tanh((h/2) X).
    DeformedTriplet unshifted = img.image;
    unshifted.provenance = Provenance::jordanian;
    unshifted.Xhat = img.image.Xhat - img.spec.offset(img.base.params) *
                                          ComplexMatrix::Identity(img.image.dim(), img.image.dim());
    return invert_map(unshifted);
  }
  if (img.spec.target == ShiftSpec::Target::uh || img.spec.n_Kp % 2 != 0) {
    throw DomainError(
        "induced J+ is proportional to the inverse of J+ and has no finite-dimensional realization; "
        "use the symbolic inversion check");
  }
  if (img.spec.half_periods == 0 && img.spec.n_K == 0 && img.spec.n_Kp == 0) return invert_map(img.image);
  throw DomainError("induced_generators: unsupported shift " + img.spec.name());
}

ResidualReport scalar_shift_identities(double k, int samples, std::uint64_t seed) {
  const EllipticConstants ec = periods(k);
  const Complex iKp = kI * ec.Kprime;
  const HalfPeriodTable t1 = shift_iKp(k);
  const HalfPeriodTable t2 = compose_shifts(shift_2K(), shift_iKp(k));
  const JacobiLaurent g_shift = substitute(G_expression(), t1);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-0.8, 0.8);
  std::uniform_real_distribution<double> im(-0.5, 0.5);

  std::map<std::string, double> worst;
  auto track = [&worst](const std::string& key, double v) {
    auto& w = worst[key];
    w = std::max(w, v);
  };
  int accepted = 0;
  for (int attempts = 0; accepted < samples && attempts < 100 * samples; ++attempts) {
    const Complex u{re(rng), im(rng)};
    const JacobiValues base = jacobi_numeric(u, k);
    if (base.pole || std::abs(base.sn) < 0.1) continue;
    const JacobiValues a = jacobi_numeric(u + iKp, k);
    const JacobiValues b = jacobi_numeric(u + 2.0 * ec.K + iKp, k);
    if (a.pole || b.pole) continue;
    ++accepted;
    track("sn_iKp", relative_gap(a.sn, t1.sn.evaluate(base.sn, base.cn, base.dn)));
    track("cn_iKp", relative_gap(a.cn, t1.cn.evaluate(base.sn, base.cn, base.dn)));
    track("dn_iKp", relative_gap(a.dn, t1.dn.evaluate(base.sn, base.cn, base.dn)));
    track("sn_2K_iKp", relative_gap(b.sn, -1.0 / (k * base.sn)));
    track("cn_2K_iKp", relative_gap(b.cn, t2.cn.evaluate(base.sn, base.cn, base.dn)));
    track("dn_2K_iKp", relative_gap(b.dn, t2.dn.evaluate(base.sn, base.cn, base.dn)));
    track("G_iKp", relative_gap(a.sn / (a.cn * a.dn), g_shift.evaluate(base.sn, base.cn, base.dn)));

    auto period = [&](const std::string& key, Complex shift, int which) {
      const JacobiValues s = jacobi_numeric(u + shift, k);
      const Complex lhs = which == 0 ? s.sn : which == 1 ? s.cn : s.dn;
      const Complex rhs = which == 0 ? base.sn : which == 1 ? base.cn : base.dn;
      track(key, s.pole ? INFINITY : relative_gap(lhs, rhs));
    };
    period("period_sn_4K", ec.sn.first, 0);
    period("period_sn_2iKp", ec.sn.second, 0);
    period("period_cn_4K", ec.cn.first, 1);
    period("period_cn_2K_2iKp", ec.cn.second, 1);
    period("period_dn_2K", ec.dn.first, 2);
    period("period_dn_4iKp", ec.dn.second, 2);
  }
  ResidualReport r;
  for (const auto& [key, v] : worst) r.add(key, v);
  r.add_info("samples", accepted);
  return r;
}

std::vector<std::pair<Rational, Rational>> default_rational_samples() {
  return {{Rational(2, 5), Rational(1, 3)}, {Rational(3, 7), Rational(2, 9)}, {Rational(5, 3), Rational(4, 7)}};
}

std::vector<InversionCheck> inversion_symbolic_checks(int epsilon,
                                                      const std::vector<std::pair<Rational, Rational>>& samples) {
  std::vector<InversionCheck> out;
  for (const auto& [h, k] : samples) {
    const GeneratorMap m = inversion_map(h, k, epsilon);
    out.push_back({h, k, epsilon, verify_automorphism(m), verify_involution(m)});
  }
  return out;
}

}  // namespace ellsl2
