#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "ellsl2/autos.hpp"
#include "ellsl2/deform.hpp"
#include "ellsl2/elliptic.hpp"
#include "ellsl2/errors.hpp"
#include "ellsl2/hopf.hpp"
#include "ellsl2/rewrite.hpp"
#include "lab/cli.hpp"
#include "lab/json_io.hpp"

namespace ellsl2::lab {

namespace {

struct Output {
  json doc;
  std::string csv;
  int exit_code = kExitPass;
};

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::exception&) {
    throw DomainError("cannot parse '" + text + "' as re,im");
  }
}

std::string report_csv(const ResidualReport& r, double tol) {
  std::string out = "check,value,scale,tolerance,pass\n";
  for (const auto& e : r.entries) {
    out += csv_field(e.name) + "," + number_to_text(e.value) + "," + number_to_text(e.scale) + "," +
           (e.informational ? std::string("informational") : number_to_text(tol * e.scale)) + "," +
           (e.passes(tol) ? "true" : "false") + "\n";
  }
  return out;
}

std::string matrices_csv(const std::vector<std::pair<std::string, const ComplexMatrix*>>& mats) {
  std::string out = "matrix,row,col,value\n";
  for (const auto& [name, m] : mats) {
    for (Eigen::Index i = 0; i < m->rows(); ++i) {
      for (Eigen::Index j = 0; j < m->cols(); ++j) {
        out += name + "," + std::to_string(i) + "," + std::to_string(j) + "," + complex_to_text((*m)(i, j)) + "\n";
      }
    }
  }
  return out;
}

Output residual_output(json doc, const ResidualReport& r, double tol) {
  Output o;
  const bool pass = r.passes(tol);
  doc.update(report_to_json(r, tol));
  doc["tolerance"] = tol;
  doc["pass"] = pass;
  o.doc = std::move(doc);
  o.csv = report_csv(r, tol);
  o.exit_code = pass ? kExitPass : kExitResidual;
  return o;
}

double identity_gap(const ComplexMatrix& m, double value) {
  return frobenius(m - value * ComplexMatrix::Identity(m.rows(), m.cols()));
}

std::size_t order_for(const RunConfig& c, HalfInteger j) { return c.order.value_or(default_order(j)); }

DeformParams params_of(const RunConfig& c) { return {c.h, c.k}; }

json params_json(const RunConfig& c) { return {{"h", c.h}, {"k", c.k}, {"tolerance", c.tol}}; }

// ---- rep -----------------------------------------------------------------

Output cmd_rep_build(const RunConfig& c) {
  const SpinRep rep = build_spin(HalfInteger::parse(c.j));
  Output o;
  o.doc = {{"command", "rep build"}, {"j", rep.j.str()}, {"dim", rep.dim()}, {"m", rep.m_labels}};
  o.doc.update(generators_to_json(rep.gens));
  o.csv = matrices_csv({{"Jp", &rep.gens.Jp}, {"Jm", &rep.gens.Jm}, {"J0", &rep.gens.J0}});
  return o;
}

// ---- deform --------------------------------------------------------------

DeformedTriplet triplet_for(const RunConfig& c, const SpinRep& rep) {
  const std::size_t n = order_for(c, rep.j);
  DeformedTriplet t = c.jordanian ? build_jordanian_triplet(rep.gens, c.h, n)
                                  : build_elliptic_triplet(rep.gens, params_of(c), n);
  t.j = rep.j;
  return t;
}

Output cmd_deform_build(const RunConfig& c) {
  const SpinRep rep = build_spin(HalfInteger::parse(c.j));
  const DeformedTriplet t = triplet_for(c, rep);
  Output o;
  o.doc = {{"command", "deform build"},
           {"j", rep.j.str()},
           {"h", c.h},
           {"k", c.jordanian ? 1.0 : c.k},
           {"order", t.order},
           {"provenance", to_string(t.provenance)},
           {"Xhat", matrix_to_json(t.Xhat)},
           {"Yhat", matrix_to_json(t.Yhat)},
           {"J0", matrix_to_json(t.J0)}};
  o.csv = matrices_csv({{"Xhat", &t.Xhat}, {"Yhat", &t.Yhat}, {"J0", &t.J0}});
  return o;
}

ResidualReport deform_checks(const RunConfig& c, const SpinRep& rep) {
  const std::size_t n = order_for(c, rep.j);
  const double casimir_value = rep.j.value() * (rep.j.value() + 1.0);
  ResidualReport r;
  const DeformedTriplet uh = build_jordanian_triplet(rep.gens, c.h, n);
  r.append(jordanian_relation_residuals(uh.Xhat, uh.Yhat, uh.J0, c.h, n));

  const DeformedTriplet t = c.jordanian ? uh : build_elliptic_triplet(rep.gens, params_of(c), n);
  if (!c.jordanian) {
    r.append(relation_residuals(t));
    const DeformedTriplet lifted = lift_uh_to_elliptic(uh, c.k);
    r.add("eq25_eq26_two_path",
          std::max(frobenius(lifted.Xhat - t.Xhat), frobenius(lifted.Yhat - t.Yhat)), t.scale());
  }
  const GeneratorTriple back = invert_map(t);
  r.add("eq3_eq9_roundtrip", std::max(frobenius(back.Jp - rep.gens.Jp), frobenius(back.Jm - rep.gens.Jm)),
        t.scale());
  const DeformedTriplet k1 = build_elliptic_triplet(rep.gens, {c.h, 1.0}, n);
  r.add("eq18_eq21_k2_eq_1", std::max(frobenius(k1.Xhat - uh.Xhat), frobenius(k1.Yhat - uh.Yhat)), uh.scale());

  const char* names[] = {"eq27", "eq28", "eq29"};
  int i = 0;
  for (CasimirForm f : {CasimirForm::classical, CasimirForm::jordanian, CasimirForm::elliptic}) {
    r.add(names[i++], identity_gap(casimir(t, f), casimir_value), std::max(1.0, casimir_value) * t.scale());
  }
  return r;
}

Output cmd_deform_verify(const RunConfig& c) {
  const SpinRep rep = build_spin(HalfInteger::parse(c.j));
  json doc = {{"command", "deform verify"}, {"j", rep.j.str()}, {"jordanian", c.jordanian}};
  doc.update(params_json(c));
  return residual_output(std::move(doc), deform_checks(c, rep), c.tol);
}

// ---- hopf ----------------------------------------------------------------

CoproductTriple coproduct_for(const RunConfig& c, const SpinRep& r1, const SpinRep& r2) {
  const CoproductSource s = parse_coproduct_source(c.which.empty() ? "1" : c.which);
  switch (s) {
    case CoproductSource::delta1: return delta1(params_of(c), r1, r2);
    case CoproductSource::delta_uh: return delta_uh(c.h, r1, r2);
    case CoproductSource::delta2: return delta2(params_of(c), r1, r2);
  }
  throw DomainError("unknown coproduct");
}

Output cmd_hopf_delta(const RunConfig& c) {
  const SpinRep r1 = build_spin(HalfInteger::parse(c.j1));
  const SpinRep r2 = build_spin(HalfInteger::parse(c.j2));
  const CoproductTriple ct = coproduct_for(c, r1, r2);
  Output o;
  o.doc = {{"command", "hopf delta"}, {"which", to_string(ct.source)}, {"j1", r1.j.str()}, {"j2", r2.j.str()},
           {"h", c.h}, {"k", ct.source == CoproductSource::delta_uh ? 1.0 : c.k}, {"order", ct.triple.order},
           {"DX", matrix_to_json(ct.DX())}, {"DY", matrix_to_json(ct.DY())}, {"DJ0", matrix_to_json(ct.DJ0())}};
  o.csv = matrices_csv({{"DX", &ct.DX()}, {"DY", &ct.DY()}, {"DJ0", &ct.DJ0()}});
  return o;
}

ResidualReport hopf_checks(const RunConfig& c, const SpinRep& r1, const SpinRep& r2, const SpinRep& r3,
                           CoproductSource s) {
  RunConfig cc = c;
  cc.which = to_string(s);
  const CoproductTriple ct = coproduct_for(cc, r1, r2);
  ResidualReport r = verify_coproduct(ct);
  const double scale = ct.triple.scale();
  if (s == CoproductSource::delta1) {
    r.add("eq48", frobenius(delta1_x_from_factors(params_of(c), r1, r2) - ct.DX()), scale);
  } else if (s == CoproductSource::delta2 && c.h != 0.0) {
    r.add("eq49", frobenius(delta2_x_nested(params_of(c), r1, r2) - ct.DX()), scale);
  } else if (s == CoproductSource::delta_uh) {
    r.append(uh_coassociativity(c.h, r1, r2, r3));
  }
  return r;
}

Output cmd_hopf_verify(const RunConfig& c) {
  const SpinRep r1 = build_spin(HalfInteger::parse(c.j1));
  const SpinRep r2 = build_spin(HalfInteger::parse(c.j2));
  const SpinRep r3 = build_spin(HalfInteger::parse(c.j3));
  const CoproductSource s = parse_coproduct_source(c.which.empty() ? "1" : c.which);
  json doc = {{"command", "hopf verify"}, {"which", to_string(s)}, {"j1", r1.j.str()}, {"j2", r2.j.str()}};
  if (s == CoproductSource::delta_uh) doc["j3"] = r3.j.str();
  doc.update(params_json(c));
  return residual_output(std::move(doc), hopf_checks(c, r1, r2, r3, s), c.tol);
}

// ---- auto ----------------------------------------------------------------

json symbolic_json(const std::vector<InversionCheck>& checks, bool& ok) {
  json samples = json::array();
  ok = true;
  for (const auto& chk : checks) {
    auto list = [](const SymbolicReport& rep) {
      json a = json::array();
      for (const auto& m : rep.checks) a.push_back({{"check", m.name}, {"residual", ncpoly_to_json(m.residual)}});
      return a;
    };
    samples.push_back({{"h", chk.h.get_str()}, {"k", chk.k.get_str()}, {"epsilon", chk.epsilon},
                       {"automorphism", list(chk.automorphism)}, {"involution", list(chk.involution)},
                       {"zero", chk.ok()}});
    ok = ok && chk.ok();
  }
  return samples;
}

struct AutoResult {
  ResidualReport residuals;
  json details;
  bool symbolic_ok = true;
};

AutoResult auto_checks(const RunConfig& c, const SpinRep& rep, const std::string& which) {
  AutoResult out;
  const std::size_t n = order_for(c, rep.j);
  if (which == "sign") {
    const DeformedTriplet t = c.jordanian ? build_jordanian_triplet(rep.gens, c.h, n)
                                          : build_elliptic_triplet(rep.gens, params_of(c), n);
    const ShiftImage img = sign_involution(t);
    out.residuals = img.residuals;
    const ShiftImage twice = sign_involution(img.image);
    out.residuals.add("eq50_squared",
                      std::max(frobenius(twice.image.Xhat - t.Xhat), frobenius(twice.image.Yhat - t.Yhat)));
    const GeneratorMap m = sign_map();
    const SymbolicReport a = verify_automorphism(m);
    const SymbolicReport inv = verify_involution(m);
    out.symbolic_ok = a.all_zero() && inv.all_zero();
    out.details = {{"which", "sign"}, {"epsilon", nullptr},
                   {"symbolic_check", {{"status", out.symbolic_ok ? "verified" : "failed"}, {"map", "eq50"}}}};
    return out;
  }
  if (which == "uh-half") {
    const DeformedTriplet t = build_jordanian_triplet(rep.gens, c.h, n);
    const ShiftImage img = half_period_shift_uh(t, 1);
    out.residuals = img.residuals;
    const ShiftImage twice = half_period_shift_uh(t, 2);
    for (const auto& e : twice.residuals.entries) {
      if (e.name != "eq59") out.residuals.entries.push_back({"eq58_" + e.name, e.value, e.scale, e.informational});
    }
    const GeneratorTriple g = induced_generators(twice);
    out.residuals.add("eq58_trivial_on_sl2",
                      std::max({frobenius(g.Jp - rep.gens.Jp), frobenius(g.Jm - rep.gens.Jm),
                                frobenius(g.J0 - rep.gens.J0)}),
                      t.scale());
    bool ok = true;
    std::vector<std::pair<Rational, Rational>> samples;
    for (const auto& s : default_rational_samples()) samples.emplace_back(s.first, Rational(1));
    const json sym = symbolic_json(inversion_symbolic_checks(1, samples), ok);
    out.symbolic_ok = ok;
    out.details = {{"which", "uh-half"}, {"epsilon", 1}, {"offset", complex_to_json(img.spec.offset(t.params))},
                   {"symbolic_check", {{"status", ok ? "verified" : "failed"}, {"map", "eq55_eq57"}, {"samples", sym}}}};
    return out;
  }
  if (which == "ell-iKp" || which == "ell-2KiKp") {
    const ShiftSpec spec = which == "ell-iKp" ? ShiftSpec::elliptic_iKp() : ShiftSpec::elliptic_2K_iKp();
    const DeformedTriplet t = build_elliptic_triplet(rep.gens, params_of(c), n);
    const ShiftImage img = period_shift_elliptic(t, spec);
    out.residuals = img.residuals;
    out.residuals.append(scalar_shift_identities(c.k, 50, c.seed), "scalar_");
    bool ok = true;
    const json sym = symbolic_json(inversion_symbolic_checks(spec.epsilon, default_rational_samples()), ok);
    out.symbolic_ok = ok;
    out.details = {{"which", which}, {"epsilon", spec.epsilon}, {"offset", complex_to_json(spec.offset(t.params))},
                   {"symbolic_check", {{"status", ok ? "verified" : "failed"}, {"map", "eq65"}, {"samples", sym}}}};
    return out;
  }
  throw DomainError("unknown shift '" + which + "' (expected sign|uh-half|ell-iKp|ell-2KiKp)");
}

Output cmd_auto_shift(const RunConfig& c) {
  const SpinRep rep = build_spin(HalfInteger::parse(c.j));
  AutoResult ar = auto_checks(c, rep, c.which.empty() ? "sign" : c.which);
  json doc = {{"command", "auto shift"}, {"j", rep.j.str()}};
  doc.update(params_json(c));
  doc.update(ar.details);
  Output o = residual_output(std::move(doc), ar.residuals, c.tol);
  if (!ar.symbolic_ok) {
    o.doc["pass"] = false;
    o.exit_code = kExitResidual;
  }
  o.csv += "symbolic_check,,,," + std::string(ar.symbolic_ok ? "true" : "false") + "\n";
  return o;
}

// ---- rewrite -------------------------------------------------------------

Output cmd_rewrite_nf(const RunConfig& c) {
  const NCPoly p = parse_expression(c.expr);
  Output o;
  o.doc = ncpoly_to_json(p);
  std::string csv = "a,b,c,coeff\n";
  for (const auto& [m, coeff] : p.terms()) {
    csv += std::to_string(m.a) + "," + std::to_string(m.b) + "," + std::to_string(m.c) + "," +
           csv_field(coeff.get_str()) + "\n";
  }
  o.csv = csv;
  return o;
}

Word random_word(std::mt19937_64& rng, std::size_t length, bool allow_inverse) {
  std::uniform_int_distribution<int> pick(0, allow_inverse ? 3 : 2);
  Word w(length);
  for (auto& l : w) l = static_cast<Letter>(pick(rng));
  return w;
}

ResidualReport rewrite_checks(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ResidualReport r;
  int order_mismatch = 0;
  int localization_mismatch = 0;
  for (int i = 0; i < 50; ++i) {
    const Word w = random_word(rng, 6, true);
    if (nf(w, ReductionOrder::leftmost) != nf(w, ReductionOrder::rightmost)) ++order_mismatch;
    const NCPoly lhs = NCPoly::jp() * (NCPoly::jpinv() * nf(w));
    if (!(lhs == nf(w))) ++localization_mismatch;
  }
  r.add("nf_order_independence_mismatches", order_mismatch);
  r.add("nf_localization_mismatches", localization_mismatch);
  const NCPoly bracket = parse_expression("[Jp,Jm] - 2*J0");
  r.add("eq2_bracket_nonzero_terms", static_cast<double>(bracket.terms().size()));
  return r;
}

// ---- elliptic ------------------------------------------------------------

Output cmd_elliptic(const RunConfig& c) {
  Output o;
  if (c.action == "K") {
    const double K = complete_K(c.k);
    json kp = nullptr;
    if (c.k > 0.0) kp = complete_Kprime(c.k);
    o.doc = {{"command", "elliptic K"}, {"k", c.k}, {"K", K}, {"Kprime", kp}};
    o.csv = "key,value\nk," + number_to_text(c.k) + "\nK," + number_to_text(K) + "\nKprime," +
            (kp.is_null() ? std::string() : number_to_text(kp.get<double>())) + "\n";
    return o;
  }
  if (c.action == "eval") {
    const Complex u = parse_complex(c.u);
    const JacobiValues v = jacobi_numeric(u, c.k);
    if (v.pole) throw DomainError("pole: sn has a pole at u = " + complex_to_text(u));
    o.doc = {{"command", "elliptic eval"}, {"u", complex_to_json(u)}, {"k", c.k}, {"sn", complex_to_json(v.sn)},
             {"cn", complex_to_json(v.cn)}, {"dn", complex_to_json(v.dn)}};
    o.csv = "key,value\nsn," + complex_to_text(v.sn) + "\ncn," + complex_to_text(v.cn) + "\ndn," +
            complex_to_text(v.dn) + "\n";
    return o;
  }
  if (c.action == "periods") {
    const EllipticConstants ec = periods(c.k);
    auto pair = [](const PeriodPair& p) { return json::array({complex_to_json(p.first), complex_to_json(p.second)}); };
    o.doc = {{"command", "elliptic periods"}, {"k", ec.k}, {"K", ec.K}, {"Kprime", ec.Kprime},
             {"periods", {{"sn", pair(ec.sn)}, {"cn", pair(ec.cn)}, {"dn", pair(ec.dn)}}}};
    std::string csv = "function,first,second\n";
    for (const auto& [name, p] : {std::pair{"sn", ec.sn}, std::pair{"cn", ec.cn}, std::pair{"dn", ec.dn}}) {
      csv += std::string(name) + "," + complex_to_text(p.first) + "," + complex_to_text(p.second) + "\n";
    }
    o.csv = csv;
    return o;
  }
  throw std::logic_error("unhandled elliptic action");
}

// ---- verify-all ----------------------------------------------------------

Output cmd_verify_all(const RunConfig& c) {
  const SpinRep rep = build_spin(HalfInteger::parse(c.j));
  const SpinRep half = build_spin(HalfInteger::from_twice(1));
  const bool numeric_k = c.k > 0.0 && c.k < 1.0;
  const bool nonzero_h = c.h != 0.0;

  ResidualReport r;
  json skipped = json::array();
  RunConfig cc = c;
  cc.jordanian = false;
  r.append(deform_checks(cc, rep), "deform.");

  for (CoproductSource s : {CoproductSource::delta1, CoproductSource::delta_uh, CoproductSource::delta2}) {
    ResidualReport h = hopf_checks(cc, rep, half, half, s);
    h.entries.erase(std::remove_if(h.entries.begin(), h.entries.end(),
                                   [](const Residual& e) { return e.name == "cocommutativity_gap"; }),
                    h.entries.end());
    r.append(h, "hopf." + to_string(s) + ".");
  }
  if (nonzero_h) {
    r.append(uh_coassociativity(c.h, half, half, half), "hopf.delta_uh.half_cubed.");
  }

  bool symbolic_ok = true;
  const std::vector<std::string> shifts = {"sign", "uh-half", "ell-iKp", "ell-2KiKp"};
  for (const auto& which : shifts) {
    if (which == "uh-half" && !nonzero_h) {
      skipped.push_back("auto.uh-half (h = 0)");
      continue;
    }
    if ((which == "ell-iKp" || which == "ell-2KiKp") && !(numeric_k && nonzero_h)) {
      skipped.push_back("auto." + which + " (requires 0 < k < 1 and h != 0)");
      continue;
    }
    AutoResult ar = auto_checks(cc, rep, which);
    symbolic_ok = symbolic_ok && ar.symbolic_ok;
    r.append(ar.residuals, "auto." + which + ".");
  }
  for (int eps : {1, -1}) {
    bool ok = true;
    symbolic_json(inversion_symbolic_checks(eps, default_rational_samples()), ok);
    r.add(std::string("auto.eq65_eps") + (eps > 0 ? "+1" : "-1") + "_nonzero_residuals", ok ? 0.0 : 1.0);
    symbolic_ok = symbolic_ok && ok;
  }

  r.append(rewrite_checks(c.seed), "rewrite.");

  if (numeric_k) {
    const EllipticConstants ec = periods(c.k);
    r.add_info("elliptic.K", ec.K);
    r.add_info("elliptic.Kprime", ec.Kprime);
    const JacobiSeries js = sn_cn_dn_series(c.k, 25);
    double gap = 0.0;
    for (double x : {-0.4, -0.2, 0.1, 0.3, 0.4}) {
      const JacobiValues v = jacobi_numeric(x, c.k);
      gap = std::max({gap, std::abs(v.sn - ts_eval(js.sn, x)), std::abs(v.cn - ts_eval(js.cn, x)),
                      std::abs(v.dn - ts_eval(js.dn, x))});
    }
    r.add("elliptic.series_vs_numeric", gap);
  } else {
    skipped.push_back("elliptic numeric checks (requires 0 < k < 1)");
  }

  json doc = {{"command", "verify-all"}, {"j", rep.j.str()}, {"skipped", skipped}, {"symbolic_ok", symbolic_ok}};
  doc.update(params_json(c));
  Output o = residual_output(std::move(doc), r, c.tol);
  if (!symbolic_ok) {
    o.doc["pass"] = false;
    o.exit_code = kExitResidual;
  }
  return o;
}

// ---- sweep ---------------------------------------------------------------

Output cmd_sweep(const RunConfig& c) {
  const std::vector<SweepCell> grid = sweep_grid(c);
  const std::vector<SweepRow> rows = sweep(c, grid);
  Output o;
  bool any_error = false;
  bool any_fail = false;
  json arr = json::array();
  for (const auto& row : rows) {
    json fam = json::object();
    for (const auto& [name, v] : row.families) {
      fam[name] = v;
      if (!(v <= c.tol)) any_fail = true;
    }
    if (!row.error.empty()) any_error = true;
    arr.push_back({{"j", row.cell.j}, {"h", row.cell.h}, {"k", row.cell.k}, {"max_scaled_residual", fam},
                   {"error", row.error.empty() ? json(nullptr) : json(row.error)}});
  }
  o.doc = {{"command", "sweep"}, {"tolerance", c.tol}, {"rows", arr}};
  o.csv = sweep_to_csv(rows);
  o.exit_code = any_fail ? kExitResidual : any_error ? kExitDomain : kExitPass;
  return o;
}

}  // namespace

RunResult run(const RunConfig& c) {
  Output o;
  try {
    if (c.verb == "rep" && c.action == "build") {
      o = cmd_rep_build(c);
    } else if (c.verb == "deform" && c.action == "build") {
      o = cmd_deform_build(c);
    } else if (c.verb == "deform" && c.action == "verify") {
      o = cmd_deform_verify(c);
    } else if (c.verb == "hopf" && c.action == "delta") {
      o = cmd_hopf_delta(c);
    } else if (c.verb == "hopf" && c.action == "verify") {
      o = cmd_hopf_verify(c);
    } else if (c.verb == "auto" && c.action == "shift") {
      o = cmd_auto_shift(c);
    } else if (c.verb == "rewrite" && c.action == "nf") {
      o = cmd_rewrite_nf(c);
    } else if (c.verb == "elliptic") {
      o = cmd_elliptic(c);
    } else if (c.verb == "verify-all") {
      o = cmd_verify_all(c);
    } else if (c.verb == "sweep") {
      if (c.js.empty() || c.hs.empty() || c.ks.empty()) {
        return {kExitUsage, "usage error: sweep requires non-empty --js, --hs and --ks\n"};
      }
      o = cmd_sweep(c);
      // A sweep reports a table; JSON only on request.
      if (c.format == OutputFormat::csv) return {o.exit_code, o.csv};
      return {o.exit_code, dump_json(o.doc) + "\n"};
    } else {
      return {kExitUsage, "usage error: unknown command '" + c.verb + " " + c.action + "'\n"};
    }
  } catch (const DomainError& e) {
    const std::string what = e.what();
    const std::string type = what.rfind("pole", 0) == 0 ? "pole" : "domain_error";
    if (c.format == OutputFormat::csv) return {kExitDomain, "error,message\n" + type + "," + csv_field(what) + "\n"};
    const json err = {{"error", {{"type", type}, {"message", what}, {"command", c.verb + (c.action.empty() ? "" : " " + c.action)}}}};
    return {kExitDomain, dump_json(err) + "\n"};
  }
  if (c.format == OutputFormat::csv) return {o.exit_code, o.csv};
  return {o.exit_code, dump_json(o.doc) + "\n"};
}

}  // namespace ellsl2::lab
