#include "lab/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "ellsl2/errors.hpp"

namespace ellsl2::lab {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("complex value must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(complex_to_json(m(i, j)));
  }
  return {{"dim", m.rows()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto d = j.at("dim").get<Eigen::Index>();
  const json& e = j.at("entries");
  if (d < 0 || e.size() != static_cast<std::size_t>(d * d)) {
    throw DomainError("matrix JSON: entries must hold dim * dim values");
  }
  ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index c = 0; c < d; ++c) m(i, c) = complex_from_json(e[static_cast<std::size_t>(i * d + c)]);
  }
  return m;
}

json series_to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(complex_to_json(c));
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const json& j) {
  const auto n = j.at("order").get<std::size_t>();
  const json& c = j.at("coeffs");
  if (c.size() != n + 1) throw DomainError("series JSON: coeffs must hold order + 1 values");
  std::vector<Complex> v;
  v.reserve(n + 1);
  for (const auto& x : c) v.push_back(complex_from_json(x));
  return TruncatedSeries(std::move(v));
}

json ncpoly_to_json(const NCPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"a", m.a}, {"b", m.b}, {"c", m.c}, {"coeff", c.get_str()}});
  }
  return out;
}

json generators_to_json(const GeneratorTriple& g) {
  return {{"Jp", matrix_to_json(g.Jp)}, {"Jm", matrix_to_json(g.Jm)}, {"J0", matrix_to_json(g.J0)}};
}

json report_to_json(const ResidualReport& r, double tol) {
  json residuals = json::object();
  json scales = json::object();
  json info = json::object();
  json failed = json::array();
  for (const auto& e : r.entries) {
    if (e.informational) {
      info[e.name] = e.value;
      continue;
    }
    residuals[e.name] = e.value;
    scales[e.name] = e.scale;
    if (!e.passes(tol)) failed.push_back(e.name);
  }
  return {{"residuals", residuals}, {"scales", scales}, {"informational", info}, {"failed", failed}};
}

std::string number_to_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string complex_to_text(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace ellsl2::lab

namespace ellsl2::lab {

namespace {

void dump_into(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        dump_into(value, out);
      }
      out += '}';
      return;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_into(j[i], out);
      }
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? number_to_text(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

}  // namespace ellsl2::lab
