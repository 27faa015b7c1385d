#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace ellsl2 {

// One checked identity. `value` is the raw residual (a Frobenius norm or a
// coefficient gap); the check passes when value <= tol * scale.
struct Residual {
  std::string name;
  double value = 0.0;
  double scale = 1.0;
  // Informational metrics are reported but never fail a run.
  bool informational = false;

  bool passes(double tol) const { return informational || value <= tol * scale; }
};

struct ResidualReport {
  std::vector<Residual> entries;

  void add(std::string name, double value, double scale = 1.0) {
    entries.push_back({std::move(name), value, scale, false});
  }
  void add_info(std::string name, double value) { entries.push_back({std::move(name), value, 1.0, true}); }
  void append(const ResidualReport& other, const std::string& prefix = {}) {
    for (auto e : other.entries) {
      e.name = prefix + e.name;
      entries.push_back(std::move(e));
    }
  }

  bool passes(double tol) const {
    return std::all_of(entries.begin(), entries.end(), [tol](const Residual& r) { return r.passes(tol); });
  }

  // Largest value / scale over the non-informational entries.
  double max_scaled() const {
    double m = 0.0;
    for (const auto& r : entries) {
      if (!r.informational) m = std::max(m, r.value / r.scale);
    }
    return m;
  }

  const Residual* find(const std::string& name) const {
    for (const auto& r : entries) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }
};

}  // namespace ellsl2
