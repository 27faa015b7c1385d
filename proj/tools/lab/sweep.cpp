#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "ellsl2/autos.hpp"
#include "ellsl2/deform.hpp"
#include "ellsl2/errors.hpp"
#include "lab/cli.hpp"
#include "lab/json_io.hpp"

namespace ellsl2::lab {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw DomainError("cannot parse '" + s + "' as a number");
  return v;
}

double scaled_max(const ResidualReport& r, std::initializer_list<const char*> names) {
  double worst = 0.0;
  for (const char* n : names) {
    const Residual* e = r.find(n);
    if (e) worst = std::max(worst, e->value / e->scale);
  }
  return worst;
}

SweepRow run_cell(const SweepCell& cell, const RunConfig& config) {
  SweepRow row;
  row.cell = cell;
  try {
    const SpinRep rep = build_spin(HalfInteger::parse(cell.j));
    const std::size_t n = config.order.value_or(default_order(rep.j));
    const DeformParams p{cell.h, cell.k};
    const DeformedTriplet t = build_elliptic_triplet(rep.gens, p, n);
    const ResidualReport rel = relation_residuals(t);
    row.families.emplace_back("eq12", scaled_max(rel, {"eq12"}));
    row.families.emplace_back("eq13", scaled_max(rel, {"eq13"}));
    row.families.emplace_back("eq14", scaled_max(rel, {"eq14"}));
    row.families.emplace_back("jacobi", scaled_max(rel, {"jacobi_f_dG", "f_eq15_eq16", "f_eq15_eq17"}));

    const double c2 = rep.j.value() * (rep.j.value() + 1.0);
    double cas = 0.0;
    for (CasimirForm f : {CasimirForm::classical, CasimirForm::jordanian, CasimirForm::elliptic}) {
      const ComplexMatrix m = casimir(t, f);
      cas = std::max(cas, frobenius(m - c2 * ComplexMatrix::Identity(m.rows(), m.cols())) /
                              (std::max(1.0, c2) * t.scale()));
    }
    row.families.emplace_back("casimir", cas);

    const GeneratorTriple back = invert_map(t);
    row.families.emplace_back(
        "inversion", std::max(frobenius(back.Jp - rep.gens.Jp), frobenius(back.Jm - rep.gens.Jm)) / t.scale());

    const DeformedTriplet uh = build_jordanian_triplet(rep.gens, cell.h, n);
    const DeformedTriplet lifted = lift_uh_to_elliptic(uh, cell.k);
    row.families.emplace_back(
        "two_path", std::max(frobenius(lifted.Xhat - t.Xhat), frobenius(lifted.Yhat - t.Yhat)) / t.scale());

    if (config.scalar_checks) {
      const ResidualReport s = scalar_shift_identities(cell.k, 50, config.seed);
      row.families.emplace_back("scalar", s.max_scaled());
    }
  } catch (const DomainError& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepCell> sweep_grid(const RunConfig& config) {
  std::vector<SweepCell> grid;
  const auto js = split_list(config.js);
  const auto hs = split_list(config.hs);
  const auto ks = split_list(config.ks);
  for (const auto& j : js) {
    for (const auto& h : hs) {
      for (const auto& k : ks) grid.push_back({j, parse_number(h), parse_number(k)});
    }
  }
  return grid;
}

std::vector<SweepRow> sweep(const RunConfig& config, const std::vector<SweepCell>& grid) {
  unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(grid.size(), 1));
  std::vector<SweepRow> rows(grid.size());
  for (std::size_t start = 0; start < grid.size(); start += workers) {
    std::vector<std::future<SweepRow>> batch;
    const std::size_t end = std::min(grid.size(), start + workers);
    for (std::size_t i = start; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, run_cell, grid[i], config));
    }
    for (std::size_t i = start; i < end; ++i) rows[i] = batch[i - start].get();
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::vector<std::string> columns;
  for (const auto& r : rows) {
    for (const auto& [name, v] : r.families) {
      if (std::find(columns.begin(), columns.end(), name) == columns.end()) columns.push_back(name);
    }
  }
  std::string out = "j,h,k";
  for (const auto& c : columns) out += "," + c;
  out += ",error\n";
  for (const auto& r : rows) {
    out += csv_field(r.cell.j) + "," + number_to_text(r.cell.h) + "," + number_to_text(r.cell.k);
    for (const auto& c : columns) {
      out += ",";
      for (const auto& [name, v] : r.families) {
        if (name == c) out += number_to_text(v);
      }
    }
    out += "," + csv_field(r.error) + "\n";
  }
  return out;
}

}  // namespace ellsl2::lab
