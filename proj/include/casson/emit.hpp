#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "casson/formulas.hpp"
#include "casson/oracle.hpp"

#include "json.hpp"

namespace casson {

/// One record of the sweep/report table. All values pre-rendered as exact
/// strings so CSV and JSON emissions agree field-for-field by construction.
struct SweepRow {
  std::string manifold;
  std::string lambda_psl, lambda_sl;
  std::string h1, h1_z2_order;
  std::string lambda_zero, residual;
  std::string reducible, dihedral, klein, total;
  std::string oracle_ok;
  std::string caveats;

  static constexpr std::array<const char*, 13> kFields = {
      "manifold", "lambda_psl", "lambda_sl",   "h1",
      "h1_z2_order", "lambda_zero", "residual", "reducible",
      "dihedral", "klein",      "total",       "oracle_ok",
      "caveats"};

  std::array<const std::string*, 13> values() const {
    return {&manifold, &lambda_psl, &lambda_sl, &h1, &h1_z2_order,
            &lambda_zero, &residual, &reducible, &dihedral, &klein,
            &total, &oracle_ok, &caveats};
  }
};

inline std::string join_caveats(const std::vector<std::string>& caveats,
                                bool quiet) {
  if (quiet) return "";
  std::string s;
  for (std::size_t i = 0; i < caveats.size(); ++i) {
    if (i) s += ";";
    s += caveats[i];
  }
  return s;
}

inline SweepRow row_from_report(const InvariantReport& rep,
                                std::string oracle_ok = "",
                                bool quiet = false) {
  SweepRow row;
  row.manifold = rep.manifold;
  row.lambda_psl = rep.lambda_psl.str();
  row.lambda_sl = rep.lambda_sl ? rep.lambda_sl->str() : "";
  row.h1 = rep.h1.str();
  row.h1_z2_order = std::to_string(rep.h1_z2_order);
  row.lambda_zero = rep.lambda_zero ? rep.lambda_zero->str() : "";
  row.residual = rep.residual ? rep.residual->str() : "";
  if (rep.census) {
    row.reducible = std::to_string(rep.census->reducible);
    row.dihedral = std::to_string(rep.census->dihedral);
    row.klein = std::to_string(rep.census->klein);
    row.total = std::to_string(rep.census->total);
  }
  row.oracle_ok = std::move(oracle_ok);
  row.caveats = join_caveats(rep.caveats, quiet);
  return row;
}

inline std::string csv_header() {
  std::string s;
  for (std::size_t i = 0; i < SweepRow::kFields.size(); ++i) {
    if (i) s += ",";
    s += SweepRow::kFields[i];
  }
  return s;
}

inline std::string emit_csv(const std::vector<SweepRow>& rows) {
  std::string out = csv_header() + "\n";
  for (const auto& row : rows) {
    const auto vals = row.values();
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (i) out += ",";
      out += *vals[i];
    }
    out += "\n";
  }
  return out;
}

inline std::string emit_json(const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    const auto vals = row.values();
    for (std::size_t i = 0; i < vals.size(); ++i)
      obj[SweepRow::kFields[i]] = *vals[i];
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

inline std::string emit_plain(const std::vector<SweepRow>& rows) {
  std::array<std::size_t, 13> width{};
  for (std::size_t i = 0; i < width.size(); ++i)
    width[i] = std::string(SweepRow::kFields[i]).size();
  for (const auto& row : rows) {
    const auto vals = row.values();
    for (std::size_t i = 0; i < vals.size(); ++i)
      width[i] = std::max(width[i], vals[i]->size());
  }
  std::ostringstream os;
  auto line = [&](const std::array<const std::string*, 13>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (i) os << "  ";
      os << *vals[i] << std::string(width[i] - vals[i]->size(), ' ');
    }
    os << "\n";
  };
  std::array<std::string, 13> hdr;
  std::array<const std::string*, 13> hdrp;
  for (std::size_t i = 0; i < hdr.size(); ++i) {
    hdr[i] = SweepRow::kFields[i];
    hdrp[i] = &hdr[i];
  }
  line(hdrp);
  for (const auto& row : rows) line(row.values());
  return os.str();
}

enum class OutputFormat { plain, json, csv };

inline std::string emit(const std::vector<SweepRow>& rows, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::csv: return emit_csv(rows);
    case OutputFormat::json: return emit_json(rows);
    default: return emit_plain(rows);
  }
}

}  // namespace casson
