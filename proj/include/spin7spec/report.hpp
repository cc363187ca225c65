#pragma once

#include <json.hpp>

#include <cstdio>
#include <string>

#include "spin7spec/instanton.hpp"
#include "spin7spec/moduli.hpp"

namespace spin7spec {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Fixed 12-decimal formatting keeps every emitted file byte-stable.
inline std::string fmt_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

inline Json weight_json(const Spin7Weight& w) { return Json::array({w.a, w.b, w.c}); }

inline Json gweight_json(const G2Weight& w) { return Json::array({w.a, w.b}); }

inline Json matrix_json(const ExactMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json multivector_json(const Multivector& w) {
  Json terms = Json::array();
  for (auto& [m, c] : w.terms()) {
    std::string idx;
    for (int i = 0; i < 8; ++i)
      if ((m >> i) & 1u) idx += char('0' + i);
    terms.push_back(Json::array({idx, rat_str(c)}));
  }
  return terms;
}

inline Json spectral_entry_json(const SpectralEntry& e) {
  Json j;
  j["value"] = fmt_double(e.value);
  j["closed_form"] = e.closed_form ? Json(e.closed_form->str()) : Json(nullptr);
  j["multiplicity"] = e.multiplicity;
  j["gamma"] = weight_json(e.gamma);
  return j;
}

inline Json spectral_result_json(const SpectralResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tolerance"] = fmt_double(r.tolerance);
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(spectral_entry_json(e));
  j["eigenvalues"] = entries;
  return j;
}

inline Json critical_rate_json(const CriticalRate& r) {
  Json j;
  j["rate"] = fmt_double(r.rate);
  j["closed_form"] = r.closed_form ? Json(r.closed_form->str()) : Json(nullptr);
  j["lambda"] = fmt_double(r.lambda);
  j["gamma"] = weight_json(r.gamma);
  j["multiplicity"] = r.multiplicity;
  j["label"] = r.label;
  return j;
}

}  // namespace spin7spec
