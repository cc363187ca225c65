#pragma once

#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "spin7spec/blocks.hpp"

namespace spin7spec {

// A critical decay rate nu: nu + 5/2 lies in the spectrum of the twisted
// Dirac operator on the link. Multiplicity = eigenspace dim x dim V_gamma.
struct CriticalRate {
  double rate = 0;
  std::optional<SurdValue> closed_form;  // of the rate when lambda is closed form
  double lambda = 0;
  Spin7Weight gamma;
  int multiplicity = 0;
  std::string label;  // dilation / translation / unidentified
};

struct CriticalRateSet {
  std::vector<CriticalRate> rates;      // strictly inside the window
  std::vector<CriticalRate> endpoints;  // sitting on the window boundary
};

inline std::string deformation_label(double rate) {
  if (std::abs(rate + 2.0) < 1e-9) return "dilation";
  if (std::abs(rate + 1.0) < 1e-9) return "translation";
  return "unidentified";
}

inline CriticalRateSet critical_rates(double lo, double hi, double tol = 1e-9) {
  SpectralResult spec = eigenvalues_in_window(lo + 2.5, hi + 2.5, tol);
  CriticalRateSet out;
  for (const auto& e : spec.entries) {
    CriticalRate r;
    r.lambda = e.value;
    r.rate = e.value - 2.5;
    if (e.closed_form) {
      SurdValue s = *e.closed_form;
      // rate = (p + q sqrt(d))/r - 5/2
      s.p = s.p * 2 - 5 * s.r;
      s.q *= 2;
      s.r *= 2;
      long g = std::abs(std::gcd(std::gcd(s.p, s.q), s.r));
      if (g > 1) {
        s.p /= g;
        s.q /= g;
        s.r /= g;
      }
      r.closed_form = s;
    }
    r.gamma = e.gamma;
    r.multiplicity = e.multiplicity;
    r.label = deformation_label(r.rate);
    // window convention (lo, hi]: a rate at the left boundary is reported
    // as an endpoint, one at the right boundary counts as inside
    if (r.rate > lo + tol)
      out.rates.push_back(r);
    else
      out.endpoints.push_back(r);
  }
  return out;
}

// Virtual dimension of the moduli space at a non-critical rate nu in
// (-5/2, 0): the base index at rate -5/2 is the cited constant 0 (an
// index-theorem input, not computed here); each
// crossed critical rate adds its multiplicity.
struct ModuliDimension {
  double rate = 0;
  int virtual_dim = 0;
  int base_index = 0;
  std::vector<CriticalRate> crossings;
};

inline ModuliDimension virtual_dimension(double nu, int base_index = 0) {
  if (!(nu > -2.5 && nu < 0))
    throw std::invalid_argument("virtual_dimension: rate must lie in (-5/2, 0)");
  ModuliDimension out;
  out.rate = nu;
  out.base_index = base_index;
  out.virtual_dim = base_index;
  // eigenvalues in (0, nu + 5/2) of the link operator
  SpectralResult spec = eigenvalues_in_window(0.0, 2.5);
  for (const auto& e : spec.entries) {
    if (e.value <= 1e-9) continue;
    double rate = e.value - 2.5;
    if (std::abs(rate - nu) < 1e-9)
      throw std::invalid_argument("virtual_dimension: rate is critical");
    if (rate < nu) {
      CriticalRate r;
      r.lambda = e.value;
      r.rate = rate;
      r.gamma = e.gamma;
      r.multiplicity = e.multiplicity;
      r.label = deformation_label(rate);
      out.crossings.push_back(r);
      out.virtual_dim += e.multiplicity;
    }
  }
  return out;
}

// The coupled Laplacian has no critical weight in (-6, 0): lambda(lambda+6)
// is negative exactly there, and the operator is nonnegative.
struct WeightGap {
  double lo = -6.0, hi = 0.0;
};

inline WeightGap laplacian_weight_gap() { return {}; }

inline Rational laplacian_indicial_value(const Rational& lambda) {
  return lambda * (lambda + 6);
}

// Tags the known deformation families of the instanton.
struct DeformationReport {
  std::vector<CriticalRate> rates;
};

inline DeformationReport deformation_rate_interpretation() {
  DeformationReport rep;
  CriticalRateSet rs = critical_rates(-2.5 + 1e-9, 0.0);
  for (auto& r : rs.rates) rep.rates.push_back(r);
  for (auto& r : rs.endpoints) rep.rates.push_back(r);
  return rep;
}

}  // namespace spin7spec
