#pragma once

#include <gmpxx.h>

#include <string>

namespace spin7spec {

// Exact rational scalar. All structure constants, projectors and block
// matrices in this library are computed over Q; doubles only appear in the
// final eigenvalue extraction and quadrature steps.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat_parse(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

// Serialized as "p" or "p/q", matching the JSON wire format.
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace spin7spec
