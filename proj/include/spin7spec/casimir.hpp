#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spin7spec/lie.hpp"

namespace spin7spec {

struct G2Weight {
  int a = 0, b = 0;
  bool operator==(const G2Weight& o) const { return a == o.a && b == o.b; }
  bool operator<(const G2Weight& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

struct Spin7Weight {
  int a = 0, b = 0, c = 0;
  bool operator==(const Spin7Weight& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const Spin7Weight& o) const {
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
  }
  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }
};

// Casimir eigenvalue closed forms for the normalization g = -(3/40) K.
inline Rational casimir_eigenvalue(const G2Weight& w) {
  long a = w.a, b = w.b;
  return rat(-8, 9) * rat(a * a + 3 * b * b + 3 * a * b + 5 * a + 9 * b);
}

inline Rational casimir_eigenvalue(const Spin7Weight& w) {
  long a = w.a, b = w.b, c = w.c;
  return rat(-1, 3) * rat(4 * a * a + 8 * b * b + 3 * c * c + 8 * a * b + 8 * b * c +
                          4 * c * a + 20 * a + 32 * b + 18 * c);
}

// Dimensions of the small G2 irreducibles used for isotypic bookkeeping.
inline int g2_dim(const G2Weight& w) {
  static const std::vector<std::pair<G2Weight, int>> table = {
      {{0, 0}, 1},  {{1, 0}, 7},  {{0, 1}, 14}, {{2, 0}, 27},
      {{1, 1}, 64}, {{3, 0}, 77}, {{0, 2}, 77},
  };
  for (auto& [k, d] : table)
    if (k == w) return d;
  throw std::invalid_argument("g2_dim: weight outside table " + w.str());
}

// The candidate G2 types scanned when decomposing a representation. The
// covering check in eigenspace_dims_certified guarantees this list is large
// enough for every space we decompose (all are <= 168-dimensional).
inline const std::vector<G2Weight>& g2_candidate_types() {
  static const std::vector<G2Weight> cands = {
      {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {3, 0}, {0, 2},
  };
  return cands;
}

// Isotypic multiplicities of a g2-representation given by its 14 matrices,
// certified exactly (annihilation + trace moments).
inline std::vector<std::pair<G2Weight, int>> g2_isotypic_multiplicities(
    const std::vector<ExactMat>& g2_mats) {
  ExactMat cas = casimir_g2(g2_mats);
  std::vector<Rational> lambdas;
  for (const auto& w : g2_candidate_types()) lambdas.push_back(casimir_eigenvalue(w));
  std::vector<Rational> dims = eigenspace_dims_certified(cas, lambdas);
  std::vector<std::pair<G2Weight, int>> out;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] == 0) continue;
    long n = dims[i].get_num().get_si();
    int d = g2_dim(g2_candidate_types()[i]);
    if (n % d != 0)
      throw std::runtime_error("isotypic dimension not divisible by irrep dimension");
    out.push_back({g2_candidate_types()[i], int(n / d)});
  }
  return out;
}

// (D^{1/3})^2 acts on the two Hom components with these values (the -47/9 and
// +1/9 shifts are fixed constants of the normalization).
struct SquaredDirac13 {
  Rational on_v10;  // -c_gamma + 1/9,  factor through V_(1,0)
  Rational on_v01;  // -c_gamma - 47/9, factor through V_(0,1)
};

inline SquaredDirac13 squared_dirac_13_eigenvalues(const Spin7Weight& gamma) {
  Rational c = casimir_eigenvalue(gamma);
  return {-c + rat(1, 9), -c - rat(47, 9)};
}

// Eigenvalue lower bound L_gamma = sqrt(-c - 47/9) - 7/6 when defined and
// positive; nullopt otherwise. The radicand is kept exact so threshold
// comparisons below are exact: L <= T  <=>  radicand <= (T + 7/6)^2.
struct EigenvalueBound {
  Rational radicand;
  double value = 0.0;
};

inline std::optional<EigenvalueBound> eigenvalue_bound(const Spin7Weight& gamma) {
  Rational rad = -casimir_eigenvalue(gamma) - rat(47, 9);
  if (rad <= 0) return std::nullopt;
  EigenvalueBound b{rad, std::sqrt(rad.get_d()) - 7.0 / 6.0};
  if (b.value <= 0) return std::nullopt;
  return b;
}

// All weights whose bound fails to push the spectrum above the threshold,
// enumerated over a + b + c <= cap with the monotonicity of -c_gamma checked
// on the scanned range (which justifies the finite enumeration).
inline std::vector<Spin7Weight> admissible_reps(const Rational& threshold = rat(5, 2),
                                                int cap = 8) {
  Rational cutoff = (threshold + rat(7, 6)) * (threshold + rat(7, 6));
  std::vector<Spin7Weight> out;
  for (int total = 0; total <= cap; ++total)
    for (int a = 0; a <= total; ++a)
      for (int b = 0; a + b <= total; ++b) {
        int c = total - a - b;
        Spin7Weight w{a, b, c};
        // monotonicity of -c in each index on the scanned range
        Rational mc = -casimir_eigenvalue(w);
        if (a > 0 && mc < -casimir_eigenvalue({a - 1, b, c}))
          throw std::logic_error("casimir monotonicity violated");
        if (b > 0 && mc < -casimir_eigenvalue({a, b - 1, c}))
          throw std::logic_error("casimir monotonicity violated");
        if (c > 0 && mc < -casimir_eigenvalue({a, b, c - 1}))
          throw std::logic_error("casimir monotonicity violated");

        Rational rad = mc - rat(47, 9);
        if (rad <= 0 || rad <= cutoff) out.push_back(w);
      }
  // sort by increasing |c_gamma|
  std::sort(out.begin(), out.end(), [](const Spin7Weight& x, const Spin7Weight& y) {
    Rational cx = -casimir_eigenvalue(x), cy = -casimir_eigenvalue(y);
    if (cx != cy) return cx < cy;
    return x < y;
  });
  return out;
}

// The six representations with tabulated blocks. The literal bound also
// retains (0,0,2), whose block spectrum is computed and checked to stay
// outside the window; see dirac_block tests.
inline const std::vector<Spin7Weight>& tabulated_six() {
  static const std::vector<Spin7Weight> six = {
      {0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {2, 0, 0},
  };
  return six;
}

}  // namespace spin7spec
