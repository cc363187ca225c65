#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "spin7spec/blocks.hpp"

namespace spin7spec {

// Instanton profile phi(t) = 1/(C e^{2t} + 1), C > 0; solves phi' = 2(phi^2 - phi).
struct ProfileFunction {
  double C = 1.0;

  explicit ProfileFunction(double c) : C(c) {
    if (!(C > 0)) throw std::invalid_argument("ProfileFunction: C must be positive");
  }

  double value(double t) const { return 1.0 / (C * std::exp(2 * t) + 1.0); }
  double deriv(double t) const {
    double e = C * std::exp(2 * t);
    return -2.0 * e / ((e + 1.0) * (e + 1.0));
  }
};

inline double ode_residual(const ProfileFunction& p, double t) {
  double phi = p.value(t);
  return std::abs(p.deriv(t) - 2.0 * (phi * phi - phi));
}

// Exact on-shell profile samples, parametrized by rational x = C e^{2t} > 0.
struct ExactProfilePoint {
  Rational phi;
  Rational phi_dot;
};

inline ExactProfilePoint exact_profile_point(const Rational& x) {
  if (x < 0) throw std::invalid_argument("exact_profile_point: x must be >= 0");
  Rational den = x + 1;
  ExactProfilePoint p;
  p.phi = 1 / den;
  p.phi_dot = rat(-2) * x / (den * den);
  return p;
}

inline Rational ode_residual_exact(const ExactProfilePoint& p) {
  Rational r = p.phi_dot - rat(2) * (p.phi * p.phi - p.phi);
  return r < 0 ? Rational(-r) : r;
}

// Residual of the reduced instanton equation F_{0a} = (3/4) f_{abc} F_{bc}
// with the invariant curvature F_{bc} = (phi^2-1)[I_b,I_c]_{g2} +
// (phi^2-phi)[I_b,I_c]_m. Rows: a = 1..7; columns: spin(7) basis coordinates.
inline ExactMat asd_residual(const Rational& phi, const Rational& phi_dot) {
  const auto& L = lie();
  Rational u = phi * phi - 1;
  Rational v = phi * phi - phi;
  ExactMat res(7, 21);
  for (int a = 0; a < 7; ++a) {
    res.at(a, a) += phi_dot;
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        Rational fabc = L.f(c, a, b);  // f_{abc}, m block orthonormal
        if (fabc == 0) continue;
        // F_{bc} expanded in the basis: g2 part scaled by u, m part by v
        for (int C = 0; C < 7; ++C) res.at(a, C) -= rat(3, 4) * fabc * v * L.f(C, b, c);
        for (int C = 7; C < 21; ++C) res.at(a, C) -= rat(3, 4) * fabc * u * L.f(C, b, c);
      }
  }
  return res;
}

inline double asd_residual_norm(const Rational& phi, const Rational& phi_dot) {
  ExactMat r = asd_residual(phi, phi_dot);
  double m = 0;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) m = std::max(m, std::abs(r.at(i, j).get_d()));
  return m;
}

// ---------------------------------------------------------------------------
// The fibrewise operator e^a I_a on Delta (x) spin(7).

inline const ExactMat& eaIa_matrix() {
  static const ExactMat op = [] {
    ExactMat m(168, 168);
    for (int a = 0; a < 7; ++a)
      m += ExactMat::kron(clifford_matrices()[a], lie().ad[a]);
    return m;
  }();
  return op;
}

// Closed-form eigenvalue table of e^a I_a, exactly certified: the listed
// minimal polynomial annihilates the matrix and the multiplicities solve the
// exact trace-moment system. Quadratic pairs carry one multiplicity each.
struct EaIaEntry {
  SurdValue eigenvalue;
  int multiplicity;
};

inline const std::vector<EaIaEntry>& eaIa_table() {
  static const std::vector<EaIaEntry> table = [] {
    const ExactMat& A = eaIa_matrix();

    // roots: 0, 4, -4, -2 and the conjugate pairs (3 +- sqrt 33)/3,
    // (-1 +- sqrt 57)/3 with minimal-polynomial factors
    // x, x-4, x+4, x+2, x^2 - 2x - 8/3, x^2 + (2/3)x - 56/9.
    std::vector<std::vector<Rational>> factors = {
        {rat(0), rat(1)},                     // x
        {rat(-4), rat(1)},                    // x - 4
        {rat(4), rat(1)},                     // x + 4
        {rat(2), rat(1)},                     // x + 2
        {rat(-8, 3), rat(-2), rat(1)},        // x^2 - 2x - 8/3
        {rat(-56, 9), rat(2, 3), rat(1)},     // x^2 + 2/3 x - 56/9
    };
    ExactMat ann = ExactMat::identity(168);
    for (const auto& f : factors) {
      ExactMat p(168, 168);
      ExactMat power = ExactMat::identity(168);
      for (size_t k = 0; k < f.size(); ++k) {
        ExactMat term = power;
        term *= f[k];
        p += term;
        if (k + 1 < f.size()) power = power * A;
      }
      ann = ann * p;
    }
    if (!ann.is_zero()) throw std::logic_error("eaIa_table: annihilation certificate failed");

    // moment system: unknown multiplicities per factor (conjugate roots share
    // theirs); power sums of quadratic-pair roots by Newton's recurrence
    int k = int(factors.size());
    std::vector<std::vector<Rational>> powsums;
    powsums.resize(size_t(k));
    for (int j = 0; j < k; ++j) {
      const auto& f = factors[size_t(j)];
      std::vector<Rational>& ps = powsums[size_t(j)];
      if (f.size() == 2) {
        Rational root = -f[0];
        Rational p = 1;
        for (int e = 0; e < k; ++e) {
          ps.push_back(p);
          p *= root;
        }
      } else {
        Rational s = -f[1], pr = f[0];  // sum and product of the pair
        ps = {rat(2), s};
        for (int e = 2; e < k; ++e) ps.push_back(s * ps[size_t(e - 1)] - pr * ps[size_t(e - 2)]);
      }
    }
    ExactMat V(k, k), t(k, 1);
    ExactMat power = ExactMat::identity(168);
    for (int e = 0; e < k; ++e) {
      t.at(e, 0) = power.trace();
      if (e + 1 < k) power = power * A;
      for (int j = 0; j < k; ++j) V.at(e, j) = powsums[size_t(j)][size_t(e)];
    }
    ExactMat mult = ExactMat::solve(V, t);
    std::vector<EaIaEntry> out;
    std::vector<std::vector<SurdValue>> roots = {
        {{0, 0, 1, 1}},
        {{4, 0, 1, 1}},
        {{-4, 0, 1, 1}},
        {{-2, 0, 1, 1}},
        {{3, 1, 33, 3}, {3, -1, 33, 3}},
        {{-1, 1, 57, 3}, {-1, -1, 57, 3}},
    };
    int total = 0;
    for (int j = 0; j < k; ++j) {
      Rational m = mult.at(j, 0);
      if (m.get_den() != 1 || m < 0) throw std::logic_error("eaIa_table: bad multiplicity");
      int mi = int(m.get_num().get_si());
      for (const auto& root : roots[size_t(j)]) {
        out.push_back({root, mi});
        total += mi;
      }
    }
    if (total != 168) throw std::logic_error("eaIa_table: multiplicities do not sum to 168");
    std::sort(out.begin(), out.end(), [](const EaIaEntry& a, const EaIaEntry& b) {
      return a.eigenvalue.value() < b.eigenvalue.value();
    });
    return out;
  }();
  return table;
}

inline SpectralResult eaIa_spectrum() {
  SpectralResult res;
  res.tolerance = 1e-9;
  for (const auto& e : eaIa_table()) {
    if (e.multiplicity == 0) continue;
    SpectralEntry s;
    s.value = e.eigenvalue.value();
    s.closed_form = e.eigenvalue;
    s.multiplicity = e.multiplicity;
    res.entries.push_back(s);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Spectral flow of the family D(s) = D_{A_Sigma} + s (e^a I_a)_gamma, with
// s = phi(t) in [0, 1]: s = 1 is the flat endpoint (t = -infinity), s = 0 the
// canonical connection.

struct FlowFamily {
  Spin7Weight gamma;
  ExactMat base;          // (D^0)_gamma
  ExactMat perturbation;  // (e^a I_a)_gamma
  ExactMat gram;          // flow gram (both operators self-adjoint for it)

  std::vector<double> eigenvalues(double s) const {
    ExactMat d = perturbation;
    Rational sr(s);
    sr.canonicalize();
    d *= sr;
    d += base;
    return gram_selfadjoint_eigenvalues(d, gram);
  }
};

inline FlowFamily flow_block(const Spin7Weight& gamma) {
  const DiracBlock& blk = dirac_block(gamma);
  return {gamma, blk.dirac_t(rat(0)), blk.perturbation, blk.flow_gram};
}

struct FlowResult {
  int flow = 0;                            // net count, negative-to-positive
  std::vector<std::vector<double>> curves; // curves[i] = samples of lambda_i over the sweep
  std::vector<double> s_grid;              // sweep parameter, from s = 1 down to 0
};

// Tracks eigenvalue curves of the family from the flat endpoint (s = 1) to
// the canonical connection (s = 0) and counts signed zero crossings.
inline FlowResult spectral_flow(const Spin7Weight& gamma, int steps = 200) {
  if (steps < 100) throw std::invalid_argument("spectral_flow: steps must be >= 100");
  FlowFamily fam = flow_block(gamma);
  FlowResult res;
  int n = fam.base.rows();
  res.curves.assign(size_t(n), {});
  for (int k = 0; k <= steps; ++k) {
    double s = 1.0 - double(k) / steps;
    res.s_grid.push_back(s);
    std::vector<double> eig = fam.eigenvalues(s);  // sorted
    for (int i = 0; i < n; ++i) res.curves[size_t(i)].push_back(eig[size_t(i)]);
  }
  for (int i = 0; i < n; ++i) {
    const auto& c = res.curves[size_t(i)];
    if (std::abs(c.front()) < 1e-6 || std::abs(c.back()) < 1e-6)
      throw std::runtime_error("spectral_flow: crossing within 1e-6 of an endpoint; refine steps");
    for (size_t k = 0; k + 1 < c.size(); ++k) {
      if (c[k] < 0 && c[k + 1] >= 0) res.flow += 1;
      if (c[k] >= 0 && c[k + 1] < 0) res.flow -= 1;
    }
  }
  return res;
}

// Total signed flow over the certified blocks, weighted by dim V_gamma.
inline int total_spectral_flow(int steps = 200) {
  int total = 0;
  for (const auto& gamma : certified_weights())
    total += spectral_flow(gamma, steps).flow * rep_dimension(gamma);
  return total;
}

// At the flat endpoint every eigenvalue must sit in {+-(7/2 + k)}.
inline bool endpoint_round_spectrum_check(const Spin7Weight& gamma, double tol = 1e-6) {
  FlowFamily fam = flow_block(gamma);
  for (double v : fam.eigenvalues(1.0)) {
    double r = std::abs(v) - 3.5;
    if (r < -tol || std::abs(r - std::round(r)) > tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Chern-Weil integrand: tr F^4 reduces by invariance to
// phi_dot * Q(u, v) * e^{0...7} with u = phi^2 - 1, v = phi^2 - phi; Q is a
// cubic with exact rational coefficients, interpolated from exact top-form
// evaluations.

namespace detail {

// Exact e^{01...7}-coefficient of tr F^4 for given (phi_dot, u, v).
inline Rational trF4_top(const Rational& phi_dot, const Rational& u, const Rational& v) {
  const auto& L = lie();
  // F components as ad matrices
  std::map<Mask, ExactMat> F;
  for (int a = 0; a < 7; ++a) {
    ExactMat m = L.ad[a];
    m *= phi_dot;
    F[(1u << 0) | (1u << (a + 1))] = std::move(m);
  }
  for (int b = 0; b < 7; ++b)
    for (int c = b + 1; c < 7; ++c) {
      ExactMat m(21, 21);
      for (int C = 0; C < 7; ++C)
        if (L.f(C, b, c) != 0) m += (v * L.f(C, b, c)) * L.ad[C];
      for (int C = 7; C < 21; ++C)
        if (L.f(C, b, c) != 0) m += (u * L.f(C, b, c)) * L.ad[C];
      F[(1u << (b + 1)) | (1u << (c + 1))] = std::move(m);
    }

  // H = F ^ F over 4-index masks
  std::map<Mask, ExactMat> H;
  for (auto& [p, Fp] : F)
    for (auto& [q, Fq] : F) {
      if (p >= q || (p & q)) continue;
      int sign = wedge_sign(p, q);
      ExactMat term = Fp * Fq + Fq * Fp;
      term *= rat(sign);
      auto it = H.find(p | q);
      if (it == H.end())
        H.emplace(p | q, std::move(term));
      else
        it->second += term;
    }

  Rational top = 0;
  for (auto& [m, Hm] : H) {
    Mask comp = 0xFFu & ~m;
    auto it = H.find(comp);
    if (it == H.end()) continue;
    top += rat(wedge_sign(m, comp)) * (Hm * it->second).trace();
  }
  return top;
}

struct ChernWeilCubic {
  // coefficients of u^3, u^2 v, u v^2, v^3 in Q(u, v)
  std::array<Rational, 4> c;

  double eval(double u, double v) const {
    return c[0].get_d() * u * u * u + c[1].get_d() * u * u * v + c[2].get_d() * u * v * v +
           c[3].get_d() * v * v * v;
  }
  Rational eval_exact(const Rational& u, const Rational& v) const {
    return c[0] * u * u * u + c[1] * u * u * v + c[2] * u * v * v + c[3] * v * v * v;
  }
};

inline const ChernWeilCubic& chern_weil_cubic() {
  static const ChernWeilCubic cubic = [] {
    // interpolate Q from exact evaluations at phi_dot = 1
    std::vector<std::pair<Rational, Rational>> pts = {
        {rat(1), rat(0)}, {rat(0), rat(1)}, {rat(1), rat(1)}, {rat(1), rat(2)}};
    ExactMat V(4, 4), t(4, 1);
    for (int i = 0; i < 4; ++i) {
      auto [u, v] = pts[size_t(i)];
      V.at(i, 0) = u * u * u;
      V.at(i, 1) = u * u * v;
      V.at(i, 2) = u * v * v;
      V.at(i, 3) = v * v * v;
      t.at(i, 0) = trF4_top(rat(1), u, v);
    }
    ExactMat c = ExactMat::solve(V, t);
    ChernWeilCubic out;
    for (int i = 0; i < 4; ++i) out.c[size_t(i)] = c.at(i, 0);
    // verify at two extra points, and that phi_dot scales linearly
    for (auto [u, v] : std::vector<std::pair<Rational, Rational>>{{rat(2), rat(3)},
                                                                  {rat(-1), rat(2)}}) {
      if (trF4_top(rat(1), u, v) != out.eval_exact(u, v))
        throw std::logic_error("chern_weil_cubic: interpolation check failed");
      if (trF4_top(rat(5), u, v) != rat(5) * out.eval_exact(u, v))
        throw std::logic_error("chern_weil_cubic: phi_dot linearity failed");
    }
    return out;
  }();
  return cubic;
}

}  // namespace detail

// (1/384 pi^4) integral of tr F^4 over R x S^7 by quadrature in t. The
// oversample factor scales the node count (the acceptance oracle uses 10x).
inline double chern_weil_integral(double C, int oversample = 1) {
  const detail::ChernWeilCubic& Q = detail::chern_weil_cubic();
  ProfileFunction prof(C);
  // vol(S^7) = pi^4/3; prefactor 1/(384 pi^4) * pi^4/3 = 1/1152
  auto integrand = [&](double t) {
    double phi = prof.value(t);
    return prof.deriv(t) * Q.eval(phi * phi - 1.0, phi * phi - phi);
  };
  double lo = -30.0 - 0.5 * std::log(C), hi = 30.0 - 0.5 * std::log(C);
  int n = 4000 * oversample;  // Simpson, even
  double h = (hi - lo) / n;
  double sum = integrand(lo) + integrand(hi);
  for (int i = 1; i < n; ++i) sum += integrand(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0 / 1152.0;
}

// Exact value of the same integral: substituting s = phi turns the integrand
// into a polynomial, integrated in closed form over (0,1).
inline Rational chern_weil_exact() {
  const detail::ChernWeilCubic& Q = detail::chern_weil_cubic();
  // integral dt of phi_dot Q = -int_0^1 Q(s^2-1, s^2-s) ds (phi runs 1 -> 0)
  // expand Q(s^2-1, s^2-s) and integrate monomials exactly
  std::vector<Rational> poly(7, Rational(0));  // degree <= 6 in s
  // u = s^2 - 1 -> coefficients (index = power of s): {-1, 0, 1}
  // v = s^2 - s -> {0, -1, 1}
  std::vector<Rational> u = {rat(-1), rat(0), rat(1)};
  std::vector<Rational> v = {rat(0), rat(-1), rat(1)};
  auto mul = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  std::vector<std::vector<Rational>> monos = {mul(mul(u, u), u), mul(mul(u, u), v),
                                              mul(mul(u, v), v), mul(mul(v, v), v)};
  for (int m = 0; m < 4; ++m)
    for (size_t d = 0; d < monos[size_t(m)].size(); ++d)
      poly[d] += Q.c[size_t(m)] * monos[size_t(m)][d];
  Rational integral = 0;
  for (size_t d = 0; d < poly.size(); ++d) integral += poly[d] / rat(long(d) + 1);
  return -integral / rat(1152);
}

}  // namespace spin7spec
