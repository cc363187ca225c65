#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spin7spec/intertwiners.hpp"

namespace spin7spec {

// Closed-form eigenvalue (p + q sqrt(d)) / r.
struct SurdValue {
  long p = 0, q = 0, d = 1, r = 1;

  double value() const { return (double(p) + double(q) * std::sqrt(double(d))) / double(r); }
  std::string str() const {
    std::string num;
    if (q == 0) {
      num = std::to_string(p);
    } else {
      if (p != 0) num = std::to_string(p);
      if (q == 1)
        num += (p != 0 ? "+" : "");
      else if (q == -1)
        num += "-";
      else
        num += (p != 0 && q > 0 ? "+" : "") + std::to_string(q) + "*";
      num += "sqrt(" + std::to_string(d) + ")";
    }
    if (r == 1) return num;
    return "(" + num + ")/" + std::to_string(r);
  }
};

struct SpectralEntry {
  double value = 0;
  std::optional<SurdValue> closed_form;
  int multiplicity = 0;
  Spin7Weight gamma;
};

struct SpectralResult {
  std::vector<SpectralEntry> entries;  // sorted by value
  double tolerance = 1e-9;
};

// The Frobenius block of the twisted Dirac family for one gamma: all the
// operators of the q-basis calculus as exact hom_dim x hom_dim matrices.
// D(t) = d_const + t d_lin.
struct DiracBlock {
  Spin7Weight gamma;
  int hom_dim = 0;
  std::vector<Intertwiner> q;
  ExactMat gram;       // <q_i, q_j> = Tr(q_i^dag q_j), orthonormal target
  ExactMat flow_gram;  // same with the ad-invariant target metric
  ExactMat d_rho;        // (D^rho)_gamma
  ExactMat d_rho_tilde;  // (D~^rho)_gamma = M^{-1} (D^rho) M
  ExactMat m_gamma;      // the involution in the q basis
  ExactMat phi_mat;      // phi action in the q basis
  ExactMat d_const, d_lin;
  ExactMat cas_source;    // rho_{Delta x V_gamma}(Cas_spin7) in the q basis
  ExactMat target_cas;    // rho_{spin7}(Cas_g2) in the q basis
  ExactMat perturbation;  // (e^a I_a)_gamma in the q basis

  ExactMat dirac_t(const Rational& t) const {
    ExactMat d = d_const;
    ExactMat lin = d_lin;
    lin *= t;
    d += lin;
    return d;
  }
};

namespace detail {

// Coordinates of hom-space elements in the q basis via precomputed pivot
// positions; exact, with a full residual check certifying span membership.
struct QCoordinateSolver {
  std::vector<const Intertwiner*> qs;
  std::vector<std::pair<int, int>> pivot_positions;
  ExactMat pivot_system;  // k x k

  explicit QCoordinateSolver(const std::vector<Intertwiner>& basis) {
    for (const auto& q : basis) qs.push_back(&q);
    int k = int(basis.size());
    int rows = basis[0].matrix.rows(), cols = basis[0].matrix.cols();
    ExactMat stack(k, rows * cols);
    for (int s = 0; s < k; ++s)
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          stack.at(s, i * cols + j) = basis[s].matrix.at(i, j);
    ExactMat red = stack;
    std::vector<int> pivots = red.rref();
    if (int(pivots.size()) != k)
      throw std::logic_error("QCoordinateSolver: dependent basis");
    pivot_system = ExactMat(k, k);
    for (int p = 0; p < k; ++p) {
      pivot_positions.push_back({pivots[p] / cols, pivots[p] % cols});
      for (int s = 0; s < k; ++s) pivot_system.at(p, s) = stack.at(s, pivots[p]);
    }
  }

  // x with sum_s x_s q_s = R; throws if R is outside the span.
  ExactMat coords(const ExactMat& R) const {
    int k = int(qs.size());
    ExactMat rhs(k, 1);
    for (int p = 0; p < k; ++p)
      rhs.at(p, 0) = R.at(pivot_positions[p].first, pivot_positions[p].second);
    ExactMat x = ExactMat::solve(pivot_system, rhs);
    ExactMat recon(R.rows(), R.cols());
    for (int s = 0; s < k; ++s) {
      ExactMat term = qs[s]->matrix;
      term *= x.at(s, 0);
      recon += term;
    }
    if (!(recon == R)) throw std::logic_error("coords: element outside the q span");
    return x;
  }

  // Matrix of a hom-space operator given its action on each q.
  template <typename Op>
  ExactMat operator_matrix(Op&& op) const {
    int k = int(qs.size());
    ExactMat out(k, k);
    for (int j = 0; j < k; ++j) {
      ExactMat x = coords(op(qs[j]->matrix));
      for (int i = 0; i < k; ++i) out.at(i, j) = x.at(i, 0);
    }
    return out;
  }
};

// Gram matrix <q_i, q_j> = Tr(q_i^dag q_j) with the source inner product
// I_8 (x) model Gram and a chosen symmetric form on the 21-dim target.
inline ExactMat hom_gram(const std::vector<Intertwiner>& qs, const RepModel& mdl,
                         const ExactMat& target_form) {
  int k = int(qs.size());
  ExactMat ginv = mdl.gram.inverse();
  std::vector<ExactMat> weighted;  // target_form * q_b
  for (const auto& q : qs) weighted.push_back(target_form * q.matrix);
  ExactMat g(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      Rational s = 0;
      // sum over target rows and the 8 spinor slots of row-block pairings
      for (int r = 0; r < 21; ++r)
        for (int mu = 0; mu < 8; ++mu)
          for (int i = 0; i < mdl.dim; ++i) {
            const Rational& left = qs[size_t(a)].matrix.at(r, mu * mdl.dim + i);
            if (left == 0) continue;
            for (int j = 0; j < mdl.dim; ++j) {
              const Rational& right = weighted[size_t(b)].at(r, mu * mdl.dim + j);
              if (right == 0) continue;
              s += left * ginv.at(i, j) * right;
            }
          }
      g.at(a, b) = s;
      g.at(b, a) = s;
    }
  return g;
}

// Embedding Lambda^2(R^7) -> Lambda^2_21(R^8) = spin(7) through pi_21, in
// spin(7)-basis coordinates (used to transport ad to the target model).
inline const ExactMat& target_embedding() {
  static const ExactMat theta = [] {
    const auto& b2 = form_basis(2, 7);
    ExactMat m(21, 21);
    for (size_t j = 0; j < b2.size(); ++j) {
      Multivector w = Multivector::from_mask(7, b2[j], rat(1)).embed8();
      Multivector p21 = project(w, {Group::Spin7, 2, 21});
      ExactMat c = lie().expand(p21);
      for (int i = 0; i < 21; ++i) m.at(i, int(j)) = c.at(i, 0);
    }
    return m;
  }();
  return theta;
}

}  // namespace detail

inline const DiracBlock& dirac_block(const Spin7Weight& gamma) {
  static std::map<Spin7Weight, DiracBlock> cache;
  auto it = cache.find(gamma);
  if (it != cache.end()) return it->second;

  DiracBlock blk;
  blk.gamma = gamma;
  blk.q = hom_space(gamma);
  blk.hom_dim = int(blk.q.size());
  const RepModel& mdl = model(gamma);
  detail::QCoordinateSolver solver(blk.q);

  ExactMat id8 = ExactMat::identity(8);
  ExactMat idd = ExactMat::identity(mdl.dim);
  const ExactMat& M = involution_M();
  const Representation& delta = rho_delta_rep();

  // source-side composition operators
  ExactMat op_rho(8 * mdl.dim, 8 * mdl.dim);
  ExactMat op_rho_tilde(8 * mdl.dim, 8 * mdl.dim);
  for (int a = 0; a < 7; ++a) {
    op_rho += ExactMat::kron(delta.mats[a], mdl.rep.mats[a]);
    op_rho_tilde += ExactMat::kron(M * delta.mats[a] * M, mdl.rep.mats[a]);
  }
  ExactMat op_phi = ExactMat::kron(phi_action_matrix(), idd);
  ExactMat op_m = ExactMat::kron(M, idd);

  // Cas(Delta x V) = Cas_Delta x 1 + 1 x Cas_V + 2 sum G^{AB} rho_A x rho_B;
  // Cas_V is the closed-form scalar (checked at model build time).
  static const ExactMat cas_delta = casimir_spin7(rho_delta_rep());
  ExactMat op_cas = ExactMat::kron(cas_delta, idd);
  {
    ExactMat scal = ExactMat::identity(8 * mdl.dim);
    scal *= casimir_eigenvalue(gamma);
    op_cas += scal;
    const ExactMat& ginv = lie().gram_inv;
    for (int A = 0; A < 21; ++A)
      for (int B = 0; B < 21; ++B) {
        if (ginv.at(A, B) == 0) continue;
        ExactMat cross = ExactMat::kron(delta.mats[A], mdl.rep.mats[B]);
        cross *= rat(2) * ginv.at(A, B);
        op_cas += cross;
      }
  }

  blk.d_rho = solver.operator_matrix([&](const ExactMat& Q) { return Q * op_rho; });
  blk.d_rho_tilde =
      solver.operator_matrix([&](const ExactMat& Q) { return Q * op_rho_tilde; });
  blk.phi_mat = solver.operator_matrix([&](const ExactMat& Q) { return Q * op_phi; });
  blk.m_gamma = solver.operator_matrix([&](const ExactMat& Q) { return Q * op_m; });
  blk.cas_source = solver.operator_matrix([&](const ExactMat& Q) { return Q * op_cas; });

  ExactMat cas_g2_tgt = casimir_g2(target_g2_action());
  blk.target_cas =
      solver.operator_matrix([&](const ExactMat& Q) { return cas_g2_tgt * Q; });

  // (D^t)_gamma = (D^rho) + 2 (D~^rho) + ((t-1)/2) phi
  blk.d_lin = rat(1, 2) * blk.phi_mat;
  blk.d_const = blk.d_rho + rat(2) * blk.d_rho_tilde - blk.d_lin;

  // flow perturbation (e^a I_a)_gamma: h -> sum_a ad(I_a) o h o (E^a^T (x) 1),
  // with ad transported to the Lambda^2(R^7) target model through pi_21.
  const ExactMat& theta = detail::target_embedding();
  ExactMat theta_inv = theta.inverse();
  blk.perturbation = solver.operator_matrix([&](const ExactMat& Q) {
    ExactMat out(Q.rows(), Q.cols());
    for (int a = 0; a < 7; ++a) {
      ExactMat ad_model = theta_inv * lie().ad[a] * theta;
      out += ad_model * (Q * ExactMat::kron(clifford_matrices()[a].transpose(), idd));
    }
    return out;
  });

  blk.gram = detail::hom_gram(blk.q, mdl, ExactMat::identity(21));
  blk.flow_gram = detail::hom_gram(blk.q, mdl, theta.transpose() * lie().gram * theta);
  return cache.emplace(gamma, std::move(blk)).first->second;
}

inline std::vector<Rational> q_norms(const Spin7Weight& gamma) {
  const DiracBlock& blk = dirac_block(gamma);
  std::vector<Rational> out;
  for (int i = 0; i < blk.hom_dim; ++i) out.push_back(blk.gram.at(i, i));
  return out;
}

// Numeric eigenvalues of a Gram-self-adjoint exact matrix: conjugate by the
// Cholesky factor of the Gram and use a symmetric solver.
inline std::vector<double> gram_selfadjoint_eigenvalues(const ExactMat& D, const ExactMat& G) {
  Eigen::MatrixXd g = G.to_double();
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) throw std::runtime_error("gram not positive definite");
  Eigen::MatrixXd L = llt.matrixL();
  Eigen::MatrixXd A = L.transpose() * D.to_double() * L.transpose().fullPivLu().inverse();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es((A + A.transpose()) / 2.0);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + A.rows());
  std::sort(out.begin(), out.end());
  return out;
}

// Closed forms of the t = 0 spectra, per representation.
inline const std::vector<SurdValue>& closed_form_spectrum(const Spin7Weight& gamma) {
  static const std::map<Spin7Weight, std::vector<SurdValue>> table = {
      {{0, 0, 0}, {{1, 0, 1, 2}}},
      {{1, 0, 0}, {{-3, 2, 105, 6}, {-3, -2, 105, 6}, {-3, 0, 1, 2}}},
      {{0, 0, 1}, {{-3, -8, 6, 6}, {-3, 8, 6, 6}, {-5, 0, 1, 2}, {3, 0, 1, 2}}},
      {{0, 1, 0},
       {{-1, -2, 17, 2}, {-3, -2, 105, 6}, {-1, 2, 17, 2}, {-7, 0, 1, 2}, {-3, 2, 105, 6}}},
      {{2, 0, 0}, {{-25, 0, 1, 6}, {23, 0, 1, 6}}},
      {{1, 0, 1},
       {{-1, -4, 5, 2},
        {-3, -4, 33, 6},
        {1, 4, 37, 6},
        {-1, 4, 5, 2},
        {1, -4, 37, 6},
        {-3, 4, 33, 6},
        {-19, 0, 1, 6}}},
  };
  auto it = table.find(gamma);
  if (it == table.end()) throw std::invalid_argument("no closed-form table for " + gamma.str());
  return it->second;
}

inline SpectralResult spectrum_t0(const Spin7Weight& gamma, double tol = 1e-9) {
  const DiracBlock& blk = dirac_block(gamma);
  std::vector<double> eigs = gram_selfadjoint_eigenvalues(blk.dirac_t(rat(0)), blk.gram);
  SpectralResult res;
  res.tolerance = tol;
  bool have_table = true;
  try {
    closed_form_spectrum(gamma);
  } catch (const std::invalid_argument&) {
    have_table = false;
  }
  for (double v : eigs) {
    SpectralEntry e;
    e.value = v;
    e.multiplicity = 1;
    e.gamma = gamma;
    if (have_table) {
      bool matched = false;
      for (const auto& s : closed_form_spectrum(gamma))
        if (std::abs(s.value() - v) < tol) {
          e.closed_form = s;
          matched = true;
          break;
        }
      if (!matched)
        throw std::runtime_error("spectrum_t0: eigenvalue fails closed-form match for " +
                                 gamma.str());
    }
    res.entries.push_back(e);
  }
  // cluster within 1e-7 (no block has a smaller true gap)
  std::vector<SpectralEntry> clustered;
  for (const auto& e : res.entries) {
    if (!clustered.empty() && std::abs(clustered.back().value - e.value) < 1e-7)
      clustered.back().multiplicity += 1;
    else
      clustered.push_back(e);
  }
  res.entries = std::move(clustered);
  return res;
}

// The weights whose blocks are built for window queries: the bound-faithful
// admissible list (includes (0,0,2), whose spectrum stays outside the
// certified window; checked in tests).
inline const std::vector<Spin7Weight>& certified_weights() {
  static const std::vector<Spin7Weight> w = admissible_reps();
  return w;
}

// Aggregated spectrum over [lo, hi] with multiplicity = eigenspace dim x
// dim V_gamma. The window must stay inside the certified range [-5/2, 5/2].
inline SpectralResult eigenvalues_in_window(double lo, double hi, double tol = 1e-9) {
  if (lo > hi) throw std::invalid_argument("eigenvalues_in_window: empty ordering");
  if (lo < -2.5 - 1e-12 || hi > 2.5 + 1e-12)
    throw std::invalid_argument("eigenvalues_in_window: window exceeds certified range");
  SpectralResult res;
  res.tolerance = tol;
  for (const auto& gamma : certified_weights()) {
    SpectralResult blockspec = spectrum_t0(gamma, 1e-6);
    for (const auto& e : blockspec.entries) {
      if (e.value < lo - tol || e.value > hi + tol) continue;
      SpectralEntry copy = e;
      copy.multiplicity = e.multiplicity * rep_dimension(gamma);
      res.entries.push_back(copy);
    }
  }
  std::sort(res.entries.begin(), res.entries.end(),
            [](const SpectralEntry& a, const SpectralEntry& b) { return a.value < b.value; });
  return res;
}

// Label layout of the p basis: (i,j,k) factor, (m,n) target, and the
// leading q-coefficient convention of the tabulated lists.
struct PBasisRow {
  Spin7Weight through;
  G2Weight target;
  Rational leading;
};

inline const std::vector<PBasisRow>& p_basis_layout(const Spin7Weight& gamma) {
  static const std::map<Spin7Weight, std::vector<PBasisRow>> table = {
      {{1, 0, 0},
       {{{0, 0, 1}, {1, 0}, rat(1)}, {{1, 0, 1}, {1, 0}, rat(1)}, {{1, 0, 1}, {0, 1}, rat(-1)}}},
      {{0, 0, 1},
       {{{1, 0, 0}, {1, 0}, rat(1)},
        {{0, 1, 0}, {1, 0}, rat(3)},
        {{0, 1, 0}, {0, 1}, rat(1)},
        {{0, 0, 2}, {1, 0}, rat(1)}}},
      {{0, 1, 0},
       {{{0, 0, 1}, {1, 0}, rat(1)},
        {{1, 0, 1}, {1, 0}, rat(-4)},
        {{1, 0, 1}, {0, 1}, rat(1)},
        {{0, 1, 1}, {1, 0}, rat(1)},
        {{0, 1, 1}, {0, 1}, rat(1)}}},
      {{2, 0, 0}, {{{1, 0, 1}, {1, 0}, rat(1)}, {{1, 0, 1}, {0, 1}, rat(1)}}},
      {{1, 0, 1},
       {{{1, 0, 0}, {1, 0}, rat(1)},
        {{0, 1, 0}, {1, 0}, rat(1)},
        {{0, 1, 0}, {0, 1}, rat(1, 4)},
        {{0, 0, 2}, {1, 0}, rat(-1)},
        {{1, 1, 0}, {0, 1}, rat(7, 2)},
        {{1, 0, 2}, {1, 0}, rat(1)},
        {{1, 0, 2}, {0, 1}, rat(1)}}},
  };
  auto it = table.find(gamma);
  if (it == table.end()) throw std::invalid_argument("p_basis_layout: no table for " + gamma.str());
  return it->second;
}

// p in terms of q: joint eigenvectors of the source Spin(7) Casimir (value
// c_{(i,j,k)}) and the target g2 Casimir (value c_{(m,n)}), scaled by the
// layout's leading-coefficient convention.
inline ExactMat p_basis_change(const Spin7Weight& gamma) {
  if (gamma == Spin7Weight{0, 0, 0})
    throw std::invalid_argument("p_basis_change: undefined for the trivial block");
  const DiracBlock& blk = dirac_block(gamma);
  const auto& layout = p_basis_layout(gamma);
  ExactMat P(int(layout.size()), blk.hom_dim);
  for (size_t r = 0; r < layout.size(); ++r) {
    Rational ccas = casimir_eigenvalue(layout[r].through);
    Rational ctgt = casimir_eigenvalue(layout[r].target);
    ExactMat stacked(2 * blk.hom_dim, blk.hom_dim);
    for (int i = 0; i < blk.hom_dim; ++i)
      for (int j = 0; j < blk.hom_dim; ++j) {
        stacked.at(i, j) = blk.cas_source.at(i, j) - (i == j ? ccas : Rational(0));
        stacked.at(blk.hom_dim + i, j) = blk.target_cas.at(i, j) - (i == j ? ctgt : Rational(0));
      }
    ExactMat ker = stacked.kernel();
    if (ker.cols() != 1)
      throw std::logic_error("p_basis_change: joint eigenspace not one-dimensional");
    int lead = 0;
    while (lead < blk.hom_dim && ker.at(lead, 0) == 0) ++lead;
    Rational scale = layout[r].leading / ker.at(lead, 0);
    for (int j = 0; j < blk.hom_dim; ++j) P.at(int(r), j) = ker.at(j, 0) * scale;
  }
  return P;
}

}  // namespace spin7spec
