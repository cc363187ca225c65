#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spin7spec/linalg.hpp"
#include "spin7spec/multivector.hpp"
#include "spin7spec/projections.hpp"

namespace spin7spec {

// beta(w)(u) = -u . w realizes a 2-form as an antisymmetric endomorphism of
// 1-forms. Returned in the Lambda^1 coordinate order of form_basis(1, n).
inline Multivector beta_apply(const Multivector& w, const Multivector& u) {
  return -contract(u, w);
}

inline ExactMat beta_matrix(const Multivector& w, int n) {
  if (!w.is_homogeneous(2)) throw std::invalid_argument("beta: wrong grade");
  return form_op_matrix(1, 1, n, [&](const Multivector& u) { return beta_apply(w, u); });
}

// Inverse of beta on antisymmetric matrices: coefficient of e^{ij} (i<j) is
// M[i][j] in Lambda^1 coordinate order.
inline Multivector beta_inverse(const ExactMat& M, int n) {
  const auto& b1 = form_basis(1, n);
  Multivector w(n);
  for (size_t i = 0; i < b1.size(); ++i)
    for (size_t j = i + 1; j < b1.size(); ++j)
      w.add_term(b1[i] | b1[j], M.at(int(i), int(j)));
  return w;
}

// Leibniz extension of beta(w) to Lambda^k.
inline Multivector derivation_act(const Multivector& w, const Multivector& x) {
  Multivector out(x.dim());
  for (auto& [m, c] : x.terms()) {
    for (int pos = 0; pos < 8; ++pos) {
      if (!((m >> pos) & 1u)) continue;
      Mask rest = m & ~(1u << pos);
      Multivector repl = beta_apply(w, Multivector::from_mask(x.dim(), 1u << pos, rat(1)));
      if (repl.is_zero()) continue;
      int s = wedge_sign(1u << pos, rest);
      out += (c * s) * wedge(repl, Multivector::from_mask(x.dim(), rest, rat(1)));
    }
  }
  return out;
}

// A Lie algebra representation: one exact matrix per basis element.
struct Representation {
  int dim = 0;
  std::vector<ExactMat> mats;
};

inline Representation rep_on_forms_of(const std::vector<Multivector>& generators, int k, int n) {
  Representation rep;
  rep.dim = int(form_basis(k, n).size());
  for (const auto& g : generators)
    rep.mats.push_back(
        form_op_matrix(k, k, n, [&](const Multivector& x) { return derivation_act(g, x); }));
  return rep;
}

// Concrete bases of spin(7) in Lambda^2_21(R^8), g2 in Lambda^2_14(R^7), the
// reductive complement m, the normalized Killing metric and the structure
// constants. Basis index convention: A = 0..6 is m (I~_{A+1}), A = 7..20 g2.
struct LieData {
  std::vector<Multivector> m_basis;      // I~_a, dim-8 2-forms
  std::vector<Multivector> g2_basis7;    // dim-7 2-forms in Lambda^2_14
  std::vector<Multivector> spin7_basis;  // m then embedded g2

  ExactMat basis_coords;  // 28 x 21, columns = spin7_basis in Lambda^2(R^8) coords
  std::vector<ExactMat> ad;  // 21 of 21x21; ad[A](.) = [I_A, .]
  ExactMat killing;          // K(A,B) = Tr(ad_A ad_B)
  ExactMat gram;             // g = -(3/40) K
  ExactMat gram_inv;
  ExactMat gram_g2_inv;  // inverse of the g2 block of gram

  static constexpr int kMStart = 0;
  static constexpr int kG2Start = 7;

  // Expands a 2-form on R^8 lying in Lambda^2_21 into basis coordinates.
  ExactMat expand(const Multivector& w) const {
    return ExactMat::solve(basis_coords, to_coords(w, 2, 8));
  }

  Multivector bracket(const Multivector& x, const Multivector& y) const {
    ExactMat c = beta_matrix(x, 8) * beta_matrix(y, 8) - beta_matrix(y, 8) * beta_matrix(x, 8);
    return beta_inverse(c, 8);
  }

  Rational f(int C, int A, int B) const { return ad[A].at(C, B); }

  Rational killing_form(const Multivector& x, const Multivector& y) const {
    ExactMat cx = expand(x), cy = expand(y);
    return (cx.transpose() * killing * cy).at(0, 0);
  }
};

inline const LieData& lie() {
  static const LieData data = [] {
    LieData d;

    // m = span{I~_a = -e^0 ^ e^a + (1/3) e^a . phi}
    for (int a = 1; a <= 7; ++a) {
      Multivector ea = Multivector::basis(7, {a});
      Multivector it = -wedge(e0(), ea.embed8()) + rat(1, 3) * contract(ea, phi7()).embed8();
      d.m_basis.push_back(it);
    }

    // g2 = exact nullspace of w -> w . phi on Lambda^2(R^7)
    ExactMat contraction = form_op_matrix(2, 1, 7, [&](const Multivector& w) {
      return contract(w, phi7());
    });
    ExactMat null = contraction.kernel();
    if (null.cols() != 14) throw std::logic_error("g2 basis: wrong dimension");
    for (int j = 0; j < 14; ++j) d.g2_basis7.push_back(from_coords(null.col(j), 2, 7));

    d.spin7_basis = d.m_basis;
    for (const auto& g : d.g2_basis7) d.spin7_basis.push_back(g.embed8());

    d.basis_coords = ExactMat(28, 21);
    for (int j = 0; j < 21; ++j) {
      ExactMat c = to_coords(d.spin7_basis[j], 2, 8);
      for (int i = 0; i < 28; ++i) d.basis_coords.at(i, j) = c.at(i, 0);
    }

    // structure constants from so(8) commutators, re-expanded in the basis
    std::vector<ExactMat> fmat(21, ExactMat(21, 21));
    for (int A = 0; A < 21; ++A)
      for (int B = A + 1; B < 21; ++B) {
        Multivector br = d.bracket(d.spin7_basis[A], d.spin7_basis[B]);
        ExactMat c = d.expand(br);
        for (int C = 0; C < 21; ++C) {
          fmat[A].at(C, B) = c.at(C, 0);
          fmat[B].at(C, A) = -c.at(C, 0);
        }
      }
    d.ad = std::move(fmat);

    d.killing = ExactMat(21, 21);
    for (int A = 0; A < 21; ++A)
      for (int B = A; B < 21; ++B) {
        Rational k = (d.ad[A] * d.ad[B]).trace();
        d.killing.at(A, B) = k;
        d.killing.at(B, A) = k;
      }
    d.gram = rat(-3, 40) * d.killing;
    d.gram_inv = d.gram.inverse();

    ExactMat g2_block(14, 14);
    for (int i = 0; i < 14; ++i)
      for (int j = 0; j < 14; ++j) g2_block.at(i, j) = d.gram.at(7 + i, 7 + j);
    d.gram_g2_inv = g2_block.inverse();
    return d;
  }();
  return data;
}

inline const std::vector<Multivector>& spin7_m_basis() { return lie().m_basis; }

// Representation of the full spin(7) basis on Lambda^k(R^8).
inline Representation spin7_rep_on_forms(int k) {
  return rep_on_forms_of(lie().spin7_basis, k, 8);
}

// Representation of the g2 basis on Lambda^k(R^7).
inline Representation g2_rep_on_forms7(int k) {
  return rep_on_forms_of(lie().g2_basis7, k, 7);
}

// Casimir in the Gram-dual form sum_{A,B} g^{AB} rho_A rho_B.
inline ExactMat casimir_of_rep(const std::vector<ExactMat>& mats, const ExactMat& gram_inv) {
  size_t n = mats.size();
  if (int(n) != gram_inv.rows()) throw std::invalid_argument("casimir: basis size mismatch");
  ExactMat cas(mats[0].rows(), mats[0].cols());
  for (size_t A = 0; A < n; ++A) {
    ExactMat dual(mats[0].rows(), mats[0].cols());
    for (size_t B = 0; B < n; ++B) {
      if (gram_inv.at(int(A), int(B)) == 0) continue;
      dual += gram_inv.at(int(A), int(B)) * mats[B];
    }
    cas += mats[A] * dual;
  }
  return cas;
}

// Casimir of spin(7) for a representation given on the full 21-basis.
inline ExactMat casimir_spin7(const Representation& rep) {
  return casimir_of_rep(rep.mats, lie().gram_inv);
}

// Casimir of g2 for matrices indexed like the g2 basis (14 entries).
inline ExactMat casimir_g2(const std::vector<ExactMat>& g2_mats) {
  return casimir_of_rep(g2_mats, lie().gram_g2_inv);
}

// Casimir of m: the m block of the Gram matrix is the identity (verified in
// tests), so Cas_m = sum_a rho_a^2.
inline ExactMat casimir_m(const std::vector<ExactMat>& m_mats) {
  ExactMat cas(m_mats[0].rows(), m_mats[0].cols());
  for (const auto& r : m_mats) cas += r * r;
  return cas;
}

inline std::vector<ExactMat> g2_slice(const Representation& rep) {
  return std::vector<ExactMat>(rep.mats.begin() + LieData::kG2Start, rep.mats.end());
}

inline std::vector<ExactMat> m_slice(const Representation& rep) {
  return std::vector<ExactMat>(rep.mats.begin(), rep.mats.begin() + 7);
}

}  // namespace spin7spec
