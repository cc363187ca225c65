#pragma once

#include <stdexcept>
#include <vector>

#include "spin7spec/lie.hpp"
#include "spin7spec/multivector.hpp"

namespace spin7spec {

// The 8-dimensional Clifford module Delta ~= Lambda^0 + Lambda^1(R^7),
// identified with Lambda^1(R^8) by (f, v) <-> f e^0 + v. Convention:
// u.v + v.u = -2<u,v> and the volume form Gamma_7 acts as -Id.
struct Spinor {
  Rational f;      // Lambda^0 part
  Multivector v;   // Lambda^1 part, dim 7

  Spinor() : f(0), v(7) {}
  Spinor(Rational f0, Multivector v0) : f(std::move(f0)), v(std::move(v0)) {
    if (v.dim() != 7 || !(v.is_zero() || v.is_homogeneous(1)))
      throw std::invalid_argument("Spinor: v must be a 1-form on R^7");
  }

  static Spinor from_vec8(const Multivector& u) {
    if (u.dim() != 8) throw std::invalid_argument("from_vec8: dim");
    return Spinor(u.coeff(1u), u.restrict7());
  }
  Multivector to_vec8() const { return f * e0() + v.embed8(); }

  Spinor operator+(const Spinor& o) const { return Spinor(f + o.f, v + o.v); }
  Spinor operator-(const Spinor& o) const { return Spinor(f - o.f, v - o.v); }
  Spinor operator*(const Rational& c) const { return Spinor(f * c, v * c); }
  bool operator==(const Spinor& o) const { return f == o.f && v == o.v; }
  bool is_zero() const { return f == 0 && v.is_zero(); }
};

// Clifford multiplication of (f, v) by a 1-form u on R^7:
// u . (f, v) = (<u,v>, -f u - (u ^ v) . phi).
inline Spinor clifford_mult(const Multivector& u, const Spinor& s) {
  if (u.dim() != 7 || !(u.is_zero() || u.is_homogeneous(1)))
    throw std::invalid_argument("clifford_mult: u must be a 1-form on R^7");
  return Spinor(inner(u, s.v), -s.f * u - contract(wedge(u, s.v), phi7()));
}

// Action of a k-form (k = 2, 3, 4) by iterated Clifford multiplication over
// each strictly increasing monomial.
inline Spinor form_action(const Multivector& w, const Spinor& s) {
  int g = w.grade();
  if (g < 2 || g > 4) throw std::invalid_argument("form_action: unsupported grade");
  Spinor out;
  for (auto& [m, c] : w.terms()) {
    Spinor acc = s;
    for (int i = 7; i >= 1; --i)  // e^{i1} . (e^{i2} . (... . s))
      if ((m >> i) & 1u) acc = clifford_mult(Multivector::basis(7, {i}), acc);
    out = out + acc * c;
  }
  return out;
}

// 8x8 matrix of an operator on Delta in the basis {e^0, e^1, ..., e^7}.
template <typename F>
ExactMat spinor_op_matrix(F&& op) {
  ExactMat m(8, 8);
  for (int j = 0; j < 8; ++j) {
    Spinor in = Spinor::from_vec8(Multivector::basis(8, {j}));
    Spinor out = op(in);
    Multivector o = out.to_vec8();
    for (int i = 0; i < 8; ++i) m.at(i, j) = o.coeff(1u << i);
  }
  return m;
}

// Clifford multiplication matrices E^a, a = 1..7.
inline const std::vector<ExactMat>& clifford_matrices() {
  static const std::vector<ExactMat> mats = [] {
    std::vector<ExactMat> out;
    for (int a = 1; a <= 7; ++a)
      out.push_back(spinor_op_matrix([a](const Spinor& s) {
        return clifford_mult(Multivector::basis(7, {a}), s);
      }));
    return out;
  }();
  return mats;
}

// rho_Delta(I_a) = beta(I~_a): the spin(7) action on Delta realized through
// the embedding spin(7) = Lambda^2_21 in so(8). Index a = 1..7.
inline ExactMat rho_delta(int a) { return beta_matrix(lie().m_basis[a - 1], 8); }

// Full 21-generator spin(7)-representation on Delta.
inline const Representation& rho_delta_rep() {
  static const Representation rep = [] {
    Representation r;
    r.dim = 8;
    for (const auto& x : lie().spin7_basis) r.mats.push_back(beta_matrix(x, 8));
    return r;
  }();
  return rep;
}

// M = diag(1, -Id) in the (f, v) splitting.
inline const ExactMat& involution_M() {
  static const ExactMat m = [] {
    ExactMat x(8, 8);
    x.at(0, 0) = 1;
    for (int i = 1; i < 8; ++i) x.at(i, i) = -1;
    return x;
  }();
  return m;
}

inline ExactMat rho_delta_tilde(int a) {
  const ExactMat& M = involution_M();
  return M * rho_delta(a) * M;
}

// phi and psi act diagonally in the (f, v) splitting; cached matrices.
inline const ExactMat& phi_action_matrix() {
  static const ExactMat m =
      spinor_op_matrix([](const Spinor& s) { return form_action(phi7(), s); });
  return m;
}

inline const ExactMat& psi_action_matrix() {
  static const ExactMat m =
      spinor_op_matrix([](const Spinor& s) { return form_action(psi7(), s); });
  return m;
}

// Gamma_7 = e^1 . e^2 ... e^7 as a matrix on Delta.
inline ExactMat volume_action_matrix() {
  return spinor_op_matrix([](const Spinor& s) {
    Spinor acc = s;
    for (int i = 7; i >= 1; --i) acc = clifford_mult(Multivector::basis(7, {i}), acc);
    return acc;
  });
}

}  // namespace spin7spec
