#pragma once

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "spin7spec/linalg.hpp"
#include "spin7spec/multivector.hpp"

namespace spin7spec {

enum class Group { G2, Spin7 };

// One row of the type-decomposition theorems: (group, degree, component dim).
struct FormTypeLabel {
  Group group;
  int degree;
  int component;

  bool operator<(const FormTypeLabel& o) const {
    return std::tie(group, degree, component) < std::tie(o.group, o.degree, o.component);
  }
  bool operator==(const FormTypeLabel& o) const {
    return group == o.group && degree == o.degree && component == o.component;
  }
};

inline int form_dim(Group g) { return g == Group::G2 ? 7 : 8; }

// Ordered monomial basis of Lambda^k(R^n), ascending mask order.
inline const std::vector<Mask>& form_basis(int k, int n) {
  static std::map<std::pair<int, int>, std::vector<Mask>> cache;
  auto key = std::make_pair(k, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Mask> basis;
  Mask lo = (n == 8) ? 0u : 1u;
  for (Mask m = 0; m <= 0xFFu; ++m) {
    if (n == 7 && (m & 1u)) continue;
    (void)lo;
    if (mask_grade(m) == k) basis.push_back(m);
  }
  return cache.emplace(key, std::move(basis)).first->second;
}

inline ExactMat to_coords(const Multivector& w, int k, int n) {
  const auto& basis = form_basis(k, n);
  ExactMat v(int(basis.size()), 1);
  for (size_t i = 0; i < basis.size(); ++i) v.at(int(i), 0) = w.coeff(basis[i]);
  return v;
}

inline Multivector from_coords(const ExactMat& v, int k, int n) {
  const auto& basis = form_basis(k, n);
  Multivector w(n);
  for (size_t i = 0; i < basis.size(); ++i) w.set(basis[i], v.at(int(i), 0));
  return w;
}

// Matrix of a linear map Lambda^k(R^n) -> Lambda^l(R^n) given by a lambda.
template <typename F>
ExactMat form_op_matrix(int k, int l, int n, F&& op) {
  const auto& src = form_basis(k, n);
  const auto& dst = form_basis(l, n);
  ExactMat m(int(dst.size()), int(src.size()));
  for (size_t j = 0; j < src.size(); ++j) {
    Multivector out = op(Multivector::from_mask(n, src[j], rat(1)));
    for (size_t i = 0; i < dst.size(); ++i) m.at(int(i), int(j)) = out.coeff(dst[i]);
  }
  return m;
}

namespace detail {

// Lambda^4_7(R^8) = span{L_X Phi : X in so(8)}: columns spanning the orbit
// directions, computed from the derivation action of so(8) on Phi.
inline ExactMat lambda47_span() {
  const auto& b4 = form_basis(4, 8);
  std::vector<ExactMat> cols;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      // derivation action of the rotation e_i ^ e_j on Phi
      Multivector out(8);
      for (auto& [m, c] : Phi8().terms()) {
        // rotate each factor: e^i -> e^j, e^j -> -e^i  (beta(e^{ij}))
        for (int pos = 0; pos < 8; ++pos) {
          if (!((m >> pos) & 1u)) continue;
          Multivector repl(8);
          if (pos == i)
            repl.set(1u << j, rat(-1));
          else if (pos == j)
            repl.set(1u << i, rat(1));
          else
            continue;
          Mask rest = m & ~(1u << pos);
          int sgn = wedge_sign(1u << pos, rest);
          out += (c * sgn) * wedge(repl, Multivector::from_mask(8, rest, rat(1)));
        }
      }
      ExactMat v(int(b4.size()), 1);
      bool nz = false;
      for (size_t r = 0; r < b4.size(); ++r) {
        v.at(int(r), 0) = out.coeff(b4[r]);
        nz = nz || v.at(int(r), 0) != 0;
      }
      if (nz) cols.push_back(v);
    }
  ExactMat span(int(b4.size()), int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < span.rows(); ++i) span.at(i, int(j)) = cols[j].at(i, 0);
  return span;
}

}  // namespace detail

// Exact projector matrices on the full coordinate space of each degree,
// built once from the closed formulas and cached.
inline const ExactMat& projector(const FormTypeLabel& label) {
  static std::map<FormTypeLabel, ExactMat> cache = [] {
    std::map<FormTypeLabel, ExactMat> c;
    const Multivector phi = phi7();
    const Multivector psi = psi7();
    const Multivector Phi = Phi8();

    // G2, degree 2: pi7 = (1/3)(w . phi) . phi, pi14 = w - pi7(w)
    ExactMat p7 = form_op_matrix(2, 2, 7, [&](const Multivector& w) {
      return rat(1, 3) * contract(contract(w, phi), phi);
    });
    c.emplace(FormTypeLabel{Group::G2, 2, 7}, p7);
    c.emplace(FormTypeLabel{Group::G2, 2, 14}, ExactMat::identity(21) - p7);

    // G2, degree 3: pi1 = (1/7)<w,phi> phi, pi27 from the appendix list,
    // pi7 = -(1/4)(w . psi) . psi as the complement.
    ExactMat q1 = form_op_matrix(3, 3, 7, [&](const Multivector& w) {
      return rat(1, 7) * inner(w, phi) * phi;
    });
    ExactMat q7 = form_op_matrix(3, 3, 7, [&](const Multivector& w) {
      return rat(-1, 4) * contract(contract(w, psi), psi);
    });
    c.emplace(FormTypeLabel{Group::G2, 3, 1}, q1);
    c.emplace(FormTypeLabel{Group::G2, 3, 7}, q7);
    c.emplace(FormTypeLabel{Group::G2, 3, 27}, ExactMat::identity(35) - q1 - q7);

    // Spin(7), degree 2: pi7 = (w + w . Phi)/4, pi21 = (3w - w . Phi)/4
    ExactMat s7 = form_op_matrix(2, 2, 8, [&](const Multivector& w) {
      return rat(1, 4) * (w + contract(w, Phi));
    });
    c.emplace(FormTypeLabel{Group::Spin7, 2, 7}, s7);
    c.emplace(FormTypeLabel{Group::Spin7, 2, 21}, ExactMat::identity(28) - s7);

    // Spin(7), degree 3: pi48 = w + (1/7)(w . Phi) . Phi, pi8 complement
    ExactMat s48 = form_op_matrix(3, 3, 8, [&](const Multivector& w) {
      return w + rat(1, 7) * contract(contract(w, Phi), Phi);
    });
    c.emplace(FormTypeLabel{Group::Spin7, 3, 48}, s48);
    c.emplace(FormTypeLabel{Group::Spin7, 3, 8}, ExactMat::identity(56) - s48);

    // Spin(7), degree 4: pi35 = (w - *w)/2; the self-dual part splits as
    // <Phi> + {L_X Phi} + complement. Lambda^4_7 and Lambda^4_27 are built by
    // complementation inside the self-dual part.
    ExactMat s35 = form_op_matrix(4, 4, 8, [&](const Multivector& w) {
      return rat(1, 2) * (w - hodge(w));
    });
    ExactMat sd = ExactMat::identity(70) - s35;
    ExactMat t1 = form_op_matrix(4, 4, 8, [&](const Multivector& w) {
      return rat(1, 14) * inner(w, Phi) * Phi;
    });
    // Orthogonal projector onto the span of {L_X Phi}: S (S^T S)^{-1} S^T.
    ExactMat span = detail::lambda47_span();
    ExactMat gram = span.transpose() * span;
    ExactMat t7 = span * ExactMat::solve(gram, span.transpose());
    c.emplace(FormTypeLabel{Group::Spin7, 4, 35}, s35);
    c.emplace(FormTypeLabel{Group::Spin7, 4, 1}, t1);
    c.emplace(FormTypeLabel{Group::Spin7, 4, 7}, t7);
    c.emplace(FormTypeLabel{Group::Spin7, 4, 27}, sd - t1 - t7);
    return c;
  }();
  auto it = cache.find(label);
  if (it == cache.end()) throw std::invalid_argument("unknown form type label");
  return it->second;
}

inline Multivector project(const Multivector& w, const FormTypeLabel& label) {
  int n = form_dim(label.group);
  if (w.dim() != n) throw std::invalid_argument("project: dimension mismatch");
  if (!w.is_homogeneous(label.degree))
    throw std::invalid_argument("project: degree mismatch");
  const ExactMat& P = projector(label);
  return from_coords(P * to_coords(w, label.degree, n), label.degree, n);
}

inline int component_dimension(const FormTypeLabel& label) {
  return projector(label).rank();
}

inline const std::vector<FormTypeLabel>& all_form_type_labels() {
  static const std::vector<FormTypeLabel> labels = {
      {Group::G2, 2, 7},     {Group::G2, 2, 14},    {Group::G2, 3, 1},
      {Group::G2, 3, 7},     {Group::G2, 3, 27},    {Group::Spin7, 2, 7},
      {Group::Spin7, 2, 21}, {Group::Spin7, 3, 8},  {Group::Spin7, 3, 48},
      {Group::Spin7, 4, 1},  {Group::Spin7, 4, 7},  {Group::Spin7, 4, 27},
      {Group::Spin7, 4, 35},
  };
  return labels;
}

}  // namespace spin7spec
