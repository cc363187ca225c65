#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "spin7spec/models.hpp"

namespace spin7spec {

// A G2-equivariant map V_(0,0,1) (x) V_gamma -> spin(7)_C, stored as an exact
// 21 x (8 dim) matrix. Source coordinates: mu * dim + j over the spinor basis
// e^mu and the model basis; target coordinates: Lambda^2(R^7), the G2 model
// of spin(7)_C = V_(1,0) + V_(0,1).
struct Intertwiner {
  Spin7Weight gamma;
  G2Weight delta_type;   // (i,j): factor through Lambda^0 or Lambda^1 of Delta
  G2Weight source_type;  // (k,l): G2 type read off V_gamma
  G2Weight target_type;  // (m,n): V_(1,0) or V_(0,1) inside spin(7)_C
  ExactMat matrix;
};

namespace detail {

// Evaluates a bilinear formula on every source basis element. The formula
// receives the Delta part split as (a, v) and the model element x; model
// elements of grade k split as x = dt ^ b + w with b = e^0 . x and w the
// R^7 part.
template <typename F>
ExactMat build_q(const RepModel& mdl, F&& formula) {
  ExactMat Q(21, 8 * mdl.dim);
  const auto& tgt = form_basis(2, 7);
  for (int mu = 0; mu < 8; ++mu) {
    Rational a = (mu == 0) ? 1 : 0;
    Multivector v(7);
    if (mu > 0) v.set(1u << mu, rat(1));
    for (int j = 0; j < mdl.dim; ++j) {
      Multivector x = mdl.basis_form(j);
      Multivector out = formula(a, v, x);
      int col = mu * mdl.dim + j;
      for (size_t r = 0; r < tgt.size(); ++r) Q.at(int(r), col) = out.coeff(tgt[r]);
    }
  }
  return Q;
}

inline Multivector b_part(const Multivector& x) { return contract(e0(), x).restrict7(); }
inline Multivector w_part(const Multivector& x) { return x.restrict7(); }

inline Multivector cphi(const Multivector& x) { return contract(x, phi7()); }

}  // namespace detail

// The q bases, one table per weight: literal composite formulas.
inline std::vector<Intertwiner> q_basis(const Spin7Weight& gamma) {
  using detail::b_part;
  using detail::build_q;
  using detail::cphi;
  using detail::w_part;
  const RepModel& mdl = model(gamma);
  const Multivector& phi = phi7();
  const Multivector& psi = psi7();
  std::vector<Intertwiner> qs;
  auto add = [&](G2Weight dt, G2Weight st, G2Weight tt, ExactMat m) {
    qs.push_back({gamma, dt, st, tt, std::move(m)});
  };

  if (gamma == Spin7Weight{0, 0, 0}) {
    // q : Delta -> V_(1,0) -> spin(7), (a dt + v) -> v . phi
    add({1, 0}, {0, 0}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          return x.coeff(0u) * cphi(v);
        }));
  } else if (gamma == Spin7Weight{1, 0, 0}) {
    // x = dt ^ b + w in Lambda^2_7(R^8), w . phi = 3b
    add({0, 0}, {1, 0}, {1, 0}, build_q(mdl, [&](Rational a, Multivector, Multivector x) {
          return rat(1, 3) * a * cphi(cphi(w_part(x)));
        }));
    add({1, 0}, {1, 0}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          return rat(1, 3) * cphi(cphi(wedge(v, cphi(w_part(x)))));
        }));
    add({1, 0}, {1, 0}, {0, 1}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          Multivector vb = wedge(v, cphi(w_part(x)));
          return rat(1, 3) * vb - rat(1, 9) * cphi(cphi(vb));
        }));
  } else if (gamma == Spin7Weight{0, 0, 1}) {
    // x = w + b dt with w a 1-form on R^7 and b a scalar
    add({0, 0}, {1, 0}, {1, 0}, build_q(mdl, [&](Rational a, Multivector, Multivector x) {
          return a * cphi(w_part(x));
        }));
    add({1, 0}, {0, 0}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          return x.coeff(1u) * cphi(v);
        }));
    add({1, 0}, {1, 0}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          return cphi(cphi(wedge(v, w_part(x))));
        }));
    add({1, 0}, {1, 0}, {0, 1}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          Multivector vw = wedge(v, w_part(x));
          return vw - rat(1, 3) * cphi(cphi(vw));
        }));
  } else if (gamma == Spin7Weight{0, 1, 0}) {
    // x = dt ^ b + w in Lambda^2_21(R^8)
    add({0, 0}, {1, 0}, {1, 0}, build_q(mdl, [&](Rational a, Multivector, Multivector x) {
          return -a * cphi(cphi(w_part(x)));
        }));
    add({0, 0}, {0, 1}, {0, 1}, build_q(mdl, [&](Rational a, Multivector, Multivector x) {
          Multivector w = w_part(x);
          return a * w - rat(1, 3) * a * cphi(cphi(w));
        }));
    add({1, 0}, {1, 0}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          return cphi(contract(v, cphi(cphi(w_part(x)))));
        }));
    add({1, 0}, {1, 0}, {0, 1}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          Multivector vb = wedge(v, cphi(w_part(x)));
          return -vb + rat(1, 3) * cphi(cphi(vb));
        }));
    add({1, 0}, {0, 1}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          Multivector w = w_part(x);
          return cphi(contract(v, w) - rat(1, 3) * contract(v, cphi(cphi(w))));
        }));
  } else if (gamma == Spin7Weight{2, 0, 0}) {
    // x = dt ^ c + z in Lambda^4_27(R^8); the maps are unique up to scale
    add({1, 0}, {2, 0}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          return cphi(cphi(contract(v, b_part(x))));
        }));
    add({1, 0}, {2, 0}, {0, 1}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          Multivector vc = contract(v, b_part(x));
          return vc - rat(1, 3) * cphi(cphi(vc));
        }));
  } else if (gamma == Spin7Weight{1, 0, 1}) {
    // x = dt ^ b + w in Lambda^3_48(R^8), b . phi = -w . psi
    add({0, 0}, {1, 0}, {1, 0}, build_q(mdl, [&](Rational a, Multivector, Multivector x) {
          return a * cphi(cphi(b_part(x)));
        }));
    add({1, 0}, {1, 0}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          return cphi(cphi(wedge(v, cphi(b_part(x)))));
        }));
    add({1, 0}, {1, 0}, {0, 1}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          Multivector vb = wedge(v, cphi(b_part(x)));
          return vb - rat(1, 3) * cphi(cphi(vb));
        }));
    add({0, 0}, {0, 1}, {0, 1}, build_q(mdl, [&](Rational a, Multivector, Multivector x) {
          Multivector b = b_part(x);
          return a * b - rat(1, 3) * a * cphi(cphi(b));
        }));
    add({1, 0}, {0, 1}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          Multivector b = b_part(x);
          return cphi(contract(v, b)) + rat(1, 3) * cphi(cphi(wedge(v, cphi(b))));
        }));
    add({1, 0}, {2, 0}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          return rat(1, 3) * cphi(cphi(contract(v, w_part(x)))) +
                 rat(1, 6) * cphi(cphi(wedge(v, cphi(b_part(x)))));
        }));
    add({1, 0}, {2, 0}, {0, 1}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          Multivector vw = contract(v, w_part(x));
          Multivector vb = wedge(v, cphi(b_part(x)));
          return vw - rat(1, 3) * cphi(cphi(vw)) - rat(1, 4) * vb +
                 rat(1, 12) * cphi(cphi(vb));
        }));
  } else if (gamma == Spin7Weight{0, 0, 2}) {
    // x = dt ^ c + z in Lambda^4_35(R^8); pure-route composites built
    // from the G2 split of c:
    // c = s phi + u . psi + c27  with s = <c,phi>/7, u = -(1/4) c . psi.
    auto s_of = [&](const Multivector& x) -> Rational {
      return rat(1, 7) * inner(b_part(x), phi);
    };
    auto u_of = [&](const Multivector& x) {
      return rat(-1, 4) * contract(b_part(x), psi);
    };
    auto c27_of = [&](const Multivector& x) {
      Multivector c = b_part(x);
      return c - project(c, {Group::G2, 3, 1}) - project(c, {Group::G2, 3, 7});
    };
    add({0, 0}, {1, 0}, {1, 0}, build_q(mdl, [&](Rational a, Multivector, Multivector x) {
          return a * cphi(u_of(x));
        }));
    add({1, 0}, {0, 0}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          return s_of(x) * cphi(v);
        }));
    add({1, 0}, {1, 0}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          return cphi(cphi(wedge(v, u_of(x))));
        }));
    add({1, 0}, {1, 0}, {0, 1}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          Multivector vu = wedge(v, u_of(x));
          return vu - rat(1, 3) * cphi(cphi(vu));
        }));
    add({1, 0}, {2, 0}, {1, 0}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          return cphi(cphi(contract(v, c27_of(x))));
        }));
    add({1, 0}, {2, 0}, {0, 1}, build_q(mdl, [&](Rational, Multivector v, Multivector x) {
          Multivector vc = contract(v, c27_of(x));
          return vc - rat(1, 3) * cphi(cphi(vc));
        }));
  } else {
    throw std::invalid_argument("q_basis: no table for " + gamma.str());
  }

  for (const auto& q : qs)
    if (q.matrix.is_zero()) throw std::logic_error("q_basis: zero intertwiner");
  return qs;
}

// The g2-representation on the source Lambda^1(R^8) (x) V_gamma-model.
inline std::vector<ExactMat> source_g2_action(const Spin7Weight& gamma) {
  const RepModel& mdl = model(gamma);
  const Representation& delta = rho_delta_rep();
  std::vector<ExactMat> out;
  ExactMat id8 = ExactMat::identity(8);
  ExactMat idd = ExactMat::identity(mdl.dim);
  for (int i = LieData::kG2Start; i < 21; ++i)
    out.push_back(ExactMat::kron(delta.mats[i], idd) + ExactMat::kron(id8, mdl.rep.mats[i]));
  return out;
}

// The g2-action on the target Lambda^2(R^7).
inline const std::vector<ExactMat>& target_g2_action() {
  static const std::vector<ExactMat> mats = g2_rep_on_forms7(2).mats;
  return mats;
}

inline bool is_equivariant(const Intertwiner& q) {
  std::vector<ExactMat> src = source_g2_action(q.gamma);
  const auto& tgt = target_g2_action();
  for (size_t i = 0; i < src.size(); ++i)
    if (!(tgt[i] * q.matrix == q.matrix * src[i])) return false;
  return true;
}

// dim Hom(V_gamma, Delta (x) spin(7)_C)^{G2} certified from the isotypic
// multiplicities of both sides (Schur): independent of the q formulas.
inline int hom_dimension(const Spin7Weight& gamma) {
  static std::map<Spin7Weight, int> cache;
  auto it = cache.find(gamma);
  if (it != cache.end()) return it->second;

  static const std::vector<std::pair<G2Weight, int>> delta_w_types = [] {
    const Representation& delta = rho_delta_rep();
    const auto& L = lie();
    std::vector<ExactMat> g2_mats;
    ExactMat id21 = ExactMat::identity(21);
    ExactMat id8 = ExactMat::identity(8);
    for (int i = LieData::kG2Start; i < 21; ++i)
      g2_mats.push_back(ExactMat::kron(delta.mats[i], id21) + ExactMat::kron(id8, L.ad[i]));
    return g2_isotypic_multiplicities(g2_mats);
  }();

  int dim = 0;
  for (const auto& [w, mv] : model_g2_types(gamma))
    for (const auto& [wz, mz] : delta_w_types)
      if (w == wz) dim += mv * mz;
  return cache.emplace(gamma, dim).first->second;
}

// Basis of the Hom space: the q maps, exactly verified to solve the 14
// equivariance conditions, with exact rank equal to the certified dimension.
inline const std::vector<Intertwiner>& hom_space(const Spin7Weight& gamma) {
  static std::map<Spin7Weight, std::vector<Intertwiner>> cache;
  auto it = cache.find(gamma);
  if (it != cache.end()) return it->second;

  std::vector<Intertwiner> qs = q_basis(gamma);
  {
    std::vector<ExactMat> src = source_g2_action(gamma);
    const auto& tgt = target_g2_action();
    for (const auto& q : qs)
      for (size_t i = 0; i < src.size(); ++i)
        if (!(tgt[i] * q.matrix == q.matrix * src[i]))
          throw std::logic_error("hom_space: non-equivariant q for " + gamma.str());
  }

  // exact rank of the stacked vectorizations
  int n = qs[0].matrix.rows() * qs[0].matrix.cols();
  ExactMat stack(int(qs.size()), n);
  for (size_t k = 0; k < qs.size(); ++k)
    for (int i = 0; i < qs[k].matrix.rows(); ++i)
      for (int j = 0; j < qs[k].matrix.cols(); ++j)
        stack.at(int(k), i * qs[k].matrix.cols() + j) = qs[k].matrix.at(i, j);
  if (stack.rank() != int(qs.size()))
    throw std::logic_error("hom_space: q maps are dependent for " + gamma.str());
  if (int(qs.size()) != hom_dimension(gamma))
    throw std::logic_error("hom_space: q count != certified dimension for " + gamma.str());
  return cache.emplace(gamma, std::move(qs)).first->second;
}

}  // namespace spin7spec
