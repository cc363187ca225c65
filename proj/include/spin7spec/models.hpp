#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "spin7spec/casimir.hpp"
#include "spin7spec/clifford.hpp"
#include "spin7spec/lie.hpp"
#include "spin7spec/projections.hpp"

namespace spin7spec {

// An irreducible Spin(7) representation realized inside Lambda^k(R^8): exact
// basis of the invariant subspace, the 21 restricted generator matrices and
// the Gram matrix of the induced inner product.
struct RepModel {
  Spin7Weight gamma;
  int ambient_grade = 0;
  int dim = 0;
  ExactMat basis;             // ambient_dim x dim
  ExactMat gram;              // dim x dim, basis^T basis
  Representation rep;         // 21 spin(7) generators, dim x dim
  ExactMat casimir_spin7_sub; // rho(Cas_spin7) restricted, = c_gamma Id

  Multivector basis_form(int j) const {
    return from_coords(basis.col(j), ambient_grade, 8);
  }
};

namespace detail {

inline ExactMat column_space_basis(const ExactMat& P) {
  ExactMat copy = P;
  std::vector<int> pivots = copy.rref();
  ExactMat B(P.rows(), int(pivots.size()));
  for (size_t j = 0; j < pivots.size(); ++j)
    for (int i = 0; i < P.rows(); ++i) B.at(i, int(j)) = P.at(i, pivots[j]);
  return B;
}

inline RepModel build_model(const Spin7Weight& gamma, int k, ExactMat basis) {
  RepModel m;
  m.gamma = gamma;
  m.ambient_grade = k;
  m.basis = std::move(basis);
  m.dim = m.basis.cols();
  m.gram = m.basis.transpose() * m.basis;

  Representation ambient = spin7_rep_on_forms(k);
  m.rep.dim = m.dim;
  for (const auto& X : ambient.mats) {
    // solve B * X_sub = X * B; throws if the subspace is not invariant
    m.rep.mats.push_back(ExactMat::solve(m.basis, X * m.basis));
  }
  m.casimir_spin7_sub = casimir_spin7(m.rep);

  // Schur check: the restricted Casimir must be the closed-form scalar
  ExactMat expected = ExactMat::identity(m.dim);
  expected *= casimir_eigenvalue(gamma);
  if (!(m.casimir_spin7_sub == expected))
    throw std::logic_error("model Casimir does not match closed form for " + gamma.str());
  return m;
}

}  // namespace detail

// Models from the representation table: Lambda^0, Lambda^2_7, Lambda^2_21,
// Lambda^1, Lambda^3_48, Lambda^4_27, Lambda^4_35.
inline const RepModel& model(const Spin7Weight& gamma) {
  static std::map<Spin7Weight, RepModel> cache;
  auto it = cache.find(gamma);
  if (it != cache.end()) return it->second;

  RepModel m;
  if (gamma == Spin7Weight{0, 0, 0}) {
    ExactMat b(1, 1);
    b.at(0, 0) = 1;
    m = detail::build_model(gamma, 0, b);
  } else if (gamma == Spin7Weight{0, 0, 1}) {
    m = detail::build_model(gamma, 1, ExactMat::identity(8));
  } else if (gamma == Spin7Weight{1, 0, 0}) {
    m = detail::build_model(gamma, 2,
                            detail::column_space_basis(projector({Group::Spin7, 2, 7})));
  } else if (gamma == Spin7Weight{0, 1, 0}) {
    m = detail::build_model(gamma, 2, lie().basis_coords);
  } else if (gamma == Spin7Weight{1, 0, 1}) {
    ExactMat c = form_op_matrix(3, 1, 8, [&](const Multivector& w) {
      return contract(w, Phi8());
    });
    m = detail::build_model(gamma, 3, c.kernel());
  } else if (gamma == Spin7Weight{2, 0, 0}) {
    m = detail::build_model(gamma, 4,
                            detail::column_space_basis(projector({Group::Spin7, 4, 27})));
  } else if (gamma == Spin7Weight{0, 0, 2}) {
    m = detail::build_model(gamma, 4,
                            detail::column_space_basis(projector({Group::Spin7, 4, 35})));
  } else {
    throw std::invalid_argument("no exterior-power model for " + gamma.str());
  }
  return cache.emplace(gamma, std::move(m)).first->second;
}

inline int rep_dimension(const Spin7Weight& gamma) { return model(gamma).dim; }

// G2-isotypic multiplicities of the model under the embedded g2.
inline std::vector<std::pair<G2Weight, int>> model_g2_types(const Spin7Weight& gamma) {
  return g2_isotypic_multiplicities(g2_slice(model(gamma).rep));
}

}  // namespace spin7spec
