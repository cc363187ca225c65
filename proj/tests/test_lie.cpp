#include <catch2/catch_amalgamated.hpp>

#include "spin7spec/lie.hpp"

using namespace spin7spec;

TEST_CASE("beta on a single blade") {
  ExactMat b = beta_matrix(wedge(Multivector::basis(8, {0}), Multivector::basis(8, {1})), 8);
  // beta(e^0 ^ e^1)(e^0) = -e^0 . (e^0 ^ e^1) = -e^1
  CHECK(b.at(1, 0) == -1);
  CHECK(b.at(0, 1) == 1);
  Rational sum = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!((i == 0 && j == 1) || (i == 1 && j == 0))) sum += abs(b.at(i, j));
  CHECK(sum == 0);
}

TEST_CASE("beta is antisymmetric") {
  for (unsigned seed = 0; seed < 5; ++seed) {
    Multivector w(8);
    unsigned s = seed + 7;
    for (Mask m : form_basis(2, 8)) {
      s = s * 1664525u + 1013904223u;
      w.add_term(m, rat(int(s % 11) - 5));
    }
    ExactMat b = beta_matrix(w, 8);
    CHECK(b.transpose() == rat(-1) * b);
  }
  CHECK_THROWS(beta_matrix(phi7(), 7));  // wrong grade
}

TEST_CASE("m basis lies in Lambda^2_21 and spans the -1 eigenspace with g2") {
  const auto& L = lie();
  for (const auto& it : L.m_basis) CHECK(contract(it, Phi8()) == -it);
  for (const auto& g : L.g2_basis7) {
    Multivector g8 = g.embed8();
    CHECK(contract(g8, Phi8()) == -g8);
  }
  // the 21 basis elements are independent and exhaust ker(pi7) on Lambda^2(R^8)
  CHECK(L.basis_coords.rank() == 21);
  const ExactMat& p7 = projector({Group::Spin7, 2, 7});
  CHECK((p7 * L.basis_coords).is_zero());
}

TEST_CASE("reductive split under the Killing form") {
  const auto& L = lie();
  for (int a = 0; a < 7; ++a)
    for (int i = 7; i < 21; ++i) CHECK(L.killing.at(a, i) == 0);
  // normalized metric: -(3/40) K restricted to m is the identity
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) CHECK(L.gram.at(a, b) == (a == b ? 1 : 0));
}

TEST_CASE("Killing form symmetry and invariance") {
  const auto& L = lie();
  auto elt = [&](unsigned seed) {
    Multivector x(8);
    unsigned s = seed * 97 + 13;
    for (int A = 0; A < 21; ++A) {
      s = s * 1664525u + 1013904223u;
      x += rat(int(s % 7) - 3) * L.spin7_basis[A];
    }
    return x;
  };
  for (unsigned seed = 0; seed < 4; ++seed) {
    Multivector x = elt(3 * seed), y = elt(3 * seed + 1), z = elt(3 * seed + 2);
    CHECK(L.killing_form(x, y) == L.killing_form(y, x));
    CHECK(L.killing_form(L.bracket(z, x), y) + L.killing_form(x, L.bracket(z, y)) == 0);
  }
}

TEST_CASE("g2 block of the metric is positive definite") {
  const auto& L = lie();
  ExactMat block(14, 14);
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) block.at(i, j) = L.gram.at(7 + i, 7 + j);
  // leading principal minors all positive (exact Cholesky-style check)
  ExactMat a = block;
  for (int k = 0; k < 14; ++k) {
    REQUIRE(a.at(k, k) > 0);
    for (int i = k + 1; i < 14; ++i) {
      Rational f = a.at(i, k) / a.at(k, k);
      for (int j = k; j < 14; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
}

TEST_CASE("closure and Jacobi") {
  const auto& L = lie();
  // [g2, g2] stays in g2; [g2, m] stays in m
  for (int i = 7; i < 21; ++i)
    for (int j = 7; j < 21; ++j)
      for (int a = 0; a < 7; ++a) CHECK(L.f(a, i, j) == 0);
  for (int i = 7; i < 21; ++i)
    for (int a = 0; a < 7; ++a)
      for (int k = 7; k < 21; ++k) CHECK(L.f(k, i, a) == 0);
  // Jacobi on all basis triples via the ad homomorphism property:
  // ad([A,B]) = [ad A, ad B]
  for (int A = 0; A < 21; ++A)
    for (int B = A + 1; B < 21; ++B) {
      ExactMat lhs = L.ad[A] * L.ad[B] - L.ad[B] * L.ad[A];
      ExactMat rhs(21, 21);
      for (int C = 0; C < 21; ++C) {
        if (L.f(C, A, B) == 0) continue;
        rhs += L.f(C, A, B) * L.ad[C];
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("m structure constants reproduce -(2/3) phi") {
  const auto& L = lie();
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        CHECK(L.f(c, a, b) == rat(-2, 3) * phi_abc(a + 1, b + 1, c + 1));
  CHECK(L.f(6, 0, 1) == rat(-2, 3));  // f^7_{12} = -2/3 phi_127
  // antisymmetry of the g2-component in a, b
  for (int i = 7; i < 21; ++i)
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) CHECK(L.f(i, a, b) == -L.f(i, b, a));
}

TEST_CASE("rep_on_forms Leibniz and trace") {
  const auto& L = lie();
  Representation r2 = spin7_rep_on_forms(2);
  Representation r1 = spin7_rep_on_forms(1);
  for (int A = 0; A < 21; ++A) CHECK(r2.mats[A].trace() == 0);
  // Leibniz: rho(X)(a ^ b) = rho(X)a ^ b + a ^ rho(X)b on random 1-forms
  Multivector a = Multivector::basis(8, {0}) + rat(2) * Multivector::basis(8, {3});
  Multivector b = Multivector::basis(8, {5}) - rat(7) * Multivector::basis(8, {1});
  for (int A = 0; A < 21; A += 5) {
    const Multivector& X = L.spin7_basis[A];
    CHECK(derivation_act(X, wedge(a, b)) ==
          wedge(derivation_act(X, a), b) + wedge(a, derivation_act(X, b)));
  }
  // commutator closure of the Lambda^2 representation
  for (int A = 0; A < 21; A += 4)
    for (int B = A + 1; B < 21; B += 3) {
      ExactMat lhs = r2.mats[A] * r2.mats[B] - r2.mats[B] * r2.mats[A];
      ExactMat rhs(28, 28);
      for (int C = 0; C < 21; ++C)
        if (L.f(C, A, B) != 0) rhs += L.f(C, A, B) * r2.mats[C];
      CHECK(lhs == rhs);
    }
  // spin(7) action on Lambda^2(R^8) commutes with the type projectors
  const ExactMat& p7 = projector({Group::Spin7, 2, 7});
  for (int A = 0; A < 21; ++A) CHECK(r2.mats[A] * p7 == p7 * r2.mats[A]);
  (void)r1;
}

TEST_CASE("zero representation on Lambda^0") {
  Representation r0 = spin7_rep_on_forms(0);
  for (const auto& m : r0.mats) CHECK(m.is_zero());
}
