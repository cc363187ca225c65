#include <catch2/catch_amalgamated.hpp>

#include "spin7spec/projections.hpp"

using namespace spin7spec;

namespace {
Multivector e(int i) { return Multivector::basis(7, {i}); }

Multivector random_form(int k, int n, unsigned seed) {
  // deterministic pseudo-random exact coefficients
  const auto& basis = form_basis(k, n);
  Multivector w(n);
  unsigned s = seed * 2654435761u + 1013904223u;
  for (Mask m : basis) {
    s = s * 1664525u + 1013904223u;
    int c = int(s % 19u) - 9;
    if (c != 0) w.add_term(m, rat(c, 1 + int(s % 4u)));
  }
  return w;
}
}  // namespace

TEST_CASE("component dimensions match the decomposition theorems") {
  CHECK(component_dimension({Group::G2, 2, 7}) == 7);
  CHECK(component_dimension({Group::G2, 2, 14}) == 14);
  CHECK(component_dimension({Group::G2, 3, 1}) == 1);
  CHECK(component_dimension({Group::G2, 3, 7}) == 7);
  CHECK(component_dimension({Group::G2, 3, 27}) == 27);
  CHECK(component_dimension({Group::Spin7, 2, 7}) == 7);
  CHECK(component_dimension({Group::Spin7, 2, 21}) == 21);
  CHECK(component_dimension({Group::Spin7, 3, 8}) == 8);
  CHECK(component_dimension({Group::Spin7, 3, 48}) == 48);
  CHECK(component_dimension({Group::Spin7, 4, 1}) == 1);
  CHECK(component_dimension({Group::Spin7, 4, 7}) == 7);
  CHECK(component_dimension({Group::Spin7, 4, 27}) == 27);
  CHECK(component_dimension({Group::Spin7, 4, 35}) == 35);
}

TEST_CASE("projectors are idempotent and mutually annihilating") {
  auto degree_family = [](Group g, int k) {
    std::vector<FormTypeLabel> fam;
    for (const auto& l : all_form_type_labels())
      if (l.group == g && l.degree == k) fam.push_back(l);
    return fam;
  };
  for (Group g : {Group::G2, Group::Spin7})
    for (int k = 2; k <= 4; ++k) {
      auto fam = degree_family(g, k);
      if (fam.empty()) continue;
      ExactMat sum(projector(fam[0]).rows(), projector(fam[0]).cols());
      for (size_t i = 0; i < fam.size(); ++i) {
        const ExactMat& P = projector(fam[i]);
        CHECK(P * P == P);
        sum += P;
        for (size_t j = i + 1; j < fam.size(); ++j) {
          CHECK((P * projector(fam[j])).is_zero());
        }
      }
      CHECK(sum == ExactMat::identity(sum.rows()));  // completeness
    }
}

TEST_CASE("pi7 fixes u . phi and pi14 matches the appendix formula") {
  for (int a = 1; a <= 7; ++a) {
    Multivector w = contract(e(a), phi7());
    CHECK(project(w, {Group::G2, 2, 7}) == w);
    CHECK(project(w, {Group::G2, 2, 14}).is_zero());
  }
  for (unsigned seed = 0; seed < 20; ++seed) {
    Multivector w = random_form(2, 7, seed);
    Multivector p14 = w - rat(1, 3) * contract(contract(w, phi7()), phi7());
    CHECK(project(w, {Group::G2, 2, 14}) == p14);
    // pi7 + pi14 = identity
    CHECK(project(w, {Group::G2, 2, 7}) + p14 == w);
  }
}

TEST_CASE("defining eigen-equations of the 2-form components") {
  for (unsigned seed = 0; seed < 10; ++seed) {
    Multivector w = random_form(2, 7, seed);
    Multivector w7 = project(w, {Group::G2, 2, 7});
    Multivector w14 = project(w, {Group::G2, 2, 14});
    CHECK(hodge(wedge(phi7(), w7)) == rat(2) * w7);
    CHECK(hodge(wedge(phi7(), w14)) == -w14);
    CHECK(wedge(psi7(), w14).is_zero());

    Multivector v = random_form(2, 8, seed);
    Multivector v7 = project(v, {Group::Spin7, 2, 7});
    Multivector v21 = project(v, {Group::Spin7, 2, 21});
    CHECK(contract(v7, Phi8()) == rat(3) * v7);
    CHECK(contract(v21, Phi8()) == -v21);
    CHECK(hodge(wedge(Phi8(), v7)) == rat(3) * v7);
    CHECK(hodge(wedge(Phi8(), v21)) == -v21);
  }
}

TEST_CASE("Lambda^2_14 of R^7 embeds into Lambda^2_21 of R^8") {
  for (unsigned seed = 0; seed < 10; ++seed) {
    Multivector w = project(random_form(2, 7, seed), {Group::G2, 2, 14}).embed8();
    CHECK(contract(w, Phi8()) == -w);
    CHECK(project(w, {Group::Spin7, 2, 7}).is_zero());
  }
}

TEST_CASE("degree 3 and 4 component membership") {
  for (unsigned seed = 0; seed < 6; ++seed) {
    Multivector w = random_form(3, 8, seed);
    Multivector w48 = project(w, {Group::Spin7, 3, 48});
    CHECK(wedge(Phi8(), w48).is_zero());
    CHECK(contract(w48, Phi8()).is_zero());

    Multivector z = random_form(4, 8, seed);
    Multivector z35 = project(z, {Group::Spin7, 4, 35});
    CHECK(hodge(z35) == -z35);
    Multivector z27 = project(z, {Group::Spin7, 4, 27});
    CHECK(hodge(z27) == z27);
    CHECK(wedge(z27, Phi8()).is_zero());

    Multivector u = random_form(3, 7, seed);
    Multivector u27 = project(u, {Group::G2, 3, 27});
    CHECK(wedge(phi7(), u27).is_zero());
    CHECK(wedge(psi7(), u27).is_zero());
  }
}

TEST_CASE("appendix tail identities for mixed components") {
  // dt ^ a + v in Lambda^2_7(R^8) has v . phi = 3a
  for (unsigned seed = 0; seed < 8; ++seed) {
    Multivector w7 = project(random_form(2, 8, seed), {Group::Spin7, 2, 7});
    Multivector a = contract(e0(), w7).restrict7();
    Multivector v = w7.restrict7();
    CHECK(contract(v, phi7()) == rat(3) * a);

    // dt ^ b + w in Lambda^3_48(R^8) has b . phi = -w . psi
    Multivector w48 = project(random_form(3, 8, seed), {Group::Spin7, 3, 48});
    Multivector b = contract(e0(), w48).restrict7();
    Multivector w = w48.restrict7();
    CHECK(contract(b, phi7()) == -contract(w, psi7()));
  }
}

TEST_CASE("projection errors") {
  CHECK_THROWS(project(phi7(), {Group::G2, 2, 7}));              // degree mismatch
  CHECK_THROWS(project(phi7().embed8(), {Group::G2, 3, 27}));    // dimension mismatch
  CHECK_THROWS(projector({Group::G2, 4, 7}));                    // unknown label
}
