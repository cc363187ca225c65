#include <catch2/catch_amalgamated.hpp>

#include "spin7spec/models.hpp"

using namespace spin7spec;

TEST_CASE("closed-form Casimir values") {
  CHECK(casimir_eigenvalue(G2Weight{1, 0}) == rat(-48, 9));
  CHECK(casimir_eigenvalue(G2Weight{0, 1}) == rat(-96, 9));
  CHECK(casimir_eigenvalue(G2Weight{0, 0}) == 0);
  CHECK(casimir_eigenvalue(Spin7Weight{0, 0, 0}) == 0);
  CHECK(casimir_eigenvalue(Spin7Weight{1, 0, 0}) == rat(-8));
  CHECK(casimir_eigenvalue(Spin7Weight{0, 0, 1}) == rat(-7));
  CHECK(casimir_eigenvalue(Spin7Weight{0, 1, 0}) == rat(-40, 3));
  CHECK(casimir_eigenvalue(Spin7Weight{2, 0, 0}) == rat(-56, 3));
  CHECK(casimir_eigenvalue(Spin7Weight{1, 0, 1}) == rat(-49, 3));
  CHECK(casimir_eigenvalue(Spin7Weight{0, 0, 2}) == rat(-16));
}

TEST_CASE("model Casimirs equal the closed forms exactly") {
  // build_model already asserts rho(Cas) = c Id; spot-check the values here
  CHECK(model(Spin7Weight{1, 0, 0}).casimir_spin7_sub.at(0, 0) == rat(-8));
  CHECK(model(Spin7Weight{0, 0, 1}).casimir_spin7_sub.at(3, 3) == rat(-7));
  CHECK(model(Spin7Weight{0, 1, 0}).casimir_spin7_sub.at(0, 0) == rat(-40, 3));
  CHECK(model(Spin7Weight{0, 0, 0}).casimir_spin7_sub.at(0, 0) == 0);
}

TEST_CASE("model dimensions") {
  CHECK(rep_dimension({0, 0, 0}) == 1);
  CHECK(rep_dimension({1, 0, 0}) == 7);
  CHECK(rep_dimension({0, 1, 0}) == 21);
  CHECK(rep_dimension({0, 0, 1}) == 8);
  CHECK(rep_dimension({1, 0, 1}) == 48);
  CHECK(rep_dimension({2, 0, 0}) == 27);
  CHECK(rep_dimension({0, 0, 2}) == 35);
  CHECK_THROWS(model({1, 1, 0}));
}

TEST_CASE("g2 Casimir commutes with the g2 action (Schur check)") {
  const RepModel& m = model({1, 0, 0});
  auto g2 = g2_slice(m.rep);
  ExactMat cas = casimir_g2(g2);
  for (const auto& X : g2) CHECK(cas * X == X * cas);
}

TEST_CASE("branching to g2 matches the representation table") {
  using P = std::vector<std::pair<G2Weight, int>>;
  CHECK(model_g2_types({0, 0, 0}) == P{{{0, 0}, 1}});
  CHECK(model_g2_types({1, 0, 0}) == P{{{1, 0}, 1}});
  CHECK(model_g2_types({0, 1, 0}) == P{{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(model_g2_types({0, 0, 1}) == P{{{0, 0}, 1}, {{1, 0}, 1}});
  CHECK(model_g2_types({1, 0, 1}) == P{{{1, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}});
  CHECK(model_g2_types({2, 0, 0}) == P{{{2, 0}, 1}});
  CHECK(model_g2_types({0, 0, 2}) == P{{{0, 0}, 1}, {{1, 0}, 1}, {{2, 0}, 1}});
}

TEST_CASE("squared Dirac at t = 1/3") {
  SquaredDirac13 s = squared_dirac_13_eigenvalues({1, 0, 0});
  CHECK(s.on_v10 == rat(73, 9));
  CHECK(s.on_v01 == rat(25, 9));
  s = squared_dirac_13_eigenvalues({0, 0, 1});
  CHECK(s.on_v10 == rat(64, 9));
  CHECK(s.on_v01 == rat(16, 9));
  s = squared_dirac_13_eigenvalues({0, 0, 0});
  CHECK(s.on_v10 == rat(1, 9));
  CHECK(s.on_v01 == rat(-47, 9));  // negative slot: no (0,1)-factor component
}

TEST_CASE("eigenvalue bound") {
  auto b = eigenvalue_bound({0, 1, 0});
  REQUIRE(b.has_value());
  CHECK(b->radicand == rat(73, 9));
  CHECK(b->value == Catch::Approx(std::sqrt(73.0) / 3 - 7.0 / 6).epsilon(1e-12));
  CHECK(b->value < 2.5);

  auto b3 = eigenvalue_bound({3, 0, 0});
  REQUIRE(b3.has_value());
  CHECK(b3->value > 2.5);
  CHECK(b3->value == Catch::Approx(std::sqrt(241.0) / 3 - 7.0 / 6).epsilon(1e-12));

  CHECK(!eigenvalue_bound({0, 0, 0}).has_value());
}

TEST_CASE("admissible representations at threshold 5/2") {
  std::vector<Spin7Weight> got = admissible_reps();
  // the six tabulated representations, plus (0,0,2): its bound
  // L = sqrt(97)/3 - 7/6 ~ 2.12 < 5/2, so the literal criterion keeps it and
  // its block spectrum is checked directly instead.
  std::vector<Spin7Weight> expected = {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0},
                                       {0, 0, 2}, {1, 0, 1}, {2, 0, 0}};
  CHECK(got == expected);
  for (const auto& w : tabulated_six())
    CHECK(std::find(got.begin(), got.end(), w) != got.end());
}

TEST_CASE("degenerate threshold keeps only undefined-bound weights") {
  std::vector<Spin7Weight> got = admissible_reps(rat(0));
  CHECK(got == std::vector<Spin7Weight>{{0, 0, 0}});
}
