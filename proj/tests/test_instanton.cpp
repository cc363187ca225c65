#include <catch2/catch_amalgamated.hpp>

#include "spin7spec/instanton.hpp"

using namespace spin7spec;

TEST_CASE("profile solves the flow equation") {
  ProfileFunction p(1.0);
  CHECK(p.value(0) == Catch::Approx(0.5));
  CHECK(p.deriv(0) == Catch::Approx(-0.5));
  CHECK(ode_residual(p, 0.0) < 1e-14);
  for (double t : {-3.0, -0.7, 0.0, 1.3, 4.0}) {
    CHECK(ode_residual(p, t) < 1e-14);
    CHECK(ode_residual(ProfileFunction(7.5), t) < 1e-14);
    CHECK(p.value(t) > 0);
    CHECK(p.value(t) < 1);
  }
  // limits
  CHECK(p.value(-40.0) == Catch::Approx(1.0));
  CHECK(p.value(40.0) == Catch::Approx(0.0).margin(1e-12));
  CHECK_THROWS(ProfileFunction(0.0));

  // non-solution witnesses
  auto const_residual = [](double c) { return std::abs(0.0 - 2 * (c * c - c)); };
  CHECK(const_residual(1.0) == 0.0);
  CHECK(const_residual(0.5) == Catch::Approx(0.5));
}

TEST_CASE("exact profile points satisfy the equation exactly") {
  for (long k = 1; k <= 20; ++k) {
    ExactProfilePoint p = exact_profile_point(rat(k, 3));
    CHECK(ode_residual_exact(p) == 0);
    CHECK(asd_residual(p.phi, p.phi_dot).is_zero());
  }
}

TEST_CASE("asd residual structure") {
  CHECK(asd_residual(rat(1, 2), rat(-1, 2)).is_zero());  // on-shell point
  CHECK(asd_residual(rat(1), rat(0)).is_zero());         // flat endpoint
  ExactMat r = asd_residual(rat(1, 2), rat(0));
  // proportional to I_a with coefficient phi_dot - 2(phi^2 - phi) = 1/2
  for (int a = 0; a < 7; ++a)
    for (int c = 0; c < 21; ++c)
      CHECK(r.at(a, c) == ((a == c) ? rat(1, 2) : rat(0)));
}

TEST_CASE("e^a I_a operator is G2-equivariant and G-self-adjoint") {
  const ExactMat& op = eaIa_matrix();
  const auto& L = lie();
  ExactMat id8 = ExactMat::identity(8), id21 = ExactMat::identity(21);
  for (int i = LieData::kG2Start; i < 21; ++i) {
    ExactMat gen = ExactMat::kron(rho_delta_rep().mats[i], id21) + ExactMat::kron(id8, L.ad[i]);
    CHECK(gen * op == op * gen);
  }
  ExactMat G = ExactMat::kron(id8, L.gram);
  CHECK(G * op == op.transpose() * G);
}

TEST_CASE("e^a I_a spectrum table") {
  // exactly certified table; the multiset is Galois-stable and traceless
  std::vector<std::pair<double, int>> expected = {
      {-4.0, 7},
      {(-1 - std::sqrt(57.0)) / 3, 27},
      {-2.0, 7},
      {(3 - std::sqrt(33.0)) / 3, 14},
      {0.0, 64},
      {(-1 + std::sqrt(57.0)) / 3, 27},
      {(3 + std::sqrt(33.0)) / 3, 14},
      {4.0, 8},
  };
  SpectralResult spec = eaIa_spectrum();
  REQUIRE(spec.entries.size() == expected.size());
  int total = 0;
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(spec.entries[i].value == Catch::Approx(expected[i].first).margin(1e-9));
    CHECK(spec.entries[i].multiplicity == expected[i].second);
    total += spec.entries[i].multiplicity;
  }
  CHECK(total == 168);
  // numeric cross-check of the certified closed forms
  ExactMat G = ExactMat::kron(ExactMat::identity(8), lie().gram);
  std::vector<double> numeric = gram_selfadjoint_eigenvalues(eaIa_matrix(), G);
  size_t idx = 0;
  for (const auto& e : spec.entries)
    for (int m = 0; m < e.multiplicity; ++m, ++idx)
      CHECK(numeric[idx] == Catch::Approx(e.value).margin(1e-7));
}

TEST_CASE("block perturbations carry the table values selected by G2 type") {
  // eigenvalues of (e^a I_a)_gamma are the global table values of the G2
  // types occurring in V_gamma
  std::map<G2Weight, std::vector<double>> by_type = {
      {{0, 0}, {4.0}},
      {{1, 0}, {-4.0, -2.0, 4.0}},
      {{0, 1}, {(3 - std::sqrt(33.0)) / 3, (3 + std::sqrt(33.0)) / 3}},
      {{2, 0}, {(-1 - std::sqrt(57.0)) / 3, (-1 + std::sqrt(57.0)) / 3}},
  };
  for (const auto& gamma : certified_weights()) {
    std::vector<double> expected;
    for (const auto& [w, mult] : model_g2_types(gamma)) {
      REQUIRE(mult == 1);
      for (double v : by_type.at(w)) expected.push_back(v);
    }
    std::sort(expected.begin(), expected.end());
    const DiracBlock& b = dirac_block(gamma);
    std::vector<double> got = gram_selfadjoint_eigenvalues(b.perturbation, b.flow_gram);
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < got.size(); ++i)
      CHECK(got[i] == Catch::Approx(expected[i]).margin(1e-9));
  }
}

TEST_CASE("trivial block flow curve") {
  FlowFamily fam = flow_block({0, 0, 0});
  CHECK(fam.eigenvalues(0.0)[0] == Catch::Approx(0.5).margin(1e-12));
  CHECK(fam.eigenvalues(1.0)[0] == Catch::Approx(4.5).margin(1e-12));
  CHECK(fam.eigenvalues(0.5)[0] == Catch::Approx(2.5).margin(1e-12));
  FlowResult r = spectral_flow({0, 0, 0}, 100);
  CHECK(r.flow == 0);
}

TEST_CASE("no block flows and the total vanishes") {
  for (const auto& gamma : certified_weights()) {
    FlowResult r = spectral_flow(gamma, 100);
    CHECK(r.flow == 0);
    // stability under step doubling
    CHECK(spectral_flow(gamma, 200).flow == r.flow);
  }
  CHECK(total_spectral_flow(100) == 0);
}

TEST_CASE("(2,0,0) curves never change sign") {
  FlowResult r = spectral_flow({2, 0, 0}, 100);
  for (const auto& curve : r.curves) {
    bool positive = curve.front() > 0;
    for (double v : curve) CHECK((v > 0) == positive);
  }
}

TEST_CASE("flat endpoints lie on the round lattice") {
  for (const auto& gamma : certified_weights())
    CHECK(endpoint_round_spectrum_check(gamma));
}

TEST_CASE("spectral flow input validation") {
  CHECK_THROWS(spectral_flow({0, 0, 0}, 50));  // steps >= 100 required
}

TEST_CASE("chern-weil integral") {
  double v1 = chern_weil_integral(1.0);
  double v10 = chern_weil_integral(10.0);
  CHECK(std::abs(v1 - v10) < 1e-6);  // modulus invariance
  double oracle = chern_weil_integral(1.0, 10);
  CHECK(std::abs(v1 - oracle) < 1e-6);
  // frozen regression constant, from the exact closed-form integration
  CHECK(chern_weil_exact() == rat(-332, 729));
  CHECK(std::abs(v1 - chern_weil_exact().get_d()) < 1e-9);
}
