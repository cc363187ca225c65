#include <catch2/catch_amalgamated.hpp>

#include "spin7spec/moduli.hpp"

using namespace spin7spec;

TEST_CASE("critical rates in (-2, 0)") {
  CriticalRateSet rs = critical_rates(-2.0, 0.0);
  REQUIRE(rs.rates.size() == 1);
  CHECK(rs.rates[0].rate == Catch::Approx(-1.0).margin(1e-9));
  CHECK(rs.rates[0].lambda == Catch::Approx(1.5).margin(1e-9));
  CHECK(rs.rates[0].multiplicity == 8);
  CHECK(rs.rates[0].gamma == Spin7Weight{0, 0, 1});
  CHECK(rs.rates[0].label == "translation");
  // boundary rate -2 (lambda = 1/2) reported as endpoint
  REQUIRE(rs.endpoints.size() == 1);
  CHECK(rs.endpoints[0].rate == Catch::Approx(-2.0).margin(1e-9));
  CHECK(rs.endpoints[0].multiplicity == 1);
  CHECK(rs.endpoints[0].label == "dilation");
}

TEST_CASE("critical rates in (-5, -4)") {
  CriticalRateSet rs = critical_rates(-5.0, -4.0);
  REQUIRE(rs.rates.size() == 1);
  CHECK(rs.rates[0].rate == Catch::Approx(-4.0).margin(1e-9));
  CHECK(rs.rates[0].lambda == Catch::Approx(-1.5).margin(1e-9));
  // lambda = -3/2 sits in V_(1,0,0): eigenspace 1 x dim 7
  CHECK(rs.rates[0].gamma == Spin7Weight{1, 0, 0});
  CHECK(rs.rates[0].multiplicity == 7);
  CHECK(rs.rates[0].label == "unidentified");
}

TEST_CASE("empty window") {
  CriticalRateSet rs = critical_rates(-0.4, -0.3);
  CHECK(rs.rates.empty());
  CHECK(rs.endpoints.empty());
}

TEST_CASE("virtual dimensions of the moduli space") {
  for (double nu : {-1.9, -1.5, -1.1}) {
    ModuliDimension d = virtual_dimension(nu);
    CHECK(d.virtual_dim == 1);
    REQUIRE(d.crossings.size() == 1);
    CHECK(d.crossings[0].label == "dilation");
    CHECK(d.crossings[0].multiplicity == 1);
  }
  for (double nu : {-0.9, -0.5, -0.1}) {
    ModuliDimension d = virtual_dimension(nu);
    CHECK(d.virtual_dim == 9);
    REQUIRE(d.crossings.size() == 2);
    CHECK(d.crossings[0].label == "dilation");
    CHECK(d.crossings[1].label == "translation");
    CHECK(d.crossings[1].multiplicity == 8);
  }
  // no eigenvalue in (0, 1/4): still the base index
  CHECK(virtual_dimension(-2.25).virtual_dim == 0);
  CHECK_THROWS(virtual_dimension(-1.0));  // critical
  CHECK_THROWS(virtual_dimension(0.5));   // outside (-5/2, 0)
}

TEST_CASE("monotone staircase") {
  int prev = -1;
  for (double nu = -2.49; nu < -0.02; nu += 0.041) {
    ModuliDimension d = virtual_dimension(nu);
    CHECK(d.virtual_dim >= prev);
    prev = d.virtual_dim;
  }
  CHECK(prev == 9);
}

TEST_CASE("laplacian weight gap") {
  WeightGap g = laplacian_weight_gap();
  CHECK(g.lo == -6.0);
  CHECK(g.hi == 0.0);
  CHECK(laplacian_indicial_value(rat(-3)) == rat(-9));
  CHECK(laplacian_indicial_value(rat(0)) == 0);
  CHECK(laplacian_indicial_value(rat(-6)) == 0);
  CHECK(laplacian_indicial_value(rat(1)) == 7);
  // negative exactly on (-6, 0), sampled densely
  for (long k = -70; k <= 10; ++k) {
    Rational lam = rat(k, 10);
    Rational v = laplacian_indicial_value(lam);
    bool inside = k > -60 && k < 0;
    CHECK((v < 0) == inside);
  }
}

TEST_CASE("deformation interpretation report") {
  DeformationReport rep = deformation_rate_interpretation();
  bool saw_dilation = false, saw_translation = false;
  for (const auto& r : rep.rates) {
    if (r.label == "dilation") {
      saw_dilation = true;
      CHECK(r.multiplicity == 1);
    }
    if (r.label == "translation") {
      saw_translation = true;
      CHECK(r.multiplicity == 8);
    }
  }
  CHECK(saw_dilation);
  CHECK(saw_translation);
}
