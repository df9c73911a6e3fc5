#include <doctest.h>

#include <cmath>

#include "gmrfd/errors.hpp"
#include "gmrfd/network_model.hpp"
#include "oracles.hpp"

using namespace gmrfd;

TEST_CASE("deployment geometry") {
  const Deployment dep(1.0, 9);
  CHECK(dep.node_count() == 361);
  CHECK(dep.spacing() == doctest::Approx(1.0 / 9.0));
  CHECK(dep.density() == doctest::Approx(90.25));
  CHECK_THROWS_AS(Deployment(0.0, 1), DomainError);
  CHECK_THROWS_AS(Deployment(1.0, 0), DomainError);
}

TEST_CASE("energy model validation") {
  CHECK_THROWS_AS(EnergyModel(0.0, 0.1, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(EnergyModel(50.0, -0.1, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(EnergyModel(50.0, 0.1, 1.9, 1.0), DomainError);
  CHECK_THROWS_AS(EnergyModel(50.0, 0.1, 2.0, 0.0), DomainError);
}

TEST_CASE("per-edge communication energy") {
  const EnergyModel em(50.0, 0.1, 2.0, 1.0);
  CHECK(comm_energy_per_edge(em, 1.0) == doctest::Approx(0.1));
  CHECK(comm_energy_per_edge(em, 0.5) == doctest::Approx(0.025));
  CHECK(comm_energy_per_edge(em, 1e-9) < 1e-18);
  CHECK_THROWS_AS(comm_energy_per_edge(em, 0.0), DomainError);
}

TEST_CASE("hop count closed form matches enumeration") {
  CHECK(hop_count_sum(0) == 0);
  CHECK(hop_count_sum(1) == 12);
  for (int n = 0; n <= 200; ++n) REQUIRE(hop_count_sum(n) == oracle::hop_count(n));
  CHECK_THROWS_AS(hop_count_sum(-1), DomainError);
}

TEST_CASE("total communication energy") {
  const EnergyModel em(50.0, 0.1, 2.0, 1.0);
  CHECK(total_comm_energy(em, Deployment(1.0, 1)) == doctest::Approx(1.2));
  CHECK(total_comm_energy(EnergyModel(50.0, 0.0, 2.0, 1.0), Deployment(1.0, 40)) == 0.0);
  // L = 1, nu = 2: 2n(n+1)(2n+1) E0 / n^2, linear growth in n.
  for (int n = 1; n <= 100; ++n) {
    const double expected = 0.1 * 2.0 * (n + 1.0) * (2.0 * n + 1.0) / n;
    CHECK(total_comm_energy(em, Deployment(1.0, n)) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("sensing energy allocation") {
  const EnergyModel em(50.0, 0.1, 2.0, 1.0);
  CHECK(sensing_energy_per_node(em, Deployment(1.0, 1)) == doctest::Approx((50.0 - 1.2) / 9.0));
  const EnergyModel free_comm(50.0, 0.0, 2.0, 1.0);
  CHECK(sensing_energy_per_node(free_comm, Deployment(1.0, 3)) == doctest::Approx(50.0 / 49.0));
  CHECK_THROWS_AS(sensing_energy_per_node(EnergyModel(1.0, 10.0, 2.0, 1.0), Deployment(1.0, 1)),
                  InfeasibleDensityError);
}

TEST_CASE("sensing energy decreases with n and feasibility is monotone") {
  const EnergyModel em(50.0, 0.1, 2.0, 1.0);
  double prev = INFINITY;
  bool infeasible_seen = false;
  for (int n = 1; n <= 200; ++n) {
    const Deployment dep(1.0, n);
    const bool feasible = total_comm_energy(em, dep) < em.total();
    if (infeasible_seen) REQUIRE_FALSE(feasible);
    if (!feasible) {
      infeasible_seen = true;
      continue;
    }
    const double es = sensing_energy_per_node(em, dep);
    REQUIRE(es > 0.0);
    REQUIRE(es < prev);
    prev = es;
  }
  CHECK(infeasible_seen);
}

TEST_CASE("high-density scaling of sensing energy") {
  // E_s = O(n^-2) while communication (~0.4 n here) is small against E.
  const EnergyModel em(1e5, 0.1, 2.0, 1.0);
  const double a = 500.0 * 500.0 * sensing_energy_per_node(em, Deployment(1.0, 500));
  const double b = 1000.0 * 1000.0 * sensing_energy_per_node(em, Deployment(1.0, 1000));
  CHECK(std::abs(a - b) / b < 0.01);
}

TEST_CASE("SNR from sensing energy") {
  CHECK(node_snr(EnergyModel(50.0, 0.1, 2.0, 1.0), 5.4222) == doctest::Approx(5.4222));
  CHECK(node_snr(EnergyModel(50.0, 0.1, 2.0, 1.0), 0.0) == 0.0);
  CHECK(node_snr(EnergyModel(50.0, 0.1, 2.0, 2.0), 3.0) == doctest::Approx(6.0));
}

TEST_CASE("total information") {
  const TotalInformation t = total_information(Deployment(1.0, 1), InfoRates{0.1, 0.3});
  CHECK(t.kli == doctest::Approx(0.9));
  CHECK(t.mi == doctest::Approx(2.7));
  const TotalInformation z = total_information(Deployment(1.0, 5), InfoRates{});
  CHECK(z.kli == 0.0);
  CHECK(z.mi == 0.0);
  for (int n = 1; n <= 100; ++n) {
    const Deployment dep(1.0, n);
    const TotalInformation v = total_information(dep, InfoRates{0.37, 0.61});
    const double area = 4.0;
    CHECK(v.kli == doctest::Approx(area * dep.density() * 0.37).epsilon(1e-15));
    CHECK(v.mi == doctest::Approx(area * dep.density() * 0.61).epsilon(1e-15));
  }
}
