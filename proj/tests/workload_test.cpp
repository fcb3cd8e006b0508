#include <stdexcept>

#include "doctest.h"
#include "hapdc/errors.hpp"
#include "hapdc/workload.hpp"

using namespace hapdc;

TEST_CASE("utilization is arrival rate over service rate") {
    WorkloadSpec w;
    ServerSpec s;  // 10000 MIPS
    w.arrival_rate = 0.0;
    CHECK(utilization(w, s) == 0.0);
    w.arrival_rate = 70.0;  // 100 MI tasks
    CHECK(utilization(w, s) == doctest::Approx(0.70).epsilon(1e-12));
    w.arrival_rate = 100.0;
    CHECK(utilization(w, s) == doctest::Approx(1.0).epsilon(1e-12));
    // linear in lambda and L; halving mu doubles rho
    w.arrival_rate = 35.0;
    CHECK(utilization(w, s) == doctest::Approx(0.35).epsilon(1e-12));
    s.service_rate_mips = 5000.0;
    CHECK(utilization(w, s) == doctest::Approx(0.70).epsilon(1e-12));
}

TEST_CASE("utilization band thresholds") {
    CHECK(classify_utilization(0.5) == UtilizationBand::under);
    CHECK(classify_utilization(0.699999) == UtilizationBand::under);
    CHECK(classify_utilization(0.70) == UtilizationBand::effective);
    CHECK(classify_utilization(0.85) == UtilizationBand::effective);
    CHECK(classify_utilization(0.95) == UtilizationBand::over);
    CHECK(classify_utilization(0.99) == UtilizationBand::over);
    CHECK(to_string(UtilizationBand::effective) == doctest::String("effective"));
    CHECK_THROWS_AS(classify_utilization(-0.1), std::domain_error);
}

TEST_CASE("server power interpolates between idle floor and peak") {
    ServerSpec s;  // 200 W peak, idle fraction 0.6
    CHECK(server_power(s, 0.0) == doctest::Approx(120.0).epsilon(1e-12));
    CHECK(server_power(s, 1.0) == doctest::Approx(200.0).epsilon(1e-12));
    CHECK(server_power(s, 0.5) == doctest::Approx(160.0).epsilon(1e-12));
    CHECK(server_power(s, 0.0) / server_power(s, 1.0) ==
          doctest::Approx(s.idle_fraction).epsilon(1e-12));
    CHECK_THROWS_AS(server_power(s, -0.01), std::domain_error);
    CHECK_THROWS_AS(server_power(s, 1.01), std::domain_error);
}

TEST_CASE("mm1 sojourn formula and stability boundary") {
    WorkloadSpec w;  // mu_t = 100 tasks/s with defaults
    ServerSpec s;
    w.arrival_rate = 0.0;
    CHECK(mm1_sojourn(w, s) == doctest::Approx(0.01).epsilon(1e-12));  // pure service
    w.arrival_rate = 50.0;
    CHECK(mm1_sojourn(w, s) == doctest::Approx(0.02).epsilon(1e-12));
    // strictly increasing in lambda
    double prev = 0.0;
    for (double lam : {10.0, 40.0, 70.0, 90.0, 99.0}) {
        w.arrival_rate = lam;
        const double t = mm1_sojourn(w, s);
        CHECK(t > prev);
        prev = t;
    }
    w.arrival_rate = 100.0;
    CHECK_THROWS_AS(mm1_sojourn(w, s), instability_error);
    w.arrival_rate = 150.0;
    CHECK_THROWS_AS(mm1_sojourn(w, s), instability_error);
}

TEST_CASE("des oracle is deterministic and matches the analytic mean") {
    WorkloadSpec w;
    ServerSpec s;
    w.arrival_rate = 50.0;  // rho = 0.5, T = 0.02 s
    const double a = des_oracle(w, s, 100000, 7);
    const double b = des_oracle(w, s, 100000, 7);
    CHECK(a == b);  // identical bits for identical seed
    CHECK(a == doctest::Approx(0.02).epsilon(0.05));
    CHECK(des_oracle(w, s, 100000, 8) != a);

    w.arrival_rate = 0.0;  // pure service: mean 1/mu = 0.01 s
    CHECK(des_oracle(w, s, 100000, 7) == doctest::Approx(0.01).epsilon(0.02));

    w.arrival_rate = 100.0;
    CHECK_THROWS_AS(des_oracle(w, s, 1000, 7), instability_error);
    w.arrival_rate = 50.0;
    CHECK_THROWS_AS(des_oracle(w, s, 0, 7), std::domain_error);
}

TEST_CASE("workload validation rejects bad fields") {
    WorkloadSpec w;
    w.arrival_rate = -1.0;
    CHECK_THROWS_WITH_AS(validate(w), doctest::Contains("arrival_rate"), std::domain_error);
    w = WorkloadSpec{};
    w.mean_task_length_mi = 0.0;
    CHECK_THROWS_AS(validate(w), std::domain_error);
    ServerSpec s;
    s.idle_fraction = 1.2;
    CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("idle_fraction"), std::domain_error);
}
