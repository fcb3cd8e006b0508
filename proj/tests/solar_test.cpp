#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hapdc/solar.hpp"

using namespace hapdc;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Closed-form daily extraterrestrial insolation, J/m^2. Independent of the
// trapezoid path in daily_harvest_kwh.
double closed_form_kwh(const GeoDay& geo, const PvConfig& pv) {
    const double phi = geo.latitude_deg * kPi / 180.0;
    const double delta = 23.45 * kPi / 180.0 *
                         std::sin(2.0 * kPi * (284 + geo.day_of_year) / 365.0);
    const double x = std::clamp(-std::tan(phi) * std::tan(delta), -1.0, 1.0);
    const double ws = std::acos(x);
    const double j_per_m2 =
        (86400.0 / kPi) * kSolarConstantWm2 *
        (std::cos(phi) * std::cos(delta) * std::sin(ws) + ws * std::sin(phi) * std::sin(delta));
    return pv.efficiency * pv.area_m2 * pv.transmittance * j_per_m2 / 3.6e6;
}
}  // namespace

TEST_CASE("solar declination hits the equinox and solstices") {
    CHECK(std::abs(solar_declination(81)) < 0.01);                     // vernal equinox
    CHECK(solar_declination(172) == doctest::Approx(0.4092759195545874).epsilon(1e-12));
    CHECK(solar_declination(355) == doctest::Approx(-0.4092759195545874).epsilon(1e-12));
    const double cap = 23.45 * kPi / 180.0;
    for (int day = 1; day <= 365; ++day) {
        CHECK(std::abs(solar_declination(day)) <= cap + 1e-12);
    }
    CHECK_THROWS_AS(solar_declination(0), std::domain_error);
    CHECK_THROWS_AS(solar_declination(366), std::domain_error);
}

TEST_CASE("daylight hours at the equator and in polar regimes") {
    CHECK(daylight_hours({0.0, 81}) == doctest::Approx(12.0).epsilon(0.01));
    CHECK(daylight_hours({80.0, 355}) == 0.0);   // polar night
    CHECK(daylight_hours({80.0, 172}) == 24.0);  // polar day
    CHECK(sunset_hour_angle(0.0, 0.0) == doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("daily harvest matches the worked example and the closed form") {
    const GeoDay eq81{0.0, 81};
    const PvConfig pv;  // 8000 m^2, eta 0.4
    const double kwh = daily_harvest_kwh(eq81, pv);
    CHECK(kwh == doctest::Approx(33271.224404853114).epsilon(1e-12));  // frozen trapezoid value
    CHECK(kwh == doctest::Approx(closed_form_kwh(eq81, pv)).epsilon(0.005));
}

TEST_CASE("harvest is linear in area, efficiency and transmittance") {
    const GeoDay geo{40.0, 200};
    PvConfig pv;
    const double base = daily_harvest_kwh(geo, pv);
    pv.area_m2 *= 2.0;
    CHECK(daily_harvest_kwh(geo, pv) == doctest::Approx(2.0 * base).epsilon(1e-12));
    pv.area_m2 /= 2.0;
    pv.transmittance = 0.5;
    CHECK(daily_harvest_kwh(geo, pv) == doctest::Approx(0.5 * base).epsilon(1e-12));
}

TEST_CASE("polar night harvests exactly zero") {
    CHECK(daily_harvest_kwh({80.0, 355}, PvConfig{}) == 0.0);
    CHECK(daily_harvest_kwh({-80.0, 172}, PvConfig{}) == 0.0);
}

TEST_CASE("northern summer beats northern winter above the tropic") {
    for (double lat : {30.0, 45.0, 60.0}) {
        CHECK(daily_harvest_kwh({lat, 172}, PvConfig{}) >=
              daily_harvest_kwh({lat, 355}, PvConfig{}));
    }
}

TEST_CASE("hemispheric symmetry between solstices") {
    const PvConfig pv;
    for (double lat : {15.0, 35.0, 55.0}) {
        const double north = daily_harvest_kwh({lat, 172}, pv);
        const double south = daily_harvest_kwh({-lat, 355}, pv);
        CHECK(north == doctest::Approx(south).epsilon(0.01));
    }
}

TEST_CASE("solar input validation") {
    CHECK_THROWS_WITH_AS(daily_harvest_kwh({-100.0, 81}, PvConfig{}),
                         doctest::Contains("latitude_deg"), std::domain_error);
    PvConfig bad;
    bad.efficiency = 1.5;
    CHECK_THROWS_WITH_AS(daily_harvest_kwh({0.0, 81}, bad), doctest::Contains("efficiency"),
                         std::domain_error);
    bad = PvConfig{};
    bad.area_m2 = 0.0;
    CHECK_THROWS_AS(daily_harvest_kwh({0.0, 81}, bad), std::domain_error);
}
