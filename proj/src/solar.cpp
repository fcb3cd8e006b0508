#include "hapdc/solar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hapdc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDegToRad = kPi / 180.0;
constexpr double kMaxDeclinationRad = 23.45 * kDegToRad;
}  // namespace

void validate(const GeoDay& geo) {
    if (geo.latitude_deg < -90.0 || geo.latitude_deg > 90.0) {
        throw std::domain_error("latitude_deg: must be in [-90, +90], got " +
                                std::to_string(geo.latitude_deg));
    }
    if (geo.day_of_year < 1 || geo.day_of_year > 365) {
        throw std::domain_error("day_of_year: must be in [1, 365], got " +
                                std::to_string(geo.day_of_year));
    }
}

void validate(const PvConfig& pv) {
    if (!(pv.area_m2 > 0.0)) {
        throw std::domain_error("area_m2: must be > 0");
    }
    if (!(pv.efficiency > 0.0) || pv.efficiency > 1.0) {
        throw std::domain_error("efficiency: must be in (0, 1]");
    }
    if (!(pv.transmittance > 0.0) || pv.transmittance > 1.0) {
        throw std::domain_error("transmittance: must be in (0, 1]");
    }
}

double solar_declination(int day_of_year) {
    if (day_of_year < 1 || day_of_year > 365) {
        throw std::domain_error("day_of_year: must be in [1, 365], got " +
                                std::to_string(day_of_year));
    }
    // Cooper's formula; zero at day 81, extremes at the solstices.
    return kMaxDeclinationRad * std::sin(2.0 * kPi * (284.0 + day_of_year) / 365.0);
}

double sunset_hour_angle(double latitude_rad, double declination_rad) {
    const double cos_ws = std::clamp(-std::tan(latitude_rad) * std::tan(declination_rad),
                                     -1.0, 1.0);
    return std::acos(cos_ws);
}

double daylight_hours(const GeoDay& geo) {
    validate(geo);
    const double phi = geo.latitude_deg * kDegToRad;
    const double delta = solar_declination(geo.day_of_year);
    return 24.0 * sunset_hour_angle(phi, delta) / kPi;
}

double daily_harvest_kwh(const GeoDay& geo, const PvConfig& pv) {
    validate(geo);
    validate(pv);

    const double phi = geo.latitude_deg * kDegToRad;
    const double delta = solar_declination(geo.day_of_year);
    const double omega_s = sunset_hour_angle(phi, delta);
    if (omega_s <= 0.0) {
        return 0.0;  // polar night
    }

    const double sin_term = std::sin(phi) * std::sin(delta);
    const double cos_term = std::cos(phi) * std::cos(delta);

    // Trapezoid over the daylight window in hour angle; one radian of hour
    // angle is 12/pi hours. Step chosen so the time step stays <= 60 s.
    const double daylight_s = 2.0 * omega_s * (12.0 / kPi) * 3600.0;
    const int steps = std::max(16, static_cast<int>(std::ceil(daylight_s / 60.0)));
    const double dw = 2.0 * omega_s / steps;

    double sum = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double omega = -omega_s + i * dw;
        const double cos_zenith = sin_term + cos_term * std::cos(omega);
        const double irradiance = kSolarConstantWm2 * std::max(0.0, cos_zenith);
        const double weight = (i == 0 || i == steps) ? 0.5 : 1.0;
        sum += weight * irradiance;
    }
    const double dt_s = dw * (12.0 / kPi) * 3600.0;
    const double joules_per_m2 = sum * dt_s;

    return pv.efficiency * pv.area_m2 * pv.transmittance * joules_per_m2 / 3.6e6;
}

}  // namespace hapdc
