#pragma once

#include <stdexcept>

namespace hapdc {

// Above-cloud solar constant, W/m^2. No atmospheric attenuation is applied at
// stratospheric altitude; `PvConfig::transmittance` scales it if needed.
inline constexpr double kSolarConstantWm2 = 1361.0;

// Latitude/day point driving the solar geometry. 365-day year, no leap days.
struct GeoDay {
    double latitude_deg = 0.0;  // [-90, +90]
    int day_of_year = 1;        // [1, 365]
};

struct PvConfig {
    double area_m2 = 8000.0;
    double efficiency = 0.4;     // (0, 1]
    double transmittance = 1.0;  // optional attenuation scalar, (0, 1]
};

void validate(const GeoDay& geo);
void validate(const PvConfig& pv);

// Solar declination for a day of the year, radians. |delta| <= 23.45 deg.
double solar_declination(int day_of_year);

// Daylight duration in hours, [0, 24]. Polar day/night handled by clamping
// the sunset hour angle.
double daylight_hours(const GeoDay& geo);

// Sunset hour angle omega_s in radians, [0, pi].
double sunset_hour_angle(double latitude_rad, double declination_rad);

// Daily harvested energy in kWh: efficiency * area * transmittance times the
// horizontal extraterrestrial irradiance integrated over daylight (trapezoid,
// step <= 60 s).
double daily_harvest_kwh(const GeoDay& geo, const PvConfig& pv);

}  // namespace hapdc
