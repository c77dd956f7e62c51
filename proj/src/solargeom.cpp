#include "solarst/solargeom.hpp"

#include <algorithm>
#include <cmath>

#include "solarst/errors.hpp"

namespace solarst::solar {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;

double wrap_deg360(double x) {
  x = std::fmod(x, 360.0);
  return x < 0.0 ? x + 360.0 : x;
}

double wrap_pm(double x, double half) {  // wrap into (-half, half]
  x = std::fmod(x, 2.0 * half);
  if (x > half) x -= 2.0 * half;
  if (x <= -half) x += 2.0 * half;
  return x;
}

}  // namespace

SolarPosition solar_position(Instant time, double latitude_deg, double longitude_deg) {
  const CivilDate date = civil_of(time);
  if (date.year < 1950 || date.year > 2100)
    throw TimeRangeError("solar ephemeris valid 1950..2100, got year " +
                         std::to_string(date.year));
  if (!std::isfinite(latitude_deg) || !std::isfinite(longitude_deg) ||
      std::abs(latitude_deg) > 90.0 || std::abs(longitude_deg) > 180.0)
    throw DomainError("site coordinates out of range");

  // Days from J2000.0 (2000-01-01 12:00 UTC = unix 946728000).
  const double n = (static_cast<double>(time) - 946728000.0) / 86400.0;

  // Michalsky (1988) low-precision ephemeris, all in degrees.
  const double mean_long = wrap_deg360(280.460 + 0.9856474 * n);
  const double mean_anom = wrap_deg360(357.528 + 0.9856003 * n) * kDegToRad;
  const double ecl_long =
      wrap_deg360(mean_long + 1.915 * std::sin(mean_anom) + 0.020 * std::sin(2.0 * mean_anom)) *
      kDegToRad;
  const double obliquity = (23.439 - 0.0000004 * n) * kDegToRad;

  const double ra =
      std::atan2(std::cos(obliquity) * std::sin(ecl_long), std::cos(ecl_long)) / kDegToRad;
  const double decl = std::asin(std::sin(obliquity) * std::sin(ecl_long));

  // Equation of time in degrees: mean sun minus apparent sun right ascension.
  const double eot_deg = wrap_pm(mean_long - wrap_deg360(ra), 180.0);

  // Apparent solar time (hours): UTC + 4 min/deg longitude + equation of time.
  const double ast_h = hours_of_day(time) + longitude_deg / 15.0 + eot_deg / 15.0;
  const double hour_angle = wrap_pm((ast_h - 12.0) * 15.0, 180.0) * kDegToRad;

  const double lat = latitude_deg * kDegToRad;
  double sin_e = std::sin(lat) * std::sin(decl) +
                 std::cos(lat) * std::cos(decl) * std::cos(hour_angle);
  sin_e = std::clamp(sin_e, -1.0, 1.0);

  SolarPosition pos;
  pos.declination = decl;
  pos.hour_angle = hour_angle;
  pos.elevation = std::asin(sin_e);
  pos.zenith = kPi / 2.0 - pos.elevation;
  pos.eccentricity_factor =
      1.0 + 0.033 * std::cos(2.0 * kPi * day_of_year(time) / 365.0);
  return pos;
}

double apparent_solar_time_hours(const SolarPosition& pos) {
  double h = pos.hour_angle / (15.0 * kDegToRad) + 12.0;
  if (h < 0.0) h += 24.0;
  if (h >= 24.0) h -= 24.0;
  return h;
}

double cos_incidence(const SolarPosition& pos, double latitude_deg,
                     const PanelOrientation& panel) {
  const double lat = latitude_deg * kDegToRad;
  const double sd = std::sin(pos.declination), cd = std::cos(pos.declination);
  const double sl = std::sin(lat), cl = std::cos(lat);
  const double sb = std::sin(panel.tilt), cb = std::cos(panel.tilt);
  const double sg = std::sin(panel.azimuth), cg = std::cos(panel.azimuth);
  const double sh = std::sin(pos.hour_angle), ch = std::cos(pos.hour_angle);
  return sd * sl * cb - sd * cl * sb * cg + cd * cl * cb * ch + cd * sl * sb * cg * ch +
         cd * sb * sg * sh;
}

double extraterrestrial_horizontal(const SolarPosition& pos, double solar_constant) {
  const double c = std::cos(pos.zenith);
  return c > 0.0 ? solar_constant * pos.eccentricity_factor * c : 0.0;
}

}  // namespace solarst::solar
