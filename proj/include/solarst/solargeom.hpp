#ifndef SOLARST_SOLARGEOM_HPP
#define SOLARST_SOLARGEOM_HPP

#include "solarst/ingest.hpp"
#include "solarst/timeutil.hpp"

namespace solarst::solar {

// Azimuth convention throughout: 0 = due south, positive towards west. This
// matches the sign structure of the incidence expansion below; convert at CLI
// boundaries if your data uses north-referenced azimuths.

struct SolarPosition {
  double declination = 0.0;          // rad
  double hour_angle = 0.0;           // rad, 0 at solar noon, positive afternoon
  double elevation = 0.0;            // rad
  double zenith = 0.0;               // rad, exactly pi/2 - elevation
  double eccentricity_factor = 1.0;  // dimensionless, ~[0.967, 1.033]
};

struct PanelOrientation {
  double tilt = 0.0;     // rad, [0, pi/2]
  double azimuth = 0.0;  // rad, 0 = south, west positive
};

constexpr double kSolarConstantWm2 = 1361.1;

// Low-precision solar ephemeris after Michalsky (1988); hour angle built from
// apparent solar time (equation of time + 4 min/deg longitude correction).
// Valid 1950..2100; throws TimeRangeError outside.
SolarPosition solar_position(Instant time, double latitude_deg, double longitude_deg);

inline SolarPosition solar_position(Instant time, const ingest::StationMeta& site) {
  return solar_position(time, site.latitude, site.longitude);
}

// Apparent solar time in hours [0, 24), derivable from the hour angle; the
// diffuse-fraction predictors need it explicitly.
double apparent_solar_time_hours(const SolarPosition& pos);

// Five-term incidence expansion (Duffie & Beckman); reduces to cos(zenith)
// for tilt = 0.
double cos_incidence(const SolarPosition& pos, double latitude_deg, const PanelOrientation& panel);

// G0h = S0 * eccentricity * max(cos zenith, 0).
double extraterrestrial_horizontal(const SolarPosition& pos,
                                   double solar_constant = kSolarConstantWm2);

}  // namespace solarst::solar

#endif
