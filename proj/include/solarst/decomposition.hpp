#ifndef SOLARST_DECOMPOSITION_HPP
#define SOLARST_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "solarst/exec.hpp"
#include "solarst/solargeom.hpp"

namespace solarst::decomp {

struct IrradianceComponents {
  double ghi = 0.0;     // W/m^2
  double bhi = 0.0;     // beam on horizontal = dni * cos(zenith)
  double dhi = 0.0;     // diffuse on horizontal
  double dni = 0.0;     // direct normal
  double zenith = 0.0;  // rad, copied from the solar position
};

struct DiffuseFractionInputs {
  double kt = 0.0;                  // clearness index, clamped to [0, 1]
  double apparent_solar_time = 0.0; // hours
  double elevation = 0.0;           // rad
  double daily_kt = 0.0;
  double persistence = 0.0;         // mean of neighbouring kt values
};

// Logistic diffuse-fraction coefficients (Ridley/Boland/Lauret style). The
// linear predictor applies elevation in degrees and solar time in hours;
// profiles live in data files so regional refits can be swapped in.
struct LogisticCoefficients {
  double intercept = 0.0;
  double kt = 0.0;
  double ast = 0.0;
  double elevation = 0.0;  // per degree
  double daily_kt = 0.0;
  double persistence = 0.0;
};

LogisticCoefficients load_coefficient_profile(const std::string& path);

// Beyond this zenith all GHI is treated as diffuse (1/cos blows up).
constexpr double kZenithCapRad = 85.0 * 3.14159265358979323846 / 180.0;

double clearness_index(double ghi, double g0h);

// d = 1 / (1 + exp(linear predictor)); strictly inside (0, 1).
double diffuse_fraction(const DiffuseFractionInputs& in, const LogisticCoefficients& coeffs);

IrradianceComponents decompose(double ghi, const solar::SolarPosition& pos,
                               const DiffuseFractionInputs& context,
                               const LogisticCoefficients& coeffs,
                               double solar_constant = solar::kSolarConstantWm2);

// Series driver: computes the daily clearness index and the persistence
// predictor in one pass, then maps decompose over the instants. Missing GHI
// yields an all-zero component set flagged by the parallel `valid` vector.
struct SeriesDecomposition {
  std::vector<IrradianceComponents> components;
  std::vector<bool> valid;
};

SeriesDecomposition decompose_series(const std::vector<Instant>& times,
                                     const std::vector<std::optional<double>>& ghi,
                                     double latitude_deg, double longitude_deg,
                                     const LogisticCoefficients& coeffs,
                                     const Exec& exec = Exec::serial(),
                                     double solar_constant = solar::kSolarConstantWm2);

}  // namespace solarst::decomp

#endif
