#include "solarst/transposition.hpp"

#include <algorithm>
#include <cmath>

#include "solarst/errors.hpp"

namespace solarst::poa {

double anisotropy_index(const decomp::IrradianceComponents& components,
                        const solar::SolarPosition& pos, double solar_constant) {
  const double g0n = solar_constant * pos.eccentricity_factor;
  if (g0n <= 0.0 || components.dni <= 0.0) return 0.0;
  return std::min(components.dni / g0n, 1.0);
}

PoaIrradiance poa(const decomp::IrradianceComponents& components, const solar::SolarPosition& pos,
                  double latitude_deg, const solar::PanelOrientation& panel, const SkyModel& sky,
                  double solar_constant) {
  if (!(sky.albedo >= 0.0 && sky.albedo <= 1.0)) throw ConfigError("albedo must be in [0, 1]");

  const double cos_theta = std::max(solar::cos_incidence(pos, latitude_deg, panel), 0.0);
  const double cos_beta = std::cos(panel.tilt);
  const double sky_view = 0.5 * (1.0 + cos_beta);

  PoaIrradiance out;
  out.g_beam = components.dni * cos_theta;
  if (sky.variant == SkyVariant::kIsotropic) {
    out.g_diffuse = components.dhi * sky_view;
  } else {
    // Circumsolar ratio guarded against low sun: cos(zenith) floored at
    // cos(85 deg), cos(theta) already floored at 0.
    const double f1 = anisotropy_index(components, pos, solar_constant);
    const double rb = cos_theta / std::max(std::cos(pos.zenith), std::cos(decomp::kZenithCapRad));
    out.g_diffuse = components.dhi * (f1 * rb + (1.0 - f1) * sky_view);
  }
  out.g_reflected = components.ghi * sky.albedo * 0.5 * (1.0 - cos_beta);
  out.g_total = out.g_beam + out.g_diffuse + out.g_reflected;
  return out;
}

std::vector<PoaIrradiance> poa_series(const std::vector<decomp::IrradianceComponents>& components,
                                      const std::vector<solar::SolarPosition>& positions,
                                      double latitude_deg, const solar::PanelOrientation& panel,
                                      const SkyModel& sky, const Exec& exec,
                                      double solar_constant) {
  if (components.size() != positions.size()) throw InputError("poa_series: length mismatch");
  std::vector<PoaIrradiance> out(components.size());
  for_index(components.size(), exec, [&](std::size_t i) {
    out[i] = poa(components[i], positions[i], latitude_deg, panel, sky, solar_constant);
  });
  return out;
}

}  // namespace solarst::poa
