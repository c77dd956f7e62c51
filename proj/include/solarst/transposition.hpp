#ifndef SOLARST_TRANSPOSITION_HPP
#define SOLARST_TRANSPOSITION_HPP

#include <vector>

#include "solarst/decomposition.hpp"
#include "solarst/exec.hpp"
#include "solarst/solargeom.hpp"

namespace solarst::poa {

enum class SkyVariant { kIsotropic, kAnisotropic };

struct SkyModel {
  SkyVariant variant = SkyVariant::kAnisotropic;
  double albedo = 0.2;  // [0, 1]; 0.2 is the usual grass value
};

struct PoaIrradiance {
  double g_beam = 0.0;
  double g_diffuse = 0.0;
  double g_reflected = 0.0;
  double g_total = 0.0;
};

// Beam clearness weight for the circumsolar term: dni over extraterrestrial
// normal irradiance, clamped to [0, 1].
double anisotropy_index(const decomp::IrradianceComponents& components,
                        const solar::SolarPosition& pos,
                        double solar_constant = solar::kSolarConstantWm2);

PoaIrradiance poa(const decomp::IrradianceComponents& components, const solar::SolarPosition& pos,
                  double latitude_deg, const solar::PanelOrientation& panel, const SkyModel& sky,
                  double solar_constant = solar::kSolarConstantWm2);

std::vector<PoaIrradiance> poa_series(const std::vector<decomp::IrradianceComponents>& components,
                                      const std::vector<solar::SolarPosition>& positions,
                                      double latitude_deg, const solar::PanelOrientation& panel,
                                      const SkyModel& sky, const Exec& exec = Exec::serial(),
                                      double solar_constant = solar::kSolarConstantWm2);

}  // namespace solarst::poa

#endif
