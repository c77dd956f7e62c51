#include "solarst/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "solarst/errors.hpp"

namespace solarst::decomp {

namespace {
constexpr double kRadToDeg = 180.0 / 3.14159265358979323846;
}

LogisticCoefficients load_coefficient_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open coefficient profile: " + path);
  std::map<std::string, double> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string key, eq;
    double value;
    if (ss >> key >> eq >> value && eq == "=") kv[key] = value;
  }
  LogisticCoefficients c;
  const std::pair<const char*, double*> fields[] = {
      {"intercept", &c.intercept},   {"kt", &c.kt},
      {"ast_hours", &c.ast},         {"elevation_deg", &c.elevation},
      {"daily_kt", &c.daily_kt},     {"persistence", &c.persistence},
  };
  for (const auto& [key, dst] : fields) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError(std::string("profile missing key '") + key + "': " + path);
    if (!std::isfinite(it->second)) throw ConfigError(std::string("non-finite '") + key + "': " + path);
    *dst = it->second;
  }
  return c;
}

double clearness_index(double ghi, double g0h) {
  if (g0h <= 0.0 || ghi <= 0.0) return 0.0;
  return std::min(ghi / g0h, 1.0);
}

double diffuse_fraction(const DiffuseFractionInputs& in, const LogisticCoefficients& coeffs) {
  for (double c : {coeffs.intercept, coeffs.kt, coeffs.ast, coeffs.elevation, coeffs.daily_kt,
                   coeffs.persistence})
    if (!std::isfinite(c)) throw ConfigError("non-finite diffuse-fraction coefficient");
  const double lp = coeffs.intercept + coeffs.kt * in.kt + coeffs.ast * in.apparent_solar_time +
                    coeffs.elevation * in.elevation * kRadToDeg + coeffs.daily_kt * in.daily_kt +
                    coeffs.persistence * in.persistence;
  return 1.0 / (1.0 + std::exp(lp));
}

IrradianceComponents decompose(double ghi, const solar::SolarPosition& pos,
                               const DiffuseFractionInputs& context,
                               const LogisticCoefficients& coeffs, double solar_constant) {
  if (!(ghi >= 0.0)) throw DomainError("decompose: ghi must be >= 0");
  IrradianceComponents out;
  out.zenith = pos.zenith;
  if (ghi == 0.0) return out;

  out.ghi = ghi;
  if (pos.zenith >= kZenithCapRad) {
    out.dhi = ghi;  // low sun: the division in bhi = dni*cos(z) is unusable
    return out;
  }
  const double d = diffuse_fraction(context, coeffs);
  double dhi = d * ghi;
  double bhi = ghi - dhi;
  const double cosz = std::cos(pos.zenith);
  double dni = bhi / cosz;
  const double dni_max = solar_constant * pos.eccentricity_factor;
  if (dni > dni_max) {  // physical cap; keep closure by pushing excess to dhi
    dni = dni_max;
    bhi = dni * cosz;
    dhi = ghi - bhi;
  }
  out.bhi = bhi;
  out.dhi = dhi;
  out.dni = dni;
  return out;
}

SeriesDecomposition decompose_series(const std::vector<Instant>& times,
                                     const std::vector<std::optional<double>>& ghi,
                                     double latitude_deg, double longitude_deg,
                                     const LogisticCoefficients& coeffs, const Exec& exec,
                                     double solar_constant) {
  if (times.size() != ghi.size()) throw InputError("decompose_series: length mismatch");
  const std::size_t n = times.size();

  std::vector<solar::SolarPosition> pos(n);
  std::vector<double> kt(n, 0.0);
  std::vector<double> g0h(n, 0.0);
  for_index(n, exec, [&](std::size_t i) {
    pos[i] = solar::solar_position(times[i], latitude_deg, longitude_deg);
    g0h[i] = solar::extraterrestrial_horizontal(pos[i], solar_constant);
    kt[i] = ghi[i] ? clearness_index(*ghi[i], g0h[i]) : 0.0;
  });

  // Daily clearness index: observed sum over extraterrestrial sum, per UTC day.
  std::map<Instant, std::pair<double, double>> day_sums;
  for (std::size_t i = 0; i < n; ++i)
    if (ghi[i] && g0h[i] > 0.0) {
      auto& [num, den] = day_sums[day_start(times[i])];
      num += *ghi[i];
      den += g0h[i];
    }

  SeriesDecomposition out;
  out.components.assign(n, IrradianceComponents{});
  out.valid.assign(n, false);
  for_index(n, exec, [&](std::size_t i) {
    if (!ghi[i]) {
      out.components[i].zenith = pos[i].zenith;
      return;
    }
    DiffuseFractionInputs in;
    in.kt = kt[i];
    in.apparent_solar_time = solar::apparent_solar_time_hours(pos[i]);
    in.elevation = std::max(pos[i].elevation, 0.0);
    const auto ds = day_sums.find(day_start(times[i]));
    in.daily_kt = (ds != day_sums.end() && ds->second.second > 0.0)
                      ? std::min(ds->second.first / ds->second.second, 1.0)
                      : 0.0;
    // Persistence: mean of the neighbouring clearness indices, one-sided at
    // the series edges.
    if (i == 0 && n == 1)
      in.persistence = kt[i];
    else if (i == 0)
      in.persistence = kt[i + 1];
    else if (i + 1 == n)
      in.persistence = kt[i - 1];
    else
      in.persistence = 0.5 * (kt[i - 1] + kt[i + 1]);
    out.components[i] = decompose(*ghi[i], pos[i], in, coeffs, solar_constant);
    out.valid[i] = true;
  });
  return out;
}

}  // namespace solarst::decomp
