#ifndef SOLARST_INGEST_HPP
#define SOLARST_INGEST_HPP

#include <optional>
#include <string>
#include <vector>

#include "solarst/timeutil.hpp"

namespace solarst::ingest {

struct StationMeta {
  std::string station_id;
  std::string name;
  double latitude = 0.0;   // degrees, [-90, 90]
  double longitude = 0.0;  // degrees, [-180, 180]
};

struct Sample {
  Instant timestamp = 0;             // bin start, UTC
  std::optional<double> ghi;         // W/m^2, >= 0; nullopt = missing
};

// Timestamps strictly increasing and aligned to the resolution grid; zero is a
// valid (night-time) value, missing is always the explicit marker.
struct IrradianceSeries {
  StationMeta station;
  int resolution_s = kMinuteS;
  std::vector<Sample> samples;
};

// Same shape on the log scale: value = log(ghi + 1).
struct TransformedSeries {
  StationMeta station;
  int resolution_s = kMinuteS;
  std::vector<Sample> samples;  // Sample::ghi holds the log-scale value here
};

struct CsvSchema {
  std::string timestamp_col = "timestamp";
  std::string ghi_col = "ghi_wm2";
  // Either embedded metadata columns ...
  std::string station_id_col = "station_id";
  std::string lat_col = "lat";
  std::string lon_col = "lon";
  // ... or metadata supplied up front.
  std::optional<StationMeta> station;
  std::optional<int> resolution_s;  // inferred from timestamps when unset
};

struct ParseDiagnostics {
  int unparseable_rows = 0;   // bad timestamp or bad ghi cell
  int negative_clamped = 0;   // sensor negatives clamped to 0
};

IrradianceSeries parse_station_csv(const std::string& path, const CsvSchema& schema,
                                   ParseDiagnostics* diag = nullptr);

std::vector<StationMeta> parse_stations_file(const std::string& path);

// Mean of present samples per [bin, bin+target) window; bins with present
// fraction below min_fraction come out missing. Bin timestamp = bin start.
IrradianceSeries aggregate(const IrradianceSeries& series, int target_s, double min_fraction);

TransformedSeries to_log_scale(const IrradianceSeries& series);
IrradianceSeries from_log_scale(const TransformedSeries& series);

void write_series_csv(const std::string& path, const IrradianceSeries& series,
                      bool station_columns = true);

}  // namespace solarst::ingest

#endif
