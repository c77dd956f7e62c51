#include "solarst/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "solarst/csv.hpp"
#include "solarst/errors.hpp"

namespace solarst::ingest {

namespace {

Instant floor_to(Instant t, int step) {
  Instant q = t / step;
  if (t < 0 && t % step != 0) --q;
  return q * step;
}

int infer_resolution(const std::vector<Sample>& samples) {
  // Smallest gap that divides every gap; restricted to the supported grid.
  std::int64_t g = 0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    g = std::gcd(g, samples[i].timestamp - samples[i - 1].timestamp);
  for (int r : {kMinuteS, kTenMinS, kHourS})
    if (g != 0 && g % r == 0) return r;
  if (g == 0) return kMinuteS;  // single sample
  return static_cast<int>(g);
}

}  // namespace

IrradianceSeries parse_station_csv(const std::string& path, const CsvSchema& schema,
                                   ParseDiagnostics* diag) {
  const csv::Table table = csv::read_file(path);
  const int ts_col = table.column(schema.timestamp_col);
  const int ghi_col = table.column(schema.ghi_col);
  if (ts_col < 0 || ghi_col < 0)
    throw SchemaError("missing column '" + (ts_col < 0 ? schema.timestamp_col : schema.ghi_col) +
                      "' in " + path);

  IrradianceSeries out;
  const int id_col = table.column(schema.station_id_col);
  const int lat_col = table.column(schema.lat_col);
  const int lon_col = table.column(schema.lon_col);
  if (schema.station) {
    out.station = *schema.station;
  } else if (id_col < 0 || lat_col < 0 || lon_col < 0) {
    throw SchemaError("no station metadata: supply schema.station or station columns in " + path);
  }

  ParseDiagnostics local;
  for (const auto& row : table.rows) {
    if (static_cast<int>(row.size()) <= std::max(ts_col, ghi_col)) {
      ++local.unparseable_rows;
      continue;
    }
    const auto ts = parse_iso8601(row[ts_col]);
    if (!ts) {
      ++local.unparseable_rows;
      continue;
    }
    Sample s;
    s.timestamp = *ts;
    auto v = csv::parse_double(row[ghi_col]);
    if (!v && row[ghi_col] != "NA") ++local.unparseable_rows;
    if (v && !std::isfinite(*v)) {
      v.reset();
      ++local.unparseable_rows;
    }
    if (v && *v < 0.0) {
      v = 0.0;  // night-time sensor noise
      ++local.negative_clamped;
    }
    s.ghi = v;
    if (out.station.station_id.empty() && id_col >= 0) {
      const auto lat = csv::parse_double(row[lat_col]);
      const auto lon = csv::parse_double(row[lon_col]);
      if (!lat || !lon) throw SchemaError("unparseable station coordinates in " + path);
      out.station.station_id = row[id_col];
      out.station.name = row[id_col];
      out.station.latitude = *lat;
      out.station.longitude = *lon;
    }
    out.samples.push_back(s);
  }
  if (out.samples.empty()) throw EmptyInputError("no parseable rows in " + path);
  if (!std::isfinite(out.station.latitude) || !std::isfinite(out.station.longitude) ||
      std::abs(out.station.latitude) > 90.0 || std::abs(out.station.longitude) > 180.0)
    throw SchemaError("invalid station coordinates in " + path);

  std::stable_sort(out.samples.begin(), out.samples.end(),
                   [](const Sample& a, const Sample& b) { return a.timestamp < b.timestamp; });
  for (std::size_t i = 1; i < out.samples.size(); ++i)
    if (out.samples[i].timestamp == out.samples[i - 1].timestamp)
      throw InputError("duplicate timestamp " + format_iso8601(out.samples[i].timestamp) + " in " +
                       path);

  out.resolution_s = schema.resolution_s ? *schema.resolution_s : infer_resolution(out.samples);
  for (const Sample& s : out.samples)
    if (s.timestamp % out.resolution_s != 0)
      throw InputError("timestamp " + format_iso8601(s.timestamp) + " not aligned to " +
                       std::to_string(out.resolution_s) + "s grid in " + path);
  if (diag) *diag = local;
  return out;
}

std::vector<StationMeta> parse_stations_file(const std::string& path) {
  const csv::Table table = csv::read_file(path);
  const int id = table.column("station_id");
  const int name = table.column("name");
  const int lat = table.column("lat");
  const int lon = table.column("lon");
  if (id < 0 || lat < 0 || lon < 0)
    throw SchemaError("stations file needs station_id, lat, lon columns: " + path);
  std::vector<StationMeta> out;
  for (const auto& row : table.rows) {
    StationMeta m;
    m.station_id = row[id];
    m.name = name >= 0 ? row[name] : row[id];
    const auto la = csv::parse_double(row[lat]);
    const auto lo = csv::parse_double(row[lon]);
    if (!la || !lo || std::abs(*la) > 90.0 || std::abs(*lo) > 180.0)
      throw SchemaError("bad coordinates for station " + m.station_id + " in " + path);
    m.latitude = *la;
    m.longitude = *lo;
    for (const auto& prev : out)
      if (prev.station_id == m.station_id)
        throw SchemaError("duplicate station_id " + m.station_id + " in " + path);
    out.push_back(std::move(m));
  }
  if (out.empty()) throw EmptyInputError("no stations in " + path);
  return out;
}

IrradianceSeries aggregate(const IrradianceSeries& series, int target_s, double min_fraction) {
  if (target_s <= 0 || target_s % series.resolution_s != 0)
    throw ResolutionError("target " + std::to_string(target_s) + "s is not a multiple of input " +
                          std::to_string(series.resolution_s) + "s");
  if (!(min_fraction > 0.0 && min_fraction <= 1.0))
    throw ConfigError("min_fraction must be in (0, 1]");

  IrradianceSeries out;
  out.station = series.station;
  out.resolution_s = target_s;
  if (series.samples.empty()) return out;

  const int slots = target_s / series.resolution_s;
  Instant bin = floor_to(series.samples.front().timestamp, target_s);
  double sum = 0.0;
  int present = 0;

  auto flush = [&](Instant b) {
    Sample s;
    s.timestamp = b;
    if (static_cast<double>(present) / slots >= min_fraction) s.ghi = sum / present;
    out.samples.push_back(s);
    sum = 0.0;
    present = 0;
  };

  for (const Sample& s : series.samples) {
    const Instant b = floor_to(s.timestamp, target_s);
    while (bin < b) {
      flush(bin);
      bin += target_s;
    }
    if (s.ghi) {
      sum += *s.ghi;
      ++present;
    }
  }
  flush(bin);
  return out;
}

TransformedSeries to_log_scale(const IrradianceSeries& series) {
  TransformedSeries out;
  out.station = series.station;
  out.resolution_s = series.resolution_s;
  out.samples.reserve(series.samples.size());
  for (const Sample& s : series.samples) {
    Sample t = s;
    if (t.ghi) {
      if (*t.ghi < 0.0) throw DomainError("negative ghi at " + format_iso8601(t.timestamp));
      t.ghi = std::log1p(*t.ghi);
    }
    out.samples.push_back(t);
  }
  return out;
}

IrradianceSeries from_log_scale(const TransformedSeries& series) {
  IrradianceSeries out;
  out.station = series.station;
  out.resolution_s = series.resolution_s;
  out.samples.reserve(series.samples.size());
  for (const Sample& s : series.samples) {
    Sample t = s;
    if (t.ghi) t.ghi = std::expm1(*t.ghi);
    out.samples.push_back(t);
  }
  return out;
}

void write_series_csv(const std::string& path, const IrradianceSeries& series,
                      bool station_columns) {
  std::ofstream outf(path);
  if (!outf) throw InputError("cannot write " + path);
  outf << "timestamp,ghi_wm2";
  if (station_columns) outf << ",station_id,lat,lon";
  outf << "\n";
  for (const Sample& s : series.samples) {
    outf << format_iso8601(s.timestamp) << ',' << csv::fmt(s.ghi);
    if (station_columns)
      outf << ',' << series.station.station_id << ',' << csv::fmt(series.station.latitude) << ','
           << csv::fmt(series.station.longitude);
    outf << "\n";
  }
}

}  // namespace solarst::ingest
