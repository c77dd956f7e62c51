#ifndef SOLARST_CSV_HPP
#define SOLARST_CSV_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace solarst::csv {

// The project CSV dialect: comma-delimited, header row, UTF-8, no quoting,
// ISO-8601 UTC timestamps, "NA" for missing.

std::vector<std::string> split(std::string_view line);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // -1 when the column is absent.
  int column(std::string_view name) const;
};

Table read_file(const std::string& path);  // throws InputError if unreadable

// Shortest representation that round-trips the double exactly (via
// std::to_chars); "NA" for missing.
std::string fmt(double v);
std::string fmt(std::optional<double> v);

std::optional<double> parse_double(std::string_view s);  // nullopt for "NA"/junk

}  // namespace solarst::csv

#endif
