#include "solarst/timeutil.hpp"

#include <charconv>
#include <cstdio>

namespace solarst {

std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return {static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

Instant instant_from_civil(const CivilDate& date, int hour, int minute, int second) {
  return days_from_civil(date.year, date.month, date.day) * kDayS + hour * 3600 + minute * 60 +
         second;
}

CivilDate civil_of(Instant t) {
  std::int64_t days = t / kDayS;
  if (t < 0 && t % kDayS != 0) --days;
  return civil_from_days(days);
}

Instant day_start(Instant t) {
  std::int64_t days = t / kDayS;
  if (t < 0 && t % kDayS != 0) --days;
  return days * kDayS;
}

int day_of_year(Instant t) {
  const CivilDate c = civil_of(t);
  return static_cast<int>(days_from_civil(c.year, c.month, c.day) -
                          days_from_civil(c.year, 1, 1)) +
         1;
}

double hours_of_day(Instant t) { return static_cast<double>(t - day_start(t)) / 3600.0; }

namespace {

bool parse_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > s.size()) return false;
  const char* first = s.data() + pos;
  auto [ptr, ec] = std::from_chars(first, first + len, out);
  return ec == std::errc() && ptr == first + len;
}

}  // namespace

std::optional<Instant> parse_iso8601(std::string_view s) {
  // YYYY-MM-DD[T ]HH:MM[:SS][Z]
  int y, mo, d, h, mi, sec = 0;
  if (s.size() < 16) return std::nullopt;
  if (!parse_int(s, 0, 4, y) || s[4] != '-' || !parse_int(s, 5, 2, mo) || s[7] != '-' ||
      !parse_int(s, 8, 2, d))
    return std::nullopt;
  if (s[10] != 'T' && s[10] != ' ') return std::nullopt;
  if (!parse_int(s, 11, 2, h) || s[13] != ':' || !parse_int(s, 14, 2, mi)) return std::nullopt;
  std::size_t pos = 16;
  if (pos < s.size() && s[pos] == ':') {
    if (!parse_int(s, pos + 1, 2, sec)) return std::nullopt;
    pos += 3;
  }
  if (pos < s.size() && s[pos] == 'Z') ++pos;
  if (pos != s.size()) return std::nullopt;
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || sec > 60) return std::nullopt;
  return instant_from_civil({y, mo, d}, h, mi, sec);
}

std::string format_iso8601(Instant t) {
  const CivilDate c = civil_of(t);
  const std::int64_t sod = t - day_start(t);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", c.year, c.month, c.day,
                static_cast<int>(sod / 3600), static_cast<int>(sod / 60 % 60),
                static_cast<int>(sod % 60));
  return buf;
}

std::optional<CivilDate> parse_date(std::string_view s) {
  int y, m, d;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  if (!parse_int(s, 0, 4, y) || !parse_int(s, 5, 2, m) || !parse_int(s, 8, 2, d))
    return std::nullopt;
  if (m < 1 || m > 12 || d < 1 || d > 31) return std::nullopt;
  return CivilDate{y, m, d};
}

std::string format_date(const CivilDate& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

}  // namespace solarst
