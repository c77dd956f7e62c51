#ifndef SOLARST_TIMEUTIL_HPP
#define SOLARST_TIMEUTIL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace solarst {

// All timestamps are UTC seconds since the Unix epoch. Local civil time never
// appears outside the solar geometry module.
using Instant = std::int64_t;

constexpr int kMinuteS = 60;
constexpr int kTenMinS = 600;
constexpr int kHourS = 3600;
constexpr int kDayS = 86400;

struct CivilDate {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31
  friend bool operator==(const CivilDate&, const CivilDate&) = default;
};

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// algorithm) and its inverse.
std::int64_t days_from_civil(int y, int m, int d);
CivilDate civil_from_days(std::int64_t z);

Instant instant_from_civil(const CivilDate& date, int hour = 0, int minute = 0, int second = 0);
CivilDate civil_of(Instant t);
Instant day_start(Instant t);             // 00:00 UTC of the instant's day
int day_of_year(Instant t);               // 1..366
double hours_of_day(Instant t);           // fractional UTC hours in [0, 24)

// "YYYY-MM-DDTHH:MM:SS[Z]" (space separator accepted). Seconds optional.
std::optional<Instant> parse_iso8601(std::string_view s);
std::string format_iso8601(Instant t);

// "YYYY-MM-DD"
std::optional<CivilDate> parse_date(std::string_view s);
std::string format_date(const CivilDate& d);

}  // namespace solarst

#endif
