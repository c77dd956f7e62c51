#ifndef SOLARST_ERRORS_HPP
#define SOLARST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace solarst {

// Error taxonomy. CLI maps ConfigError -> exit 2, input/data errors -> exit 3,
// per-day fit failures -> exit 1 (partial).

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : Error { using Error::Error; };       // malformed header / column map
struct EmptyInputError : Error { using Error::Error; };   // zero usable rows or pairs
struct ResolutionError : Error { using Error::Error; };   // bin width not a multiple, mixed resolutions
struct DomainError : Error { using Error::Error; };       // argument outside mathematical domain
struct TimeRangeError : Error { using Error::Error; };    // instant outside algorithm validity window
struct ConfigError : Error { using Error::Error; };       // bad settings / coefficient files / flags
struct MeshError : Error { using Error::Error; };         // degenerate input or refinement overflow
struct CoverageError : Error { using Error::Error; };     // target outside mesh or day grid
struct SizeError : Error { using Error::Error; };         // dimension overflow guard
struct ConditioningError : Error { using Error::Error; }; // factorization of an SPD system failed
struct InputError : Error { using Error::Error; };        // inconsistent data series
struct AlignmentError : Error { using Error::Error; };    // empty timestamp intersection

// Fit failure carries the last iterate so callers can inspect or restart.
struct FitError : Error {
  explicit FitError(const std::string& msg) : Error(msg) {}
};

}  // namespace solarst

#endif
