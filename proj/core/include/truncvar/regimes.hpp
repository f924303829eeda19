#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "truncvar/path.hpp"

namespace truncvar {

enum class Direction { UpFirst, DownFirst, None };

/// The alternating stopping times and extremes of a path at one level.
///
/// Indices are sample indices of the source path. In the up-first
/// orientation up_times[0] < down_times[0] < up_times[1] < ...; in the
/// down-first orientation the roles swap. lows[k] is the minimum over the
/// half-open window that ends just before the k-th upward trigger, highs[k]
/// the maximum over the window that ends just before the k-th downward
/// trigger. The trailing window reports its running extreme up to the last
/// sample. With Direction::None both index lists are empty and lows holds
/// the global minimum.
struct RegimeDecomposition {
  Direction first_direction = Direction::None;
  std::vector<std::size_t> up_times;
  std::vector<std::size_t> down_times;
  std::vector<double> lows;
  std::vector<double> highs;
  std::size_t length = 0;  // sample count of the source path
  double level = 0.0;

  friend bool operator==(const RegimeDecomposition&, const RegimeDecomposition&) = default;
};

/// Up-first view of a decomposition, taken on g = sign * f.
///
/// rise_times[k] is the k-th upward trigger of g and fall_times[k] the k-th
/// downward trigger; rise_times[0] < fall_times[0] < rise_times[1] < ...
/// lows.size() == rise_times.size() + 1 when the path ends in a falling (or
/// seeking) window, otherwise lows.size() == rise_times.size() and
/// highs.size() == rise_times.size().
struct OrientedRegimes {
  double sign = 1.0;
  std::vector<std::size_t> rise_times;
  std::vector<std::size_t> fall_times;
  std::vector<double> lows;
  std::vector<double> highs;

  /// True when the last sample sits inside a rising window.
  bool ends_rising() const noexcept { return highs.size() == lows.size(); }
};

/// First index j with values[j] - min(values[0..j]) >= c.
std::optional<std::size_t> first_up_time(const SampledPath& path, Level c);

/// First index j with max(values[0..j]) - values[j] >= c.
std::optional<std::size_t> first_down_time(const SampledPath& path, Level c);

/// One pass over the samples. Orientation is decided by whichever first
/// trigger fires earlier; with no trigger at all the up-first convention
/// applies.
OrientedRegimes scan_regimes(const SampledPath& path, Level c);

RegimeDecomposition detect_regimes(const SampledPath& path, Level c);

/// Converts between the public decomposition and its up-first view. An
/// oriented view without any rise maps to Direction::None.
RegimeDecomposition to_decomposition(const OrientedRegimes& oriented, std::size_t length,
                                     Level c);
OrientedRegimes orient(const RegimeDecomposition& decomposition);

enum class RegimeKind { Seek, Up, Down };

struct RunningExtreme {
  RegimeKind kind;
  double extreme;

  friend bool operator==(const RunningExtreme&, const RunningExtreme&) = default;
};

/// Running minimum (seeking or down windows) or running maximum (up
/// windows) of the source path at every sample, in the source's own
/// orientation. For a down-first path the seeking window tracks the
/// running maximum. Throws StaleDecomposition if the decomposition was
/// built for a path of a different length.
std::vector<RunningExtreme> running_extremes(const SampledPath& path,
                                             const RegimeDecomposition& decomposition);

}  // namespace truncvar
