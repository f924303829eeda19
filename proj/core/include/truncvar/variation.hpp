#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "truncvar/path.hpp"
#include "truncvar/regimes.hpp"

namespace truncvar {

/// Upward, downward and total truncated variation at one level.
/// tv == utv + dtv always holds bit-for-bit.
struct TruncatedVariations {
  double utv = 0.0;
  double dtv = 0.0;
  double tv = 0.0;

  friend bool operator==(const TruncatedVariations&, const TruncatedVariations&) = default;
};

/// O(n) evaluation through the regime scan: utv and dtv are the endpoint
/// values of the minimal Jordan pair, summed left to right over regimes.
TruncatedVariations truncated_variation(const SampledPath& path, Level c);

/// Same quantities from an existing up-first view; no rescan.
TruncatedVariations truncated_variation(const OrientedRegimes& regimes, Level c);

/// O(n^2) dynamic program straight from the sup-over-partitions definition.
/// best[j] = max(0, max_{i<j} best[i] + (delta(i, j) - c)_+). Used as an
/// independent oracle; every partition of a step function can be taken on
/// sample indices.
TruncatedVariations oracle_truncated_variation(const SampledPath& path, Level c);

struct PrefixCurves {
  std::vector<double> utv;
  std::vector<double> dtv;
  std::vector<double> tv;
};

/// utv/dtv/tv of every prefix [a; t_s]; each curve is nondecreasing and the
/// last entry equals truncated_variation().
PrefixCurves prefix_curves(const SampledPath& path, Level c);

struct SweepCurve {
  std::vector<double> levels;
  std::vector<double> tv_values;
};

/// TV^c on a strictly increasing grid of positive levels. Evaluations are
/// independent; `threads` > 1 spreads them over worker threads with results
/// identical to the sequential run.
SweepCurve sweep(const SampledPath& path, std::span<const double> levels,
                 unsigned threads = 1);

/// Inclusive grid lo, lo + step, ... up to hi (hi kept when it lies within
/// 1e-9 * step of a grid point).
std::vector<double> level_grid(double lo, double hi, double step);

struct L1Bound {
  double bound = 0.0;
  std::vector<double> split;  // positive, sums to c
};

struct L1BoundOptions {
  std::size_t grid_points = 64;
  std::size_t refinement_rounds = 3;
};

/// Upper bound for the truncated variation of an R^N-valued path under the
/// L1 norm: the infimum over c_1 + ... + c_N = c of sum_i TV^{c_i}(f_i).
///
/// Each TV^{c_i} is convex and nonincreasing in c_i, so the first round
/// hands out c in grid_points equal units by largest marginal decrease
/// (exact for separable convex objectives on that grid). Each refinement
/// round then runs pairwise coordinate descent on a grid 2/grid_points as
/// wide as the previous step. Levels are floored at 1e-12 * max(osc_i, c).
L1Bound l1_upper_bound(std::span<const SampledPath> components, Level c,
                       const L1BoundOptions& options = {});

}  // namespace truncvar
