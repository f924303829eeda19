#pragma once

#include <vector>

#include "truncvar/path.hpp"
#include "truncvar/regimes.hpp"

namespace truncvar {

/// Minimal decomposition f^c = f^c(a) + up - down, sampled on the source grid.
/// Both components start at 0 and are nondecreasing; at no step do both
/// increase.
struct JordanPair {
  std::vector<double> up_component;
  std::vector<double> down_component;
};

struct ApproximationResult {
  SampledPath approximation;
  JordanPair jordan;
  double achieved_tv = 0.0;
  /// For the lazy approximation: sup |f - f^c| (at most c/2).
  /// For the zero-start approximation: osc_norm(f^{0,c} - f) (at most c),
  /// the uniform error on increments.
  double sup_error = 0.0;
};

/// The minimal-total-variation member of the sup-ball of radius c/2 around f.
///
/// Flat at m_0 + c/2 until the first upward trigger, then tracks the running
/// maximum minus c/2 on rising windows and the running minimum plus c/2 on
/// falling windows. Down-first paths are handled through -(-f)^c. When
/// c >= osc_norm(f) the result is the constant min(f) + c/2 (up-first
/// convention); other ball members exist in that case.
ApproximationResult lazy_approximation(const SampledPath& path, Level c);

JordanPair jordan_pair(const SampledPath& path, Level c);

/// f^{0,c} = up - down, starting at 0. Its total variation equals that of
/// the lazy approximation.
ApproximationResult zero_start_approximation(const SampledPath& path, Level c);

/// Greedy step function within c/2 of f: a new breakpoint opens at the first
/// sample with |f(t) - held| > c/2. The last sample is always present so the
/// domain is preserved; it repeats the held value when it is not a breakpoint.
SampledPath step_skeleton(const SampledPath& path, Level c);

namespace detail {

struct Trajectories {
  std::vector<double> lazy;
  JordanPair jordan;
};

/// Per-sample f^c, f_U^c and f_D^c in the source orientation.
Trajectories trajectories(const SampledPath& path, const OrientedRegimes& regimes, Level c);

}  // namespace detail

}  // namespace truncvar
