#include "truncvar/approx.hpp"

#include <algorithm>
#include <cmath>

namespace truncvar {

namespace detail {

Trajectories trajectories(const SampledPath& path, const OrientedRegimes& o, Level c) {
  const std::size_t n = path.size();
  const double sign = o.sign;
  const double cv = c.value();
  const double half = c.half();

  std::vector<double> lazy(n);
  std::vector<double> up(n);
  std::vector<double> down(n);

  enum class Window { Seek, Rising, Falling } window = Window::Seek;
  double up_done = 0.0;
  double down_done = 0.0;
  double running = 0.0;
  std::size_t k = 0;  // index of the current rising/falling window
  std::size_t next_rise = 0;
  std::size_t next_fall = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const double x = sign * path.value(i);
    if (next_rise < o.rise_times.size() && o.rise_times[next_rise] == i) {
      if (next_rise > 0) down_done += o.highs[next_rise - 1] - o.lows[next_rise] - cv;
      k = next_rise++;
      window = Window::Rising;
      running = x;
    } else if (next_fall < o.fall_times.size() && o.fall_times[next_fall] == i) {
      k = next_fall++;
      up_done += o.highs[k] - o.lows[k] - cv;
      window = Window::Falling;
      running = x;
    } else if (window == Window::Rising) {
      running = std::max(running, x);
    } else if (window == Window::Falling) {
      running = std::min(running, x);
    }

    double g_lazy = 0.0;
    double g_up = 0.0;
    double g_down = 0.0;
    switch (window) {
      case Window::Seek:
        g_lazy = o.lows[0] + half;
        break;
      case Window::Rising:
        g_lazy = running - half;
        g_up = up_done + (running - o.lows[k] - cv);
        g_down = down_done;
        break;
      case Window::Falling:
        g_lazy = running + half;
        g_up = up_done;
        g_down = down_done + (o.highs[k] - running - cv);
        break;
    }
    lazy[i] = sign * g_lazy;
    up[i] = sign > 0 ? g_up : g_down;
    down[i] = sign > 0 ? g_down : g_up;
  }
  return {std::move(lazy), {std::move(up), std::move(down)}};
}

}  // namespace detail

ApproximationResult lazy_approximation(const SampledPath& path, Level c) {
  auto traj = detail::trajectories(path, scan_regimes(path, c), c);
  const double tv = traj.jordan.up_component.back() + traj.jordan.down_component.back();
  SampledPath approx = with_values(path, std::move(traj.lazy));
  const double err = sup_distance(path, approx);
  return {std::move(approx), std::move(traj.jordan), tv, err};
}

JordanPair jordan_pair(const SampledPath& path, Level c) {
  return detail::trajectories(path, scan_regimes(path, c), c).jordan;
}

ApproximationResult zero_start_approximation(const SampledPath& path, Level c) {
  JordanPair jordan = jordan_pair(path, c);
  const std::size_t n = path.size();
  std::vector<double> values(n);
  std::vector<double> residual(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = jordan.up_component[i] - jordan.down_component[i];
    residual[i] = values[i] - path.value(i);
  }
  const auto [lo, hi] = std::minmax_element(residual.begin(), residual.end());
  const double increment_error = *hi - *lo;
  const double tv = jordan.up_component.back() + jordan.down_component.back();
  return {with_values(path, std::move(values)), std::move(jordan), tv, increment_error};
}

SampledPath step_skeleton(const SampledPath& path, Level c) {
  const double half = c.half();
  std::vector<double> times{path.time(0)};
  std::vector<double> values{path.value(0)};
  double held = path.value(0);
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (std::abs(path.value(i) - held) > half) {
      held = path.value(i);
      times.push_back(path.time(i));
      values.push_back(held);
    }
  }
  if (times.back() != path.domain_end()) {
    times.push_back(path.domain_end());
    values.push_back(held);
  }
  return make_path(std::move(times), std::move(values));
}

}  // namespace truncvar
