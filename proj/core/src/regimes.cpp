#include "truncvar/regimes.hpp"

#include <algorithm>

namespace truncvar {

std::optional<std::size_t> first_up_time(const SampledPath& path, Level c) {
  const auto v = path.values();
  double lo = v[0];
  for (std::size_t j = 1; j < v.size(); ++j) {
    if (v[j] - lo >= c.value()) return j;
    lo = std::min(lo, v[j]);
  }
  return std::nullopt;
}

std::optional<std::size_t> first_down_time(const SampledPath& path, Level c) {
  const auto v = path.values();
  double hi = v[0];
  for (std::size_t j = 1; j < v.size(); ++j) {
    if (hi - v[j] >= c.value()) return j;
    hi = std::max(hi, v[j]);
  }
  return std::nullopt;
}

namespace {

// Continues the scan of g = (Negate ? -f : f) from its first upward trigger.
template <bool Negate>
void scan_from_first_rise(std::span<const double> v, std::size_t first, double c,
                          OrientedRegimes& out) {
  const auto g = [&](std::size_t i) { return Negate ? -v[i] : v[i]; };
  out.rise_times.push_back(first);
  bool rising = true;
  double hi = g(first);
  double lo = hi;
  for (std::size_t i = first + 1; i < v.size(); ++i) {
    const double x = g(i);
    if (rising) {
      if (hi - x >= c) {
        out.fall_times.push_back(i);
        out.highs.push_back(hi);
        lo = x;
        rising = false;
      } else if (x > hi) {
        hi = x;
      }
    } else {
      if (x - lo >= c) {
        out.rise_times.push_back(i);
        out.lows.push_back(lo);
        hi = x;
        rising = true;
      } else if (x < lo) {
        lo = x;
      }
    }
  }
  if (rising) {
    out.highs.push_back(hi);
  } else {
    out.lows.push_back(lo);
  }
}

std::vector<double> negated(const std::vector<double>& xs) {
  std::vector<double> out(xs.size());
  std::transform(xs.begin(), xs.end(), out.begin(), [](double x) { return -x; });
  return out;
}

}  // namespace

OrientedRegimes scan_regimes(const SampledPath& path, Level c) {
  const auto v = path.values();
  const double cv = c.value();
  OrientedRegimes out;
  double lo = v[0];
  double hi = v[0];
  for (std::size_t j = 1; j < v.size(); ++j) {
    const double x = v[j];
    // An upward trigger wins a (theoretically impossible) tie.
    if (x - lo >= cv) {
      out.sign = 1.0;
      out.lows.push_back(lo);
      scan_from_first_rise<false>(v, j, cv, out);
      return out;
    }
    if (hi - x >= cv) {
      out.sign = -1.0;
      out.lows.push_back(-hi);
      scan_from_first_rise<true>(v, j, cv, out);
      return out;
    }
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  out.sign = 1.0;
  out.lows.push_back(lo);
  return out;
}

RegimeDecomposition to_decomposition(const OrientedRegimes& oriented, std::size_t length,
                                     Level c) {
  RegimeDecomposition d;
  d.length = length;
  d.level = c.value();
  if (oriented.rise_times.empty()) {
    d.first_direction = Direction::None;
    d.lows = oriented.sign > 0 ? oriented.lows : negated(oriented.highs);
    if (oriented.sign < 0) d.highs = negated(oriented.lows);
    return d;
  }
  if (oriented.sign > 0) {
    d.first_direction = Direction::UpFirst;
    d.up_times = oriented.rise_times;
    d.down_times = oriented.fall_times;
    d.lows = oriented.lows;
    d.highs = oriented.highs;
  } else {
    d.first_direction = Direction::DownFirst;
    d.up_times = oriented.fall_times;
    d.down_times = oriented.rise_times;
    d.lows = negated(oriented.highs);
    d.highs = negated(oriented.lows);
  }
  return d;
}

OrientedRegimes orient(const RegimeDecomposition& d) {
  OrientedRegimes o;
  if (d.first_direction == Direction::DownFirst) {
    o.sign = -1.0;
    o.rise_times = d.down_times;
    o.fall_times = d.up_times;
    o.lows = negated(d.highs);
    o.highs = negated(d.lows);
  } else {
    o.sign = 1.0;
    o.rise_times = d.up_times;
    o.fall_times = d.down_times;
    o.lows = d.lows;
    o.highs = d.highs;
  }
  return o;
}

RegimeDecomposition detect_regimes(const SampledPath& path, Level c) {
  return to_decomposition(scan_regimes(path, c), path.size(), c);
}

std::vector<RunningExtreme> running_extremes(const SampledPath& path,
                                             const RegimeDecomposition& decomposition) {
  if (decomposition.length != path.size()) {
    throw Error(ErrorCode::StaleDecomposition,
                "decomposition was built for a path of " +
                    std::to_string(decomposition.length) + " samples, got " +
                    std::to_string(path.size()));
  }
  const OrientedRegimes o = orient(decomposition);
  const double sign = o.sign;
  const RegimeKind rising_kind = sign > 0 ? RegimeKind::Up : RegimeKind::Down;
  const RegimeKind falling_kind = sign > 0 ? RegimeKind::Down : RegimeKind::Up;

  std::vector<RunningExtreme> out;
  out.reserve(path.size());
  RegimeKind kind = RegimeKind::Seek;
  double extreme = sign * path.value(0);
  std::size_t next_rise = 0;
  std::size_t next_fall = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const double x = sign * path.value(i);
    if (next_rise < o.rise_times.size() && o.rise_times[next_rise] == i) {
      kind = rising_kind;
      extreme = x;
      ++next_rise;
    } else if (next_fall < o.fall_times.size() && o.fall_times[next_fall] == i) {
      kind = falling_kind;
      extreme = x;
      ++next_fall;
    } else if (kind == rising_kind) {
      extreme = std::max(extreme, x);
    } else {
      extreme = std::min(extreme, x);
    }
    out.push_back({kind, sign * extreme});
  }
  return out;
}

}  // namespace truncvar
