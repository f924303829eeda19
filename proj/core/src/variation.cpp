#include "truncvar/variation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <utility>

#include "truncvar/approx.hpp"

namespace truncvar {

TruncatedVariations truncated_variation(const OrientedRegimes& o, Level c) {
  const double cv = c.value();
  // Left-to-right over regimes, matching the running sums of the Jordan pair.
  double rise = 0.0;
  for (std::size_t k = 0; k < o.rise_times.size(); ++k) rise += o.highs[k] - o.lows[k] - cv;
  double fall = 0.0;
  for (std::size_t k = 0; k < o.highs.size() && k + 1 < o.lows.size(); ++k) {
    fall += o.highs[k] - o.lows[k + 1] - cv;
  }
  TruncatedVariations out;
  out.utv = o.sign > 0 ? rise : fall;
  out.dtv = o.sign > 0 ? fall : rise;
  out.tv = out.utv + out.dtv;
  return out;
}

namespace {

// Same recurrence as scan_regimes, but each regime term is folded into the
// running sums as soon as its extremes are final, so nothing is stored. The
// terms are added in the same order as the OrientedRegimes overload, which
// keeps the two bit-identical.
template <bool Negate>
std::pair<double, double> stream_from_first_rise(std::span<const double> v, std::size_t first,
                                                 double first_low, double c) {
  const auto g = [&](std::size_t i) { return Negate ? -v[i] : v[i]; };
  double rise = 0.0;
  double fall = 0.0;
  double low = first_low;
  double hi = g(first);
  double lo = hi;
  bool rising = true;
  for (std::size_t i = first + 1; i < v.size(); ++i) {
    const double x = g(i);
    if (rising) {
      if (hi - x >= c) {
        rise += hi - low - c;
        lo = x;
        rising = false;
      } else if (x > hi) {
        hi = x;
      }
    } else {
      if (x - lo >= c) {
        fall += hi - lo - c;
        low = lo;
        hi = x;
        rising = true;
      } else if (x < lo) {
        lo = x;
      }
    }
  }
  if (rising) {
    rise += hi - low - c;
  } else {
    fall += hi - lo - c;
  }
  return {rise, fall};
}

}  // namespace

TruncatedVariations truncated_variation(const SampledPath& path, Level c) {
  const auto v = path.values();
  const double cv = c.value();
  double lo = v[0];
  double hi = v[0];
  for (std::size_t j = 1; j < v.size(); ++j) {
    const double x = v[j];
    if (x - lo >= cv) {
      const auto [rise, fall] = stream_from_first_rise<false>(v, j, lo, cv);
      return {rise, fall, rise + fall};
    }
    if (hi - x >= cv) {
      const auto [rise, fall] = stream_from_first_rise<true>(v, j, -hi, cv);
      return {fall, rise, fall + rise};
    }
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return {};
}

TruncatedVariations oracle_truncated_variation(const SampledPath& path, Level c) {
  const auto x = path.values();
  const std::size_t n = x.size();
  const double cv = c.value();
  std::vector<double> best_tv(n, 0.0);
  std::vector<double> best_up(n, 0.0);
  std::vector<double> best_down(n, 0.0);
  TruncatedVariations out;
  for (std::size_t j = 1; j < n; ++j) {
    double tv = 0.0;
    double up = 0.0;
    double down = 0.0;
    for (std::size_t i = 0; i < j; ++i) {
      const double d = x[j] - x[i];
      tv = std::max(tv, best_tv[i] + std::max(std::abs(d) - cv, 0.0));
      up = std::max(up, best_up[i] + std::max(d - cv, 0.0));
      down = std::max(down, best_down[i] + std::max(-d - cv, 0.0));
    }
    best_tv[j] = tv;
    best_up[j] = up;
    best_down[j] = down;
    out.tv = std::max(out.tv, tv);
    out.utv = std::max(out.utv, up);
    out.dtv = std::max(out.dtv, down);
  }
  return out;
}

PrefixCurves prefix_curves(const SampledPath& path, Level c) {
  JordanPair jp = jordan_pair(path, c);
  PrefixCurves out;
  out.tv.resize(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    out.tv[i] = jp.up_component[i] + jp.down_component[i];
  }
  out.utv = std::move(jp.up_component);
  out.dtv = std::move(jp.down_component);
  return out;
}

namespace {

void validate_levels(std::span<const double> levels) {
  if (levels.empty()) throw Error(ErrorCode::InvalidGrid, "level grid is empty");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!std::isfinite(levels[i]) || !(levels[i] > 0.0)) {
      throw Error(ErrorCode::InvalidGrid, "levels must be finite and positive");
    }
    if (i > 0 && !(levels[i - 1] < levels[i])) {
      throw Error(ErrorCode::InvalidGrid, "levels must be strictly increasing");
    }
  }
}

}  // namespace

SweepCurve sweep(const SampledPath& path, std::span<const double> levels, unsigned threads) {
  validate_levels(levels);
  SweepCurve out;
  out.levels.assign(levels.begin(), levels.end());
  out.tv_values.assign(levels.size(), 0.0);

  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < levels.size(); i += stride) {
      out.tv_values[i] = truncated_variation(path, Level(levels[i])).tv;
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, levels.size());
  if (workers == 1) {
    work(0, 1);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  return out;
}

std::vector<double> level_grid(double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step) || !(lo > 0.0) ||
      !(step > 0.0) || hi < lo) {
    throw Error(ErrorCode::InvalidGrid, "level grid needs 0 < lo <= hi and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = lo + static_cast<double>(k) * step;
  return out;
}

namespace {

class SplitObjective {
public:
  SplitObjective(std::span<const SampledPath> components, double c)
      : components_(components), floors_(components.size()) {
    for (std::size_t i = 0; i < components.size(); ++i) {
      floors_[i] = 1e-12 * std::max(osc_norm(components[i]), c);
    }
  }

  double floor(std::size_t i) const { return floors_[i]; }

  double term(std::size_t i, double level) const {
    return truncated_variation(components_[i], Level(std::max(level, floors_[i]))).tv;
  }

private:
  std::span<const SampledPath> components_;
  std::vector<double> floors_;
};

double total(const std::vector<double>& terms) {
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

}  // namespace

L1Bound l1_upper_bound(std::span<const SampledPath> components, Level c,
                       const L1BoundOptions& options) {
  if (components.empty()) throw Error(ErrorCode::EmptyInput, "need at least one component");
  for (const auto& comp : components) {
    if (!std::ranges::equal(comp.times(), components.front().times())) {
      throw Error(ErrorCode::DomainError, "components must share one time grid");
    }
  }
  if (options.grid_points < 2) {
    throw Error(ErrorCode::InvalidGrid, "l1_upper_bound needs at least 2 grid points");
  }
  const std::size_t n = components.size();
  const double cv = c.value();
  if (n == 1) return {truncated_variation(components.front(), c).tv, {cv}};

  const SplitObjective objective(components, cv);

  // Round 0: marginal allocation of equal units.
  const double unit = cv / static_cast<double>(options.grid_points);
  std::vector<std::size_t> units(n, 0);
  std::vector<double> current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = objective.term(i, 0.0);
  for (std::size_t u = 0; u < options.grid_points; ++u) {
    std::size_t pick = 0;
    double best_gain = -std::numeric_limits<double>::infinity();
    double best_value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double next = objective.term(i, static_cast<double>(units[i] + 1) * unit);
      const double gain = current[i] - next;
      if (gain > best_gain) {
        best_gain = gain;
        pick = i;
        best_value = next;
      }
    }
    ++units[pick];
    current[pick] = best_value;
  }

  // Zero-unit components sit at their floor; the largest share pays for it.
  std::vector<double> split(n);
  double floor_total = 0.0;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    split[i] = static_cast<double>(units[i]) * unit;
    if (units[i] == 0) {
      split[i] = objective.floor(i);
      floor_total += split[i];
    }
    if (units[i] > units[largest]) largest = i;
  }
  split[largest] -= floor_total;
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) terms[i] = objective.term(i, split[i]);

  // Refinement: pairwise transfers on successively finer grids.
  double step = unit;
  const std::size_t half_points = options.grid_points / 2;
  for (std::size_t round = 0; round < options.refinement_rounds; ++round) {
    step = step * 2.0 / static_cast<double>(options.grid_points);
    for (std::size_t pass = 0; pass < 64; ++pass) {
      bool improved = false;
      for (std::size_t to = 0; to < n; ++to) {
        for (std::size_t from = 0; from < n; ++from) {
          if (to == from) continue;
          double best_delta = 0.0;
          double best_to = 0.0;
          double best_from = 0.0;
          double best_shift = 0.0;
          for (std::size_t q = 1; q <= half_points; ++q) {
            const double shift = static_cast<double>(q) * step;
            if (split[from] - shift < objective.floor(from)) break;
            const double t_to = objective.term(to, split[to] + shift);
            const double t_from = objective.term(from, split[from] - shift);
            const double delta = (t_to + t_from) - (terms[to] + terms[from]);
            if (delta < best_delta) {
              best_delta = delta;
              best_to = t_to;
              best_from = t_from;
              best_shift = shift;
            }
          }
          if (best_shift > 0.0) {
            split[to] += best_shift;
            split[from] -= best_shift;
            terms[to] = best_to;
            terms[from] = best_from;
            improved = true;
          }
        }
      }
      if (!improved) break;
    }
  }
  return {total(terms), std::move(split)};
}

}  // namespace truncvar
