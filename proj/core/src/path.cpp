#include "truncvar/path.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace truncvar {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "empty-input";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::NonMonotoneTimes: return "non-monotone-times";
    case ErrorCode::NonFiniteValue: return "non-finite-value";
    case ErrorCode::InvalidLevel: return "invalid-level";
    case ErrorCode::DomainError: return "domain-error";
    case ErrorCode::StaleDecomposition: return "stale-decomposition";
    case ErrorCode::InvalidGrid: return "invalid-grid";
    case ErrorCode::InvalidSpec: return "invalid-spec";
    case ErrorCode::UnknownKind: return "unknown-kind";
  }
  return "unknown";
}

Level::Level(double c) : c_(c) {
  if (!std::isfinite(c) || !(c > 0.0)) {
    throw Error(ErrorCode::InvalidLevel,
                "level must be finite and strictly positive, got " + std::to_string(c));
  }
}

SampledPath SampledPath::make(std::vector<double> times, std::vector<double> values) {
  if (times.empty() || values.empty()) {
    throw Error(ErrorCode::EmptyInput, "path needs at least one sample");
  }
  if (times.size() != values.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "times has " + std::to_string(times.size()) + " entries, values has " +
                    std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || !std::isfinite(values[i])) {
      throw Error(ErrorCode::NonFiniteValue,
                  "non-finite entry at sample " + std::to_string(i));
    }
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i - 1] < times[i])) {
      throw Error(ErrorCode::NonMonotoneTimes,
                  "times must be strictly increasing (sample " + std::to_string(i) + ")");
    }
  }
  return SampledPath(std::move(times), std::move(values));
}

SampledPath make_path(std::vector<double> times, std::vector<double> values) {
  return SampledPath::make(std::move(times), std::move(values));
}

SampledPath with_values(const SampledPath& grid, std::vector<double> values) {
  return SampledPath::make(std::vector<double>(grid.times().begin(), grid.times().end()),
                           std::move(values));
}

double evaluate(const SampledPath& path, double t) {
  if (!(t >= path.domain_start() && t <= path.domain_end())) {
    throw Error(ErrorCode::DomainError, "evaluation point outside the path domain");
  }
  const auto times = path.times();
  // last breakpoint <= t
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  return path.value(static_cast<std::size_t>(it - times.begin()) - 1);
}

double total_variation(const SampledPath& path) {
  const auto v = path.values();
  double sum = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) sum += std::abs(v[i] - v[i - 1]);
  return sum;
}

double osc_norm(const SampledPath& path) {
  const auto [lo, hi] = std::minmax_element(path.values().begin(), path.values().end());
  return *hi - *lo;
}

namespace {

void require_same_domain(const SampledPath& f, const SampledPath& g) {
  if (f.domain_start() != g.domain_start() || f.domain_end() != g.domain_end()) {
    throw Error(ErrorCode::DomainError, "paths are defined on different domains");
  }
}

// Walks the union of both breakpoint sets, calling visit(t, f(t), g(t)).
// Both paths start at the same time, so the first visit sees both samples.
template <typename Visit>
void merge_walk(const SampledPath& f, const SampledPath& g, Visit&& visit) {
  const std::size_t n = f.size();
  const std::size_t m = g.size();
  std::size_t i = 0;
  std::size_t j = 0;
  double vf = f.value(0);
  double vg = g.value(0);
  while (i < n || j < m) {
    const double t = (i < n && (j >= m || f.time(i) <= g.time(j))) ? f.time(i) : g.time(j);
    if (i < n && f.time(i) == t) vf = f.value(i++);
    if (j < m && g.time(j) == t) vg = g.value(j++);
    visit(t, vf, vg);
  }
}

}  // namespace

double sup_distance(const SampledPath& f, const SampledPath& g) {
  require_same_domain(f, g);
  double best = 0.0;
  merge_walk(f, g, [&](double, double a, double b) { best = std::max(best, std::abs(a - b)); });
  return best;
}

SampledPath negate(const SampledPath& path) {
  std::vector<double> values(path.values().begin(), path.values().end());
  for (auto& v : values) v = -v;
  return with_values(path, std::move(values));
}

SampledPath add_constant(const SampledPath& path, double alpha) {
  std::vector<double> values(path.values().begin(), path.values().end());
  for (auto& v : values) v += alpha;
  return with_values(path, std::move(values));
}

SampledPath combine(const SampledPath& f, const SampledPath& g, double weight_f,
                    double weight_g) {
  require_same_domain(f, g);
  std::vector<double> times;
  std::vector<double> values;
  times.reserve(f.size() + g.size());
  values.reserve(f.size() + g.size());
  merge_walk(f, g, [&](double t, double a, double b) {
    times.push_back(t);
    values.push_back(weight_f * a + weight_g * b);
  });
  return SampledPath::make(std::move(times), std::move(values));
}

}  // namespace truncvar
