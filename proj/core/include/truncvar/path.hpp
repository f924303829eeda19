#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "truncvar/error.hpp"

namespace truncvar {

/// Threshold for truncated variation. Always strictly positive and finite.
class Level {
public:
  explicit Level(double c);

  double value() const noexcept { return c_; }
  double half() const noexcept { return 0.5 * c_; }

private:
  double c_;
};

/// A finite sample sequence read as a right-continuous step function.
///
/// f(t) = values[i] on [times[i], times[i+1]) and f(t) = values[n-1] at the
/// final sample. The domain is [times[0], times[n-1]]. The left limit at
/// times[i] (i >= 1) is values[i-1]. Instances are immutable once built.
class SampledPath {
public:
  /// Validates and takes ownership. Throws Error on empty input, length
  /// mismatch, non-increasing times or non-finite entries.
  static SampledPath make(std::vector<double> times, std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> times() const noexcept { return times_; }
  std::span<const double> values() const noexcept { return values_; }

  double time(std::size_t i) const { return times_[i]; }
  double value(std::size_t i) const { return values_[i]; }

  double domain_start() const noexcept { return times_.front(); }
  double domain_end() const noexcept { return times_.back(); }

  friend bool operator==(const SampledPath&, const SampledPath&) = default;

private:
  SampledPath(std::vector<double> times, std::vector<double> values)
      : times_(std::move(times)), values_(std::move(values)) {}

  std::vector<double> times_;
  std::vector<double> values_;
};

SampledPath make_path(std::vector<double> times, std::vector<double> values);

/// Builds a path on the same grid as `grid` with new values.
SampledPath with_values(const SampledPath& grid, std::vector<double> values);

/// Value of the step function at t; throws DomainError outside the domain.
double evaluate(const SampledPath& path, double t);

/// Sum of absolute sample increments (exact for step functions).
double total_variation(const SampledPath& path);

/// max(values) - min(values).
double osc_norm(const SampledPath& path);

/// Supremum of |f - g| over the union of both breakpoint sets.
/// Both paths must share the same domain.
double sup_distance(const SampledPath& f, const SampledPath& g);

SampledPath negate(const SampledPath& path);
SampledPath add_constant(const SampledPath& path, double alpha);

/// weight_f * f + weight_g * g, resampled on the union breakpoint grid.
SampledPath combine(const SampledPath& f, const SampledPath& g,
                    double weight_f = 1.0, double weight_g = 1.0);

}  // namespace truncvar
