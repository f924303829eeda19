#include "truncvar/synth.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace truncvar {

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::RandomWalk: return "random-walk";
    case GeneratorKind::JumpMixture: return "jump-mixture";
    case GeneratorKind::Ramp: return "ramp";
    case GeneratorKind::NearThresholdOscillator: return "near-threshold-oscillator";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  for (auto kind : {GeneratorKind::RandomWalk, GeneratorKind::JumpMixture, GeneratorKind::Ramp,
                    GeneratorKind::NearThresholdOscillator}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::UnknownKind, "unknown generator kind '" + std::string(name) + "'");
}

SampledPath generate(const GeneratorSpec& spec) {
  if (spec.length < 1) throw Error(ErrorCode::InvalidSpec, "length must be at least 1");
  if (!std::isfinite(spec.scale) || !(spec.scale > 0.0)) {
    throw Error(ErrorCode::InvalidSpec, "scale must be finite and positive");
  }
  const std::size_t n = spec.length;
  std::vector<double> times(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) times[i] = static_cast<double>(i);

  SplitMix64 rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::RandomWalk: {
      double x = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        values[i] = x;
        x += spec.scale * rng.symmetric();
      }
      break;
    }
    case GeneratorKind::JumpMixture: {
      if (!(spec.jump_intensity >= 0.0 && spec.jump_intensity <= 1.0)) {
        throw Error(ErrorCode::InvalidSpec, "jump intensity must lie in [0, 1]");
      }
      double x = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        values[i] = x;
        const bool jump = rng.uniform() < spec.jump_intensity;
        const double step = rng.symmetric();
        x += jump ? 5.0 * spec.scale * step : 0.1 * spec.scale * step;
      }
      break;
    }
    case GeneratorKind::Ramp:
      for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<double>(i) * spec.scale;
      break;
    case GeneratorKind::NearThresholdOscillator: {
      if (!std::isfinite(spec.target_level) || !(spec.target_level > 0.0) ||
          !std::isfinite(spec.amplitude) || !(spec.amplitude > 0.0)) {
        throw Error(ErrorCode::InvalidSpec, "oscillator needs positive level and amplitude");
      }
      const double peak = spec.amplitude * spec.target_level;
      const double jitter = peak / 8.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double inward = jitter * rng.uniform();
        values[i] = (i % 2 == 0) ? inward : peak - inward;
      }
      // Pin both extremes so the range is exactly the amplitude.
      values[0] = 0.0;
      if (n > 1) values[1] = peak;
      break;
    }
  }
  return make_path(std::move(times), std::move(values));
}

}  // namespace truncvar
