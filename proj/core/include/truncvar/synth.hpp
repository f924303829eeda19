#pragma once

#include <cstdint>
#include <string_view>

#include "truncvar/path.hpp"

namespace truncvar {

/// SplitMix64 (Steele, Lea & Flood). Chosen for its published reference
/// outputs so paths can be reproduced in any language.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform on [-1, 1).
  double symmetric() noexcept { return 2.0 * uniform() - 1.0; }

private:
  std::uint64_t state_;
};

enum class GeneratorKind { RandomWalk, JumpMixture, Ramp, NearThresholdOscillator };

std::string_view to_string(GeneratorKind kind) noexcept;

/// Throws Error(UnknownKind) for anything but the four canonical names.
GeneratorKind parse_generator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::RandomWalk;
  std::size_t length = 1000;
  std::uint64_t seed = 0;
  double scale = 1.0;
  /// jump-mixture: probability that a step is a large jump.
  double jump_intensity = 0.05;
  /// near-threshold-oscillator: the level the amplitude is measured against.
  double target_level = 1.0;
  /// near-threshold-oscillator: peak-to-peak amplitude as a multiple of
  /// target_level.
  double amplitude = 0.999;
};

/// Deterministic path on times 0, 1, ..., length-1.
///
///  - random-walk: x_0 = 0, steps uniform on [-scale, scale).
///  - jump-mixture: steps uniform on [-scale/10, scale/10), replaced with
///    probability jump_intensity by a jump uniform on [-5 scale, 5 scale).
///  - ramp: x_i = i * scale.
///  - near-threshold-oscillator: alternates between the bands near 0 and
///    near A = amplitude * target_level, jittered inward by up to A/8, so
///    the range never exceeds A.
SampledPath generate(const GeneratorSpec& spec);

}  // namespace truncvar
