#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace gathering {

// SplitMix64 finalizer (Steele, Lea & Flood 2014). A bijection on 64-bit
// words; constants 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for sweep cell (n, rep). Injective over (n, rep) for n, rep < 2^32 at
// a fixed base seed: the packed key is unique and every stage is a bijection.
constexpr std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t n, std::uint64_t rep) {
  const std::uint64_t key = (n << 32) | (rep & 0xffffffffULL);
  return mix64(base_seed + mix64(key + 0x9e3779b97f4a7c15ULL));
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform in [0, bound). Modulo bias is irrelevant for shuffling.
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }

 private:
  std::uint64_t state_;
};

// The simulation generator. std::mt19937_64 is bit-specified by the standard;
// the real-valued conversions below are done by hand because the standard
// distributions are not portable across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform heading angle in [0, 2*pi).
  double angle();

 private:
  std::mt19937_64 engine_;
};

/// Supplies the per-step headings of all agents.
class HeadingSource {
 public:
  virtual ~HeadingSource() = default;
  // Fill one heading per agent, in ascending agent index.
  virtual void draw(std::span<double> headings) = 0;
};

class UniformHeadings final : public HeadingSource {
 public:
  explicit UniformHeadings(Rng& rng) : rng_(&rng) {}
  void draw(std::span<double> headings) override;

 private:
  Rng* rng_;
};

// Replays a fixed list of heading vectors, one per step; the last one repeats
// once the script runs out.
class ScriptedHeadings final : public HeadingSource {
 public:
  explicit ScriptedHeadings(std::vector<std::vector<double>> script);
  void draw(std::span<double> headings) override;

 private:
  std::vector<std::vector<double>> script_;
  std::size_t next_ = 0;
};

/// Wraps an angle into [0, 2*pi).
double wrap_angle(double angle);

}  // namespace gathering
