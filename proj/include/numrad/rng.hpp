#pragma once
//
// Counter-based SplitMix64 stream and the samplers built on it. The exact
// bit-level recipe is documented in docs/ensembles.md so other
// implementations can reproduce every ensemble.
//

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace numrad {

class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t operator()() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    // (0, 1], safe as a logarithm argument.
    double uniform_pos() noexcept {
        return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard complex Gaussian, E|z|^2 = 1: one Box-Muller pair scaled by 1/sqrt(2).
    std::complex<double> complex_gaussian() noexcept {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

  private:
    std::uint64_t state_;
};

// One SplitMix64 output of `seed`; used to derive independent child seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed) noexcept { return SplitMix64(seed)(); }

}  // namespace numrad
