#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "unsharp/linalg.hpp"
#include "unsharp/povm.hpp"

namespace unsharp {

struct RngSeed {
    std::uint64_t value = 0;
};

/// splitmix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic stream: a fixed seed reproduces the same draws within a build.
class Rng {
public:
    explicit Rng(RngSeed seed) : engine_(mix_seed(seed.value, 0)) {}

    /// Independent stream for trial `index` of a run seeded with `seed`.
    static Rng for_trial(RngSeed seed, std::uint64_t index) {
        return Rng(RngSeed{mix_seed(seed.value, index + 1)});
    }

    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }
    double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    std::mt19937_64 engine_;
};

/// Normalized vector of independent complex Gaussians (unitarily invariant).
Ket random_ket(int d, Rng& rng);

DensityMatrix random_pure_state(int d, Rng& rng);

/// Mixture of d random pure states with uniform simplex weights.
DensityMatrix random_mixed_state(int d, Rng& rng);

/// Gram-Schmidt on the columns of a complex Gaussian matrix.
Basis random_basis(int d, Rng& rng);

/// n >= 2 effects A_i = S^{-1/2} G_i S^{-1/2} with G_i random positive and S = sum G_i.
Povm random_povm(int d, int n, Rng& rng);

using StateObjective = std::function<double(const DensityMatrix&)>;

/// Minimum of `objective` over `trials` random pure states. An upper
/// estimate of the true minimum; tight for objectives linear in rho.
double sampled_min(const StateObjective& objective, int d, int trials, Rng& rng);

}  // namespace unsharp
