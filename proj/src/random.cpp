#include "unsharp/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace unsharp {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Ket random_ket(int d, Rng& rng) {
    if (d < 1) throw Error(ErrorCode::WrongDimension, "random state needs d >= 1");
    Ket v(d);
    for (;;) {
        for (int k = 0; k < d; ++k) v(k) = rng.complex_gaussian();
        const double n = v.norm();
        if (n > 1e-12) return v / n;
    }
}

DensityMatrix random_pure_state(int d, Rng& rng) {
    return DensityMatrix::pure(random_ket(d, rng));
}

DensityMatrix random_mixed_state(int d, Rng& rng) {
    std::vector<double> weights(static_cast<std::size_t>(d));
    double total = 0.0;
    for (auto& w : weights) {
        // Exponential draws normalize to a uniform point on the simplex.
        w = -std::log(1.0 - rng.uniform());
        total += w;
    }
    ComplexMatrix rho = ComplexMatrix::Zero(d, d);
    for (auto w : weights) rho += (w / total) * projector(random_ket(d, rng));
    rho = (rho + rho.adjoint()) / 2.0;
    rho /= rho.trace().real();
    return validate_density(rho);
}

Basis random_basis(int d, Rng& rng) {
    if (d < 1) throw Error(ErrorCode::WrongDimension, "random basis needs d >= 1");
    constexpr int kMaxAttempts = 100;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Basis basis;
        bool degenerate = false;
        for (int j = 0; j < d && !degenerate; ++j) {
            Ket v(d);
            for (int k = 0; k < d; ++k) v(k) = rng.complex_gaussian();
            // Modified Gram-Schmidt, two passes for orthogonality at rounding level.
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& u : basis) v -= u.dot(v) * u;
            }
            const double n = v.norm();
            if (n < 1e-10) {
                degenerate = true;
            } else {
                basis.push_back(v / n);
            }
        }
        if (!degenerate) return basis;
    }
    throw Error(ErrorCode::DegenerateDraw, "random basis draw degenerate 100 times in a row");
}

Povm random_povm(int d, int n, Rng& rng) {
    if (n < 2) throw Error(ErrorCode::OutOfRange, "random POVM needs at least 2 outcomes");
    if (d < 1) throw Error(ErrorCode::WrongDimension, "random POVM needs d >= 1");
    constexpr int kMaxAttempts = 100;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<ComplexMatrix> gram;
        ComplexMatrix total = ComplexMatrix::Zero(d, d);
        for (int i = 0; i < n; ++i) {
            // Random rank keeps the corpus from being all full-rank effects.
            const int rank = rng.uniform_int(1, d);
            ComplexMatrix x(d, rank);
            for (int r = 0; r < d; ++r) {
                for (int c = 0; c < rank; ++c) x(r, c) = rng.complex_gaussian();
            }
            gram.push_back(x * x.adjoint());
            total += gram.back();
        }
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(total);
        const auto& ev = solver.eigenvalues();
        if (ev(0) < 1e-8 * ev(d - 1)) continue;
        const ComplexMatrix inv_sqrt =
            solver.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * solver.eigenvectors().adjoint();
        std::vector<ComplexMatrix> effects;
        effects.reserve(static_cast<std::size_t>(n));
        for (const auto& g : gram) {
            ComplexMatrix e = inv_sqrt * g * inv_sqrt;
            effects.push_back((e + e.adjoint()) / 2.0);
        }
        return make_povm(std::move(effects));
    }
    throw Error(ErrorCode::DegenerateDraw, "random POVM draw degenerate 100 times in a row");
}

double sampled_min(const StateObjective& objective, int d, int trials, Rng& rng) {
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) best = std::min(best, objective(random_pure_state(d, rng)));
    return best;
}

}  // namespace unsharp
