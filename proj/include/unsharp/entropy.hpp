#pragma once

#include <span>
#include <vector>

#include "unsharp/linalg.hpp"
#include "unsharp/povm.hpp"

namespace unsharp {

// All entropies are in bits.

/// Outcome probabilities p_i = Tr[rho A_i], clamped to [0, 1].
struct OutcomeDistribution {
    std::vector<double> probs;
};

OutcomeDistribution outcome_probs(const DensityMatrix& rho, const Povm& a);

/// h(x) = -x log2 x with h(0) = 0. Arguments are clamped onto [0, 1].
double h(double x);

/// -sum x log2 x over any non-negative vector (need not be normalized).
double shannon_entropy(std::span<const double> values);
double shannon_entropy(const OutcomeDistribution& dist);

double binary_entropy(double p);

/// -Tr rho log2 rho.
double von_neumann_entropy(const DensityMatrix& rho);

/// D = sum_i sum_k <a_i^k| rho |a_i^k> h(a_i^k).
double device_uncertainty(const DensityMatrix& rho, const Povm& a);

/// Same as above but over caller-supplied spectral decompositions of the
/// effects. Any valid decomposition (e.g. a rotated basis of a degenerate
/// eigenspace) gives the same value.
double device_uncertainty(const DensityMatrix& rho, std::span<const SpectralDecomposition> spectra);

/// Two-outcome qubit form: sum_{i=+,-} |<psi|a_i>|^2 H_bin(p(up|i)).
double device_uncertainty_qubit(const Ket& psi, const QubitPovmParams& params);

/// Q = H - D.
double quantum_uncertainty(const DensityMatrix& rho, const Povm& a);

/// Per-outcome contribution to the quantum uncertainty of a white-noise
/// measurement with mixedness alpha in dimension d; sum_i f(p_i) = Q.
double f_white_noise(double p, double alpha, int d);

}  // namespace unsharp
