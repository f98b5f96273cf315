#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "unsharp/linalg.hpp"

namespace unsharp {

// A validated POVM on C^d. Effects keep their input order; outcome labels
// are indices into effects(). Spectra of every effect are cached at
// construction.
class Povm {
public:
    Eigen::Index dim() const { return dim_; }
    std::size_t size() const { return effects_.size(); }
    const std::vector<ComplexMatrix>& effects() const { return effects_; }
    const ComplexMatrix& effect(std::size_t i) const { return effects_[i]; }
    const std::vector<SpectralDecomposition>& spectra() const { return spectra_; }
    const SpectralDecomposition& spectrum(std::size_t i) const { return spectra_[i]; }

    /// Max entry of |sum_i A_i - I|.
    double completeness_residual() const;

    friend Povm make_povm(std::vector<ComplexMatrix> effects);

private:
    Povm(std::vector<ComplexMatrix> effects, std::vector<SpectralDecomposition> spectra);

    Eigen::Index dim_ = 0;
    std::vector<ComplexMatrix> effects_;
    std::vector<SpectralDecomposition> spectra_;
};

/// Validates positivity, eigenvalues <= 1 and completeness. Errors carry the
/// effect index and the size of the violation.
Povm make_povm(std::vector<ComplexMatrix> effects);

Povm projective_from_basis(const Basis& basis);

/// Bloch parameters of the two-outcome qubit POVM
/// A_up = (a0 I + a.sigma) / 2, A_down = I - A_up.
struct QubitPovmParams {
    double a0 = 1.0;
    std::array<double, 3> a_vec{0.0, 0.0, 0.0};

    double bloch_length() const;
    /// p(up | +) and p(up | -): eigenvalues of A_up on |a_+>, |a_->.
    double p_up_plus() const { return (a0 + bloch_length()) / 2.0; }
    double p_up_minus() const { return (a0 - bloch_length()) / 2.0; }
};

void require_valid(const QubitPovmParams& params);

/// Eigenstates |a_+>, |a_-> of a.sigma. For a = 0 the computational basis.
std::pair<Ket, Ket> bloch_eigenstates(const std::array<double, 3>& a_vec);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

Povm qubit_povm(const QubitPovmParams& params);

/// A_i(alpha) = alpha |a_i><a_i| + (1 - alpha) I / d.
Povm white_noise_povm(const Basis& basis, double alpha);

/// Three-outcome amplitude-damping measurement on a qutrit basis {x0, x1, x2}:
/// {|x0><x0| + e|x1><x1| + e|x2><x2|, (1-e)|x1><x1|, (1-e)|x2><x2|}.
Povm amplitude_damping_povm(const Basis& basis, double e);

/// {p A_1, ..., p A_n, (1-p) B_1, ..., (1-p) B_m}.
Povm convex_combination(const Povm& a, const Povm& b, double p);

/// Computational basis and its discrete Fourier transform,
/// |z_j> = d^{-1/2} sum_k exp(2 pi i j k / d) |k>.
std::pair<Basis, Basis> mub_fourier_basis(int dim);

Basis computational_basis(int dim);

// Recovered white-noise structure of a POVM, when it has one.
struct WhiteNoiseForm {
    Basis basis;
    double alpha = 1.0;
};

/// Recognizes POVMs of the form alpha |a_i><a_i| + (1 - alpha) I / d with
/// alpha > 0. Returns nullopt for anything else.
std::optional<WhiteNoiseForm> detect_white_noise(const Povm& povm, double tolerance = 1e-8);

}  // namespace unsharp
