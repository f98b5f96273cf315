#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "unsharp/error.hpp"

namespace unsharp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;
using Basis = std::vector<Ket>;

namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double psd = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double orth = 1e-8;
inline constexpr double reconstruction = 1e-8;
}  // namespace tol

/// Eigenpairs of a Hermitian matrix, eigenvalues in descending order.
/// eigenvectors[k] belongs to eigenvalues[k].
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    std::vector<Ket> eigenvectors;

    std::size_t size() const { return eigenvalues.size(); }
    ComplexMatrix reconstruct() const;
};

/// Largest entry of |m - m^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

/// Eigenvalues only, ascending. Cheaper than hermitian_eig when vectors are not needed.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

double lowest_eigenvalue(const ComplexMatrix& m);

/// Largest |eigenvalue| of a Hermitian matrix.
double operator_norm(const ComplexMatrix& m);

/// |<v|w>|^2 for unit vectors.
double overlap(const Ket& v, const Ket& w);

ComplexMatrix projector(const Ket& v);

/// Throws NotOrthonormal unless `basis` holds `basis.size()` orthonormal
/// vectors of that same dimension.
void require_orthonormal(std::span<const Ket> basis, double tolerance = tol::orth);

/// Clamps eigenvalues sitting just outside [0, 1] onto the interval.
double clamp_unit(double x);

// A validated quantum state: Hermitian, PSD and unit trace.
class DensityMatrix {
public:
    const ComplexMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

    static DensityMatrix pure(const Ket& psi);

    friend DensityMatrix validate_density(const ComplexMatrix& m);

private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

DensityMatrix validate_density(const ComplexMatrix& m);

}  // namespace unsharp
