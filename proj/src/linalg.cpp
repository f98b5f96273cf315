#include "unsharp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace unsharp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotPositive: return "NotPositive";
        case ErrorCode::TraceNotOne: return "TraceNotOne";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NotOrthonormal: return "NotOrthonormal";
        case ErrorCode::EigenvalueAboveOne: return "EigenvalueAboveOne";
        case ErrorCode::CompletenessViolated: return "CompletenessViolated";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::WrongDimension: return "WrongDimension";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::DegenerateDraw: return "DegenerateDraw";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::UnknownSuite: return "UnknownSuite";
    }
    return "Unknown";
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    const auto dim = eigenvectors.empty() ? 0 : eigenvectors.front().size();
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
        out += eigenvalues[k] * eigenvectors[k] * eigenvectors[k].adjoint();
    }
    return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::WrongDimension, "matrix is not square");
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

void require_hermitian(const ComplexMatrix& m) {
    const double defect = hermiticity_defect(m);
    if (defect > tol::hermitian) {
        std::ostringstream os;
        os << "matrix is not Hermitian: max |m - m^dagger| = " << defect;
        throw Error(ErrorCode::NotHermitian, os.str(), std::nullopt, defect);
    }
}

// Symmetrize away rounding noise below the Hermiticity tolerance before
// handing the matrix to the solver.
ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    return (m + m.adjoint()) / 2.0;
}

}  // namespace

SpectralDecomposition hermitian_eig(const ComplexMatrix& m) {
    require_hermitian(m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m));
    const auto n = m.rows();
    SpectralDecomposition out;
    out.eigenvalues.reserve(static_cast<std::size_t>(n));
    out.eigenvectors.reserve(static_cast<std::size_t>(n));
    // Eigen sorts ascending.
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        out.eigenvalues.push_back(solver.eigenvalues()(k));
        out.eigenvectors.emplace_back(solver.eigenvectors().col(k));
    }
    return out;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
    require_hermitian(m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double lowest_eigenvalue(const ComplexMatrix& m) {
    return hermitian_eigenvalues(m)(0);
}

double operator_norm(const ComplexMatrix& m) {
    const auto ev = hermitian_eigenvalues(m);
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

namespace {

void require_unit(const Ket& v, std::size_t index) {
    const double dev = std::abs(v.norm() - 1.0);
    if (dev > tol::orth) {
        std::ostringstream os;
        os << "vector " << index << " is not normalized: | |v| - 1 | = " << dev;
        throw Error(ErrorCode::NotNormalized, os.str(), index, dev);
    }
}

}  // namespace

double overlap(const Ket& v, const Ket& w) {
    if (v.size() != w.size()) {
        throw Error(ErrorCode::DimensionMismatch, "overlap of vectors with different dimensions");
    }
    require_unit(v, 0);
    require_unit(w, 1);
    return std::min(1.0, std::norm(v.dot(w)));
}

ComplexMatrix projector(const Ket& v) {
    return v * v.adjoint();
}

void require_orthonormal(std::span<const Ket> basis, double tolerance) {
    const auto d = static_cast<Eigen::Index>(basis.size());
    if (d == 0) {
        throw Error(ErrorCode::NotOrthonormal, "basis is empty");
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].size() != d) {
            std::ostringstream os;
            os << "basis vector " << i << " has dimension " << basis[i].size()
               << ", expected " << d;
            throw Error(ErrorCode::NotOrthonormal, os.str(), i);
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const Complex g = basis[i].dot(basis[j]);
            const double dev = std::abs(g - (i == j ? 1.0 : 0.0));
            if (dev > tolerance) {
                std::ostringstream os;
                os << "basis vectors " << i << " and " << j
                   << " violate orthonormality by " << dev;
                throw Error(ErrorCode::NotOrthonormal, os.str(), i, dev);
            }
        }
    }
}

double clamp_unit(double x) {
    return std::clamp(x, 0.0, 1.0);
}

DensityMatrix DensityMatrix::pure(const Ket& psi) {
    require_unit(psi, 0);
    return DensityMatrix(projector(psi));
}

DensityMatrix validate_density(const ComplexMatrix& m) {
    require_hermitian(m);
    const auto ev = hermitian_eigenvalues(m);
    if (ev(0) < -tol::psd) {
        std::ostringstream os;
        os << "state is not positive: lowest eigenvalue " << ev(0);
        throw Error(ErrorCode::NotPositive, os.str(), std::nullopt, ev(0));
    }
    const double dev = std::abs(m.trace() - Complex(1.0, 0.0));
    if (dev > tol::trace) {
        std::ostringstream os;
        os << "state trace differs from 1 by " << dev;
        throw Error(ErrorCode::TraceNotOne, os.str(), std::nullopt, dev);
    }
    return DensityMatrix(m);
}

}  // namespace unsharp
