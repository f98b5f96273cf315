#include "unsharp/povm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace unsharp {

Povm::Povm(std::vector<ComplexMatrix> effects, std::vector<SpectralDecomposition> spectra)
    : dim_(effects.front().rows()), effects_(std::move(effects)), spectra_(std::move(spectra)) {}

double Povm::completeness_residual() const {
    ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
    for (const auto& e : effects_) sum += e;
    return (sum - ComplexMatrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
}

Povm make_povm(std::vector<ComplexMatrix> effects) {
    if (effects.empty()) {
        throw Error(ErrorCode::WrongDimension, "POVM needs at least one effect");
    }
    const auto d = effects.front().rows();
    if (d == 0) {
        throw Error(ErrorCode::WrongDimension, "POVM effects must have dimension >= 1");
    }
    std::vector<SpectralDecomposition> spectra;
    spectra.reserve(effects.size());
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < effects.size(); ++i) {
        const auto& e = effects[i];
        if (e.rows() != d || e.cols() != d) {
            std::ostringstream os;
            os << "effect " << i << " is " << e.rows() << "x" << e.cols() << ", expected " << d << "x" << d;
            throw Error(ErrorCode::DimensionMismatch, os.str(), i);
        }
        const double defect = hermiticity_defect(e);
        if (defect > tol::hermitian) {
            std::ostringstream os;
            os << "effect " << i << " is not Hermitian: max |A - A^dagger| = " << defect;
            throw Error(ErrorCode::NotHermitian, os.str(), i, defect);
        }
        auto spec = hermitian_eig(e);
        const double top = spec.eigenvalues.front();
        const double bottom = spec.eigenvalues.back();
        if (bottom < -tol::psd) {
            std::ostringstream os;
            os << "effect " << i << " is not positive: lowest eigenvalue " << bottom;
            throw Error(ErrorCode::NotPositive, os.str(), i, bottom);
        }
        if (top > 1.0 + tol::psd) {
            std::ostringstream os;
            os << "effect " << i << " has eigenvalue " << top << " above 1";
            throw Error(ErrorCode::EigenvalueAboveOne, os.str(), i, top);
        }
        for (auto& v : spec.eigenvalues) v = clamp_unit(v);
        sum += e;
        spectra.push_back(std::move(spec));
    }
    const double residual = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (residual > tol::reconstruction) {
        std::ostringstream os;
        os << "effects do not sum to the identity: max residual " << residual;
        throw Error(ErrorCode::CompletenessViolated, os.str(), std::nullopt, residual);
    }
    return Povm(std::move(effects), std::move(spectra));
}

Povm projective_from_basis(const Basis& basis) {
    require_orthonormal(basis);
    std::vector<ComplexMatrix> effects;
    effects.reserve(basis.size());
    for (const auto& v : basis) effects.push_back(projector(v));
    return make_povm(std::move(effects));
}

double QubitPovmParams::bloch_length() const {
    return std::sqrt(a_vec[0] * a_vec[0] + a_vec[1] * a_vec[1] + a_vec[2] * a_vec[2]);
}

void require_valid(const QubitPovmParams& params) {
    constexpr double slack = 1e-12;
    const double len = params.bloch_length();
    if (!(len <= params.a0 + slack) || !(params.a0 <= 2.0 - len + slack)) {
        std::ostringstream os;
        os << "qubit POVM parameters violate |a| <= a0 <= 2 - |a| (a0 = " << params.a0
           << ", |a| = " << len << ")";
        throw Error(ErrorCode::OutOfRange, os.str());
    }
}

std::pair<Ket, Ket> bloch_eigenstates(const std::array<double, 3>& a_vec) {
    const double len = std::sqrt(a_vec[0] * a_vec[0] + a_vec[1] * a_vec[1] + a_vec[2] * a_vec[2]);
    Ket plus(2), minus(2);
    if (len == 0.0) {
        plus << 1.0, 0.0;
        minus << 0.0, 1.0;
        return {plus, minus};
    }
    const double polar = std::acos(std::clamp(a_vec[2] / len, -1.0, 1.0));
    const double azimuth = std::atan2(a_vec[1], a_vec[0]);
    const Complex phase = std::polar(1.0, azimuth);
    plus << std::cos(polar / 2.0), phase * std::sin(polar / 2.0);
    minus << std::sin(polar / 2.0), -phase * std::cos(polar / 2.0);
    return {plus, minus};
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

Povm qubit_povm(const QubitPovmParams& params) {
    require_valid(params);
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix bloch =
        params.a_vec[0] * pauli_x() + params.a_vec[1] * pauli_y() + params.a_vec[2] * pauli_z();
    ComplexMatrix up = (params.a0 * id + bloch) / 2.0;
    ComplexMatrix down = id - up;
    return make_povm({std::move(up), std::move(down)});
}

Povm white_noise_povm(const Basis& basis, double alpha) {
    require_orthonormal(basis);
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "white-noise alpha must lie in [0, 1]");
    }
    const auto d = static_cast<Eigen::Index>(basis.size());
    const ComplexMatrix noise = ComplexMatrix::Identity(d, d) * ((1.0 - alpha) / static_cast<double>(d));
    std::vector<ComplexMatrix> effects;
    effects.reserve(basis.size());
    for (const auto& v : basis) effects.push_back(alpha * projector(v) + noise);
    return make_povm(std::move(effects));
}

Povm amplitude_damping_povm(const Basis& basis, double e) {
    if (basis.size() != 3) {
        throw Error(ErrorCode::WrongDimension, "amplitude damping is defined on a 3-element basis");
    }
    require_orthonormal(basis);
    if (!(e >= 0.0 && e <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "transition probability e must lie in [0, 1]");
    }
    const ComplexMatrix p0 = projector(basis[0]);
    const ComplexMatrix p1 = projector(basis[1]);
    const ComplexMatrix p2 = projector(basis[2]);
    return make_povm({p0 + e * p1 + e * p2, (1.0 - e) * p1, (1.0 - e) * p2});
}

Povm convex_combination(const Povm& a, const Povm& b, double p) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "convex combination of POVMs with different dimensions");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "mixing probability p must lie in [0, 1]");
    }
    std::vector<ComplexMatrix> effects;
    effects.reserve(a.size() + b.size());
    for (const auto& e : a.effects()) effects.push_back(p * e);
    for (const auto& e : b.effects()) effects.push_back((1.0 - p) * e);
    return make_povm(std::move(effects));
}

Basis computational_basis(int dim) {
    if (dim < 1) throw Error(ErrorCode::WrongDimension, "dimension must be positive");
    Basis out;
    for (int k = 0; k < dim; ++k) out.push_back(Ket::Unit(dim, k));
    return out;
}

std::pair<Basis, Basis> mub_fourier_basis(int dim) {
    if (dim < 2) throw Error(ErrorCode::WrongDimension, "Fourier MUB pair needs d >= 2");
    Basis fourier;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int j = 0; j < dim; ++j) {
        Ket z(dim);
        for (int k = 0; k < dim; ++k) {
            // Reduce j*k mod d first so the phase argument stays small.
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % dim) / dim;
            z(k) = std::polar(scale, angle);
        }
        fourier.push_back(std::move(z));
    }
    return {computational_basis(dim), std::move(fourier)};
}

std::optional<WhiteNoiseForm> detect_white_noise(const Povm& povm, double tolerance) {
    const auto d = povm.dim();
    if (static_cast<Eigen::Index>(povm.size()) != d || d < 2) return std::nullopt;

    const auto& first = povm.spectrum(0).eigenvalues;
    const double floor = first.back();
    const double alpha = first.front() - floor;
    if (alpha <= tolerance) return std::nullopt;
    if (std::abs(floor - (1.0 - alpha) / static_cast<double>(d)) > tolerance) return std::nullopt;

    WhiteNoiseForm form;
    form.alpha = alpha;
    for (std::size_t i = 0; i < povm.size(); ++i) {
        const auto& spec = povm.spectrum(i);
        if (std::abs(spec.eigenvalues.front() - floor - alpha) > tolerance) return std::nullopt;
        for (std::size_t k = 1; k < spec.size(); ++k) {
            if (std::abs(spec.eigenvalues[k] - floor) > tolerance) return std::nullopt;
        }
        form.basis.push_back(spec.eigenvectors.front());
    }
    try {
        require_orthonormal(form.basis);
    } catch (const Error&) {
        return std::nullopt;
    }
    return form;
}

}  // namespace unsharp
