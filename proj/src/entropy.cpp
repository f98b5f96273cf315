#include "unsharp/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace unsharp {

namespace {

void require_same_dim(const DensityMatrix& rho, Eigen::Index d) {
    if (rho.dim() != d) {
        std::ostringstream os;
        os << "state has dimension " << rho.dim() << ", measurement has dimension " << d;
        throw Error(ErrorCode::DimensionMismatch, os.str());
    }
}

// <v| rho |v>, real part only (rho is Hermitian).
double expectation(const ComplexMatrix& rho, const Ket& v) {
    return v.dot(rho * v).real();
}

}  // namespace

OutcomeDistribution outcome_probs(const DensityMatrix& rho, const Povm& a) {
    require_same_dim(rho, a.dim());
    OutcomeDistribution out;
    out.probs.reserve(a.size());
    for (const auto& e : a.effects()) {
        const double p = (rho.matrix() * e).trace().real();
        out.probs.push_back(clamp_unit(p));
    }
    return out;
}

double h(double x) {
    x = clamp_unit(x);
    return x > 0.0 ? -x * std::log2(x) : 0.0;
}

double shannon_entropy(std::span<const double> values) {
    double s = 0.0;
    for (double v : values) {
        if (v > 0.0) s -= v * std::log2(v);
    }
    return s;
}

double shannon_entropy(const OutcomeDistribution& dist) {
    return shannon_entropy(std::span<const double>(dist.probs));
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "binary entropy argument must lie in [0, 1]");
    }
    return h(p) + h(1.0 - p);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const auto ev = hermitian_eigenvalues(rho.matrix());
    double s = 0.0;
    for (Eigen::Index k = 0; k < ev.size(); ++k) s += h(ev(k));
    return s;
}

double device_uncertainty(const DensityMatrix& rho, std::span<const SpectralDecomposition> spectra) {
    double total = 0.0;
    for (const auto& spec : spectra) {
        for (std::size_t k = 0; k < spec.size(); ++k) {
            const double weight = h(spec.eigenvalues[k]);
            if (weight == 0.0) continue;
            if (spec.eigenvectors[k].size() != rho.dim()) {
                throw Error(ErrorCode::DimensionMismatch, "spectral decomposition does not match state dimension");
            }
            total += expectation(rho.matrix(), spec.eigenvectors[k]) * weight;
        }
    }
    return std::max(total, 0.0);
}

double device_uncertainty(const DensityMatrix& rho, const Povm& a) {
    require_same_dim(rho, a.dim());
    return device_uncertainty(rho, std::span<const SpectralDecomposition>(a.spectra()));
}

double device_uncertainty_qubit(const Ket& psi, const QubitPovmParams& params) {
    require_valid(params);
    if (psi.size() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "qubit device uncertainty needs a 2-dimensional state");
    }
    const auto [plus, minus] = bloch_eigenstates(params.a_vec);
    const double p_plus = clamp_unit(params.p_up_plus());
    const double p_minus = clamp_unit(params.p_up_minus());
    return overlap(psi, plus) * binary_entropy(p_plus) + overlap(psi, minus) * binary_entropy(p_minus);
}

double quantum_uncertainty(const DensityMatrix& rho, const Povm& a) {
    const double entropy = shannon_entropy(outcome_probs(rho, a));
    return entropy - device_uncertainty(rho, a);
}

double f_white_noise(double p, double alpha, int d) {
    if (!(p >= 0.0 && p <= 1.0) || !(alpha >= 0.0 && alpha <= 1.0) || d < 2) {
        throw Error(ErrorCode::OutOfRange, "f_white_noise needs p, alpha in [0, 1] and d >= 2");
    }
    const double noise = (1.0 - alpha) / static_cast<double>(d);
    const double peak = alpha + noise;
    const double mixed = alpha * p + noise;
    double value = 0.0;
    if (p > 0.0) value -= peak * p * std::log2(mixed / peak);
    if (noise > 0.0 && p < 1.0) value -= noise * (1.0 - p) * std::log2(mixed / noise);
    return value;
}

}  // namespace unsharp
