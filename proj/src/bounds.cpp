#include "unsharp/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace unsharp {

namespace {

void require_same_dim(const Povm& a, const Povm& b) {
    if (a.dim() != b.dim()) {
        std::ostringstream os;
        os << "POVM dimensions differ: " << a.dim() << " vs " << b.dim();
        throw Error(ErrorCode::DimensionMismatch, os.str());
    }
}

void require_basis_pair(const Basis& a, const Basis& b) {
    require_orthonormal(a);
    require_orthonormal(b);
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "bases have different dimensions");
    }
}

// Largest eigenvalue of a Hermitian matrix known to be PSD.
double top_eigenvalue(const ComplexMatrix& m) {
    const auto ev = hermitian_eigenvalues(m);
    return ev(ev.size() - 1);
}

}  // namespace

double krishna_bound(const Povm& a) {
    double largest = 0.0;
    for (const auto& spec : a.spectra()) largest = std::max(largest, spec.eigenvalues.front());
    return std::max(0.0, -std::log2(largest));
}

ComplexMatrix device_operator(const Povm& a) {
    ComplexMatrix m = ComplexMatrix::Zero(a.dim(), a.dim());
    for (const auto& spec : a.spectra()) {
        for (std::size_t k = 0; k < spec.size(); ++k) {
            const double weight = h(spec.eigenvalues[k]);
            if (weight != 0.0) m += weight * projector(spec.eigenvectors[k]);
        }
    }
    return m;
}

double min_device_uncertainty(const Povm& a) {
    return std::max(0.0, lowest_eigenvalue(device_operator(a)));
}

double device_uncertainty_white_noise(double alpha, int d) {
    if (!(alpha >= 0.0 && alpha <= 1.0) || d < 2) {
        throw Error(ErrorCode::OutOfRange, "white-noise device uncertainty needs alpha in [0, 1] and d >= 2");
    }
    const double noise = (1.0 - alpha) / static_cast<double>(d);
    return h(alpha + noise) + static_cast<double>(d - 1) * h(noise);
}

double coles_bound(const Povm& a, const Povm& b) {
    require_same_dim(a, b);
    const auto d = a.dim();
    double max_ab = 0.0;
    for (const auto& ai : a.effects()) {
        ComplexMatrix sandwich = ComplexMatrix::Zero(d, d);
        for (const auto& bj : b.effects()) sandwich += bj * ai * bj;
        max_ab = std::max(max_ab, operator_norm(sandwich));
    }
    double max_ba = 0.0;
    for (const auto& bj : b.effects()) {
        ComplexMatrix sandwich = ComplexMatrix::Zero(d, d);
        for (const auto& ai : a.effects()) sandwich += ai * bj * ai;
        max_ba = std::max(max_ba, operator_norm(sandwich));
    }
    return std::max(0.0, -std::log2(std::min(max_ab, max_ba)));
}

double max_overlap(const Basis& a, const Basis& b) {
    require_basis_pair(a, b);
    double c = 0.0;
    for (const auto& ai : a) {
        for (const auto& bj : b) c = std::max(c, std::norm(ai.dot(bj)));
    }
    return std::min(c, 1.0);
}

double mu_bound(const Basis& a, const Basis& b) {
    return -std::log2(max_overlap(a, b));
}

double b1_bound(const Basis& a, double alpha, const Basis& b, double beta) {
    const int d = static_cast<int>(a.size());
    const double mu = mu_bound(a, b);
    return mu + std::min(device_uncertainty_white_noise(alpha, d), device_uncertainty_white_noise(beta, d));
}

double berta_reduced_bound(const Basis& a, const Basis& b, const DensityMatrix& rho) {
    if (rho.dim() != static_cast<Eigen::Index>(a.size())) {
        throw Error(ErrorCode::DimensionMismatch, "state and bases have different dimensions");
    }
    return mu_bound(a, b) + von_neumann_entropy(rho);
}

MajorizationVector majorization_vector(const Basis& a, const Basis& b) {
    require_basis_pair(a, b);
    const int d = static_cast<int>(a.size());
    if (d > kMaxMajorizationDim) {
        std::ostringstream os;
        os << "majorization vector enumeration is limited to d <= " << kMaxMajorizationDim << " (got " << d << ")";
        throw Error(ErrorCode::DimensionTooLarge, os.str());
    }

    // Projector sums for every subset, indexed by bitmask.
    const unsigned subsets = 1u << d;
    std::vector<ComplexMatrix> sum_a(subsets, ComplexMatrix::Zero(d, d));
    std::vector<ComplexMatrix> sum_b(subsets, ComplexMatrix::Zero(d, d));
    for (unsigned mask = 1; mask < subsets; ++mask) {
        const int low = std::countr_zero(mask);
        const unsigned rest = mask & (mask - 1);
        sum_a[mask] = sum_a[rest] + projector(a[static_cast<std::size_t>(low)]);
        sum_b[mask] = sum_b[rest] + projector(b[static_cast<std::size_t>(low)]);
    }

    // best[k] is w_k for |R| + |S| = k + 1, k = 1..d.
    std::vector<double> best(static_cast<std::size_t>(d) + 1, 0.0);
    for (unsigned r = 0; r < subsets; ++r) {
        const int size_r = std::popcount(r);
        for (unsigned s = 0; s < subsets; ++s) {
            const int k = size_r + std::popcount(s) - 1;
            if (k < 1 || k > d) continue;
            const double norm = top_eigenvalue(sum_a[r] + sum_b[s]);
            auto& slot = best[static_cast<std::size_t>(k)];
            slot = std::max(slot, norm);
        }
    }

    MajorizationVector mv;
    mv.w.assign(best.begin() + 1, best.end());
    for (std::size_t k = 1; k < mv.w.size(); ++k) mv.w[k] = std::max(mv.w[k], mv.w[k - 1]);
    mv.weights.reserve(2 * static_cast<std::size_t>(d) - 1);
    mv.weights.push_back(std::max(0.0, mv.w.front() - 1.0));
    for (std::size_t k = 1; k < mv.w.size(); ++k) mv.weights.push_back(mv.w[k] - mv.w[k - 1]);
    mv.weights.resize(2 * static_cast<std::size_t>(d) - 1, 0.0);
    return mv;
}

double hw_bound(const MajorizationVector& mv) {
    return shannon_entropy(std::span<const double>(mv.weights));
}

MajorizationBounds qw_b2_bound(const MajorizationVector& mv, double alpha, double beta, int d) {
    const double gamma = std::min(alpha, beta);
    MajorizationBounds out;
    // Padding W to length 2d adds one more zero; f(0, .) = 0.
    for (double w : mv.weights) out.qw += f_white_noise(clamp_unit(w), gamma, d);
    out.b2 = out.qw + device_uncertainty_white_noise(alpha, d) + device_uncertainty_white_noise(beta, d);
    return out;
}

MajorizationBounds qw_b2_bound(const Basis& a, double alpha, const Basis& b, double beta) {
    return qw_b2_bound(majorization_vector(a, b), alpha, beta, static_cast<int>(a.size()));
}

double min_pair_device_bound(const Povm& a, const Povm& b) {
    require_same_dim(a, b);
    return std::max(0.0, lowest_eigenvalue(device_operator(a) + device_operator(b)));
}

double ad_coles_closed_form(double e) {
    if (!(e >= 0.0 && e <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "transition probability e must lie in [0, 1]");
    }
    const double inner = (2.0 + 2.0 * e - e * e + 3.0 * e * e * e +
                          (1.0 - e) * e * std::sqrt(3.0 * (4.0 + 4.0 * e + 3.0 * e * e))) / 6.0;
    return std::max(0.0, -std::log2(inner));
}

double ad_pair_device_closed_form(double e) {
    return (1.0 - 1.0 / std::sqrt(3.0)) * binary_entropy(e);
}

const std::vector<std::string>& BoundReport::lower_bound_keys() {
    static const std::vector<std::string> keys{"krishna_A", "krishna_B", "minD_A", "minD_B", "minD_pair",
                                               "coles_C",   "B1",        "HW",     "B2",     "D_WN"};
    return keys;
}

bool BoundReport::consistent(double slack) const {
    const auto ha = values.find("H_A");
    const auto hb = values.find("H_B");
    if (ha == values.end() || hb == values.end()) return true;
    const double total = ha->second + hb->second;
    for (const auto& key : lower_bound_keys()) {
        const auto it = values.find(key);
        if (it == values.end()) continue;
        // Single-observable bounds only bound their own entropy.
        double limit = total;
        if (key.ends_with("_A")) limit = ha->second;
        if (key.ends_with("_B")) limit = hb->second;
        if (it->second > limit + slack) return false;
    }
    return true;
}

BoundReport bound_report(const Povm& a, const Povm& b, const DensityMatrix* rho) {
    require_same_dim(a, b);
    const int d = static_cast<int>(a.dim());
    BoundReport report;
    auto& v = report.values;
    v["krishna_A"] = krishna_bound(a);
    v["krishna_B"] = krishna_bound(b);
    v["minD_A"] = min_device_uncertainty(a);
    v["minD_B"] = min_device_uncertainty(b);
    v["minD_pair"] = min_pair_device_bound(a, b);
    v["coles_C"] = coles_bound(a, b);
    report.metadata["dim"] = std::to_string(d);
    report.metadata["outcomes_A"] = std::to_string(a.size());
    report.metadata["outcomes_B"] = std::to_string(b.size());

    const auto wn_a = detect_white_noise(a);
    const auto wn_b = detect_white_noise(b);
    if (wn_a && wn_b && d <= kMaxMajorizationDim) {
        report.metadata["A"] = "white-noise alpha=" + std::to_string(wn_a->alpha);
        report.metadata["B"] = "white-noise beta=" + std::to_string(wn_b->alpha);
        v["mu"] = mu_bound(wn_a->basis, wn_b->basis);
        v["B1"] = b1_bound(wn_a->basis, wn_a->alpha, wn_b->basis, wn_b->alpha);
        const auto mv = majorization_vector(wn_a->basis, wn_b->basis);
        v["HW"] = hw_bound(mv);
        const auto maj = qw_b2_bound(mv, wn_a->alpha, wn_b->alpha, d);
        v["QW"] = maj.qw;
        v["B2"] = maj.b2;
        v["D_WN"] = device_uncertainty_white_noise(wn_a->alpha, d) + device_uncertainty_white_noise(wn_b->alpha, d);
        report.notes.push_back(
            "B1 convention: c_ab = max_ij |<a_i|b_j>|^2 (not squared again), "
            "B1 = -log2 c_ab + min[D(A_alpha), D(B_beta)]");
    } else {
        report.metadata["A"] = wn_a ? "white-noise" : "general";
        report.metadata["B"] = wn_b ? "white-noise" : "general";
    }

    if (rho != nullptr) {
        report.metadata["state"] = "supplied";
        const double ha = shannon_entropy(outcome_probs(*rho, a));
        const double hb = shannon_entropy(outcome_probs(*rho, b));
        const double da = device_uncertainty(*rho, a);
        const double db = device_uncertainty(*rho, b);
        v["H_A"] = ha;
        v["H_B"] = hb;
        v["H_sum"] = ha + hb;
        v["D_A"] = da;
        v["D_B"] = db;
        v["Q_A"] = ha - da;
        v["Q_B"] = hb - db;
    }
    return report;
}

}  // namespace unsharp
