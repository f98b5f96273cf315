#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unsharp/entropy.hpp"
#include "unsharp/povm.hpp"

namespace unsharp {

/// Subset enumeration for the majorization vector is O(4^d); refuse beyond this.
inline constexpr int kMaxMajorizationDim = 8;

/// -log2 max_i ||A_i||.
double krishna_bound(const Povm& a);

/// M_A = sum_{i,k} h(a_i^k) |a_i^k><a_i^k|. D_rho(A) = Tr[rho M_A].
ComplexMatrix device_operator(const Povm& a);

/// min over states of D_rho(A): the lowest eigenvalue of M_A.
double min_device_uncertainty(const Povm& a);

/// Closed-form (state independent) device uncertainty of a white-noise POVM.
double device_uncertainty_white_noise(double alpha, int d);

/// -log2 C with
/// C = min[ max_i ||sum_j B_j A_i B_j||, max_j ||sum_i A_i B_j A_i|| ].
double coles_bound(const Povm& a, const Povm& b);

/// Largest squared overlap max_{i,j} |<a_i|b_j>|^2.
double max_overlap(const Basis& a, const Basis& b);

/// -log2 max_{i,j} |<a_i|b_j>|^2.
double mu_bound(const Basis& a, const Basis& b);

/// -log2 c_ab + min[D(A_alpha), D(B_beta)], with c_ab = max |<a_i|b_j>|^2.
double b1_bound(const Basis& a, double alpha, const Basis& b, double beta);

/// mu_bound + S(rho); the single-system reduction of the memory-assisted relation.
double berta_reduced_bound(const Basis& a, const Basis& b, const DensityMatrix& rho);

struct MajorizationVector {
    std::vector<double> w;        // w_1 .. w_d, nondecreasing, w_d = 2
    std::vector<double> weights;  // (w_1 - 1, w_2 - w_1, ..., w_d - w_{d-1}, 0 x (d-1))
};

MajorizationVector majorization_vector(const Basis& a, const Basis& b);

/// Shannon entropy of the majorization weights.
double hw_bound(const MajorizationVector& mv);

struct MajorizationBounds {
    double qw = 0.0;
    double b2 = 0.0;
};

/// Q(W) = sum_{i=1}^{2d} f(W_i, min(alpha, beta)) and
/// B2 = Q(W) + D(A_alpha) + D(B_beta).
MajorizationBounds qw_b2_bound(const Basis& a, double alpha, const Basis& b, double beta);
MajorizationBounds qw_b2_bound(const MajorizationVector& mv, double alpha, double beta, int d);

/// Lowest eigenvalue of M_A + M_B = min over states of D_rho(A) + D_rho(B).
double min_pair_device_bound(const Povm& a, const Povm& b);

/// -log2 C for the d = 3 amplitude-damping pair on the Fourier MUB pair with
/// equal transition probability e on both measurements.
double ad_coles_closed_form(double e);

/// (1 - 1/sqrt(3)) H_bin(e): minimized pair device uncertainty of the same pair.
double ad_pair_device_closed_form(double e);

// Named bound values for one scenario. Keys follow krishna_A, krishna_B,
// minD_A, minD_B, minD_pair, coles_C, mu, B1, HW, QW, B2, D_WN; state-dependent
// entries (H_A, H_B, D_A, D_B, ...) appear only when a state was supplied.
struct BoundReport {
    std::map<std::string, double> values;
    std::map<std::string, std::string> metadata;
    std::vector<std::string> notes;

    /// Lower bounds that must not exceed H_A + H_B.
    static const std::vector<std::string>& lower_bound_keys();

    /// True when no state was given or every present lower bound is <= H_A + H_B + slack.
    bool consistent(double slack = 1e-9) const;
};

BoundReport bound_report(const Povm& a, const Povm& b, const DensityMatrix* rho = nullptr);

}  // namespace unsharp
