#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "unsharp/povm.hpp"

namespace unsharp {

inline constexpr double kCrossoverTolerance = 1e-4;

// Qubit pair of the angle sweep: X_eta measures along (sin t, 0, cos t),
// Z_zeta along z, both as white-noise POVMs.
struct ThetaPair {
    Basis basis_x;
    Basis basis_z;
    Povm x;
    Povm z;
};

ThetaPair theta_pair(double theta, double eta, double zeta);

struct ThetaRow {
    double theta = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double log_c = 0.0;
    double d_wn = 0.0;
    double hw = 0.0;
    double qw = 0.0;
};

ThetaRow theta_point(double theta, double eta, double zeta);

struct DampingRow {
    double e = 0.0;
    double log_c_numeric = 0.0;
    double log_c_closed = 0.0;
    double d_ad = 0.0;
};

/// Amplitude-damping pair on the d = 3 Fourier MUB pair, e_x = e_z = e.
std::pair<Povm, Povm> damping_pair(double e);

DampingRow damping_point(double e);

/// `steps` evenly spaced points on [start, stop], endpoints included.
std::vector<double> linear_grid(double start, double stop, int steps);

std::vector<ThetaRow> sweep_theta(double eta, double zeta, const std::vector<double>& grid);
std::vector<DampingRow> sweep_damping(const std::vector<double>& grid);

struct Crossover {
    double at = 0.0;
    bool upward = true;  // g goes from negative to positive with increasing x
};

/// Every strict sign change of g between adjacent grid points, refined by
/// bisection to `tolerance`. Grid points where g is exactly zero never
/// count as a change on their own.
std::vector<Crossover> find_crossovers(const std::function<double(double)>& g, const std::vector<double>& grid,
                                       double tolerance = kCrossoverTolerance);

/// Smallest x where g turns from <= 0 to > 0, refined by bisection.
std::optional<double> first_upcrossing(const std::function<double(double)>& g, const std::vector<double>& grid,
                                       double tolerance = kCrossoverTolerance);

}  // namespace unsharp
