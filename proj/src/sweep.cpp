#include "unsharp/sweep.hpp"

#include <cmath>

#include "unsharp/bounds.hpp"

namespace unsharp {

ThetaPair theta_pair(double theta, double eta, double zeta) {
    // Eigenbasis of sin(t) sigma_x + cos(t) sigma_z, + first.
    Ket plus(2), minus(2);
    plus << std::cos(theta / 2.0), std::sin(theta / 2.0);
    minus << std::sin(theta / 2.0), -std::cos(theta / 2.0);
    Basis bx{plus, minus};
    Basis bz = computational_basis(2);
    Povm x = white_noise_povm(bx, eta);
    Povm z = white_noise_povm(bz, zeta);
    return ThetaPair{std::move(bx), std::move(bz), std::move(x), std::move(z)};
}

ThetaRow theta_point(double theta, double eta, double zeta) {
    const auto pair = theta_pair(theta, eta, zeta);
    const auto mv = majorization_vector(pair.basis_x, pair.basis_z);
    const auto maj = qw_b2_bound(mv, eta, zeta, 2);
    ThetaRow row;
    row.theta = theta;
    row.b1 = b1_bound(pair.basis_x, eta, pair.basis_z, zeta);
    row.b2 = maj.b2;
    row.log_c = coles_bound(pair.x, pair.z);
    row.d_wn = device_uncertainty_white_noise(eta, 2) + device_uncertainty_white_noise(zeta, 2);
    row.hw = hw_bound(mv);
    row.qw = maj.qw;
    return row;
}

std::pair<Povm, Povm> damping_pair(double e) {
    const auto [x, z] = mub_fourier_basis(3);
    return {amplitude_damping_povm(x, e), amplitude_damping_povm(z, e)};
}

DampingRow damping_point(double e) {
    const auto [x, z] = damping_pair(e);
    DampingRow row;
    row.e = e;
    row.log_c_numeric = coles_bound(x, z);
    row.log_c_closed = ad_coles_closed_form(e);
    row.d_ad = min_pair_device_bound(x, z);
    return row;
}

std::vector<double> linear_grid(double start, double stop, int steps) {
    if (steps < 2) throw Error(ErrorCode::ConfigError, "grid needs at least 2 steps");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid[static_cast<std::size_t>(i)] = start + (stop - start) * static_cast<double>(i) / (steps - 1);
    }
    // Pin the last point so it is exactly `stop`.
    grid.back() = stop;
    return grid;
}

std::vector<ThetaRow> sweep_theta(double eta, double zeta, const std::vector<double>& grid) {
    std::vector<ThetaRow> rows;
    rows.reserve(grid.size());
    for (double t : grid) rows.push_back(theta_point(t, eta, zeta));
    return rows;
}

std::vector<DampingRow> sweep_damping(const std::vector<double>& grid) {
    std::vector<DampingRow> rows;
    rows.reserve(grid.size());
    for (double e : grid) rows.push_back(damping_point(e));
    return rows;
}

namespace {

// Shrinks [lo, hi] around the sign change of g; g(lo) and g(hi) differ in sign
// with g(hi) > 0 when `upward`.
double bisect(const std::function<double(double)>& g, double lo, double hi, bool upward, double tolerance) {
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        const bool positive = g(mid) > 0.0;
        if (positive == upward) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<Crossover> find_crossovers(const std::function<double(double)>& g, const std::vector<double>& grid,
                                       double tolerance) {
    std::vector<Crossover> out;
    if (grid.size() < 2) return out;
    std::vector<double> values;
    values.reserve(grid.size());
    for (double x : grid) values.push_back(g(x));
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double a = values[i];
        const double b = values[i + 1];
        if (a < 0.0 && b > 0.0) {
            out.push_back({bisect(g, grid[i], grid[i + 1], true, tolerance), true});
        } else if (a > 0.0 && b < 0.0) {
            out.push_back({bisect(g, grid[i], grid[i + 1], false, tolerance), false});
        }
    }
    return out;
}

std::optional<double> first_upcrossing(const std::function<double(double)>& g, const std::vector<double>& grid,
                                       double tolerance) {
    if (grid.size() < 2) return std::nullopt;
    double previous = g(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double current = g(grid[i]);
        if (previous <= 0.0 && current > 0.0) return bisect(g, grid[i - 1], grid[i], true, tolerance);
        previous = current;
    }
    return std::nullopt;
}

}  // namespace unsharp
