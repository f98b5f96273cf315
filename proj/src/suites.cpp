#include "unsharp/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "unsharp/bounds.hpp"
#include "unsharp/entropy.hpp"
#include "unsharp/sweep.hpp"

namespace unsharp {

namespace {

class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    // Expects lhs >= rhs - tolerance.
    void at_least(double lhs, double rhs, double tolerance, const char* label) {
        ++result_.checks;
        const double margin = lhs - rhs;
        if (!seen_slack_ || margin < result_.worst_slack) {
            result_.worst_slack = margin;
            seen_slack_ = true;
        }
        if (!(margin >= -tolerance)) fail(label, lhs, rhs);
    }

    void close(double a, double b, double tolerance, const char* label) {
        ++result_.checks;
        const double dev = std::abs(a - b);
        result_.max_deviation = std::max(result_.max_deviation, dev);
        if (!(dev <= tolerance)) fail(label, a, b);
    }

    void expect(bool ok, const char* label) {
        ++result_.checks;
        if (!ok) fail(label, 0.0, 0.0);
    }

    void trial() { ++result_.trials; }
    SuiteResult finish() && { return std::move(result_); }

private:
    void fail(const char* label, double a, double b) {
        ++result_.violations;
        if (result_.failures.size() < 8) {
            std::ostringstream os;
            os.precision(17);
            os << label << ": " << a << " vs " << b;
            result_.failures.push_back(os.str());
        }
    }

    SuiteResult result_;
    bool seen_slack_ = false;
};

DensityMatrix random_state(int d, Rng& rng) {
    return rng.uniform() < 0.5 ? random_pure_state(d, rng) : random_mixed_state(d, rng);
}

double entropy_of(const DensityMatrix& rho, const Povm& a) {
    return shannon_entropy(outcome_probs(rho, a));
}

// H >= D >= min_rho D >= -log max ||A_i||.
SuiteResult chain_suite(long trials, RngSeed seed) {
    Tally t("chain");
    std::uint64_t index = 0;
    for (int d : {2, 3, 4}) {
        for (long k = 0; k < trials; ++k) {
            Rng rng = Rng::for_trial(seed, index++);
            const auto rho = random_state(d, rng);
            const auto povm = random_povm(d, rng.uniform_int(2, d + 2), rng);
            const double entropy = entropy_of(rho, povm);
            const double dev = device_uncertainty(rho, povm);
            const double min_dev = min_device_uncertainty(povm);
            const double krishna = krishna_bound(povm);
            t.at_least(entropy, dev, 1e-9, "H >= D");
            t.at_least(dev, min_dev, 1e-9, "D >= minD");
            t.at_least(min_dev, krishna, 1e-9, "minD >= krishna");
            t.at_least(dev, 0.0, 1e-9, "D >= 0");
            t.trial();
        }
    }
    return std::move(t).finish();
}

// p^A (+) p^B is majorized by {1} (+) W, and H_A + H_B >= H(W).
SuiteResult majorization_suite(long trials, RngSeed seed) {
    Tally t("majorization");
    std::uint64_t index = 0;
    for (int d : {2, 3}) {
        for (long k = 0; k < trials; ++k) {
            Rng rng = Rng::for_trial(seed, index++);
            const auto rho = random_pure_state(d, rng);
            const auto ba = random_basis(d, rng);
            const auto bb = random_basis(d, rng);
            const auto mv = majorization_vector(ba, bb);
            const auto pa = outcome_probs(rho, projective_from_basis(ba)).probs;
            const auto pb = outcome_probs(rho, projective_from_basis(bb)).probs;

            std::vector<double> left = pa;
            left.insert(left.end(), pb.begin(), pb.end());
            std::vector<double> right{1.0};
            right.insert(right.end(), mv.weights.begin(), mv.weights.end());
            std::sort(left.rbegin(), left.rend());
            std::sort(right.rbegin(), right.rend());
            t.expect(left.size() == right.size(), "direct-sum lengths agree");

            double sum_left = 0.0;
            double sum_right = 0.0;
            for (std::size_t i = 0; i < left.size(); ++i) {
                sum_left += left[i];
                sum_right += right[i];
                if (i + 1 < left.size()) t.at_least(sum_right, sum_left, 1e-9, "partial sum");
            }
            t.close(sum_left, sum_right, 1e-9, "direct-sum totals");
            t.at_least(shannon_entropy(pa) + shannon_entropy(pb), hw_bound(mv), 1e-9, "H_A + H_B >= H(W)");
            t.trial();
        }
    }
    return std::move(t).finish();
}

// D(pA + (1-p)B) = p D(A) + (1-p) D(B) + H_bin(p); Q is invariant.
SuiteResult convex_suite(long trials, RngSeed seed) {
    Tally t("convex");
    for (long k = 0; k < trials; ++k) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(k));
        const int d = rng.uniform_int(2, 4);
        const auto a = random_povm(d, rng.uniform_int(2, d + 1), rng);
        const auto b = random_povm(d, rng.uniform_int(2, d + 1), rng);
        const double p = rng.uniform();
        const auto rho = random_state(d, rng);
        const auto mix = convex_combination(a, b, p);
        const double expected =
            p * device_uncertainty(rho, a) + (1.0 - p) * device_uncertainty(rho, b) + binary_entropy(p);
        t.close(device_uncertainty(rho, mix), expected, 1e-12, "D convex identity");
        const double q_expected = p * quantum_uncertainty(rho, a) + (1.0 - p) * quantum_uncertainty(rho, b);
        t.close(quantum_uncertainty(rho, mix), q_expected, 1e-12, "Q invariance");
        t.trial();
    }
    return std::move(t).finish();
}

// State independence and closed form of D for white-noise measurements.
SuiteResult white_noise_suite(long trials, RngSeed seed) {
    Tally t("white-noise");
    std::uint64_t index = 0;
    for (int d = 2; d <= 6; ++d) {
        for (int step = 0; step <= 10; ++step) {
            const double alpha = step / 10.0;
            Rng rng = Rng::for_trial(seed, index++);
            const auto povm = white_noise_povm(random_basis(d, rng), alpha);
            const double closed = device_uncertainty_white_noise(alpha, d);
            double lo = std::numeric_limits<double>::infinity();
            double hi = -lo;
            for (long k = 0; k < trials; ++k) {
                const double value = device_uncertainty(random_state(d, rng), povm);
                lo = std::min(lo, value);
                hi = std::max(hi, value);
                t.close(value, closed, 1e-10, "D = closed form");
            }
            t.close(hi, lo, 1e-10, "state independence");
            t.close(min_device_uncertainty(povm), closed, 1e-10, "min_rho D = closed form");
            t.trial();
        }
    }
    // Strictly decreasing in alpha.
    for (int d = 2; d <= 6; ++d) {
        for (int step = 0; step < 10; ++step) {
            t.at_least(device_uncertainty_white_noise(step / 10.0, d),
                       device_uncertainty_white_noise((step + 1) / 10.0, d), 0.0, "D_WN decreasing");
        }
    }
    return std::move(t).finish();
}

// Entropy sums dominate B1, B2 and -log C on white-noise pairs.
SuiteResult validity_suite(long trials, RngSeed seed) {
    Tally t("validity");
    for (long k = 0; k < trials; ++k) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(k));
        const double alpha = rng.uniform();
        const double beta = rng.uniform();
        Basis ba, bb;
        Povm a = [&] {
            if (k % 2 == 0) {
                const auto pair = theta_pair(rng.uniform(0.0, std::acos(-1.0)), alpha, beta);
                ba = pair.basis_x;
                bb = pair.basis_z;
                return pair.x;
            }
            ba = random_basis(3, rng);
            bb = random_basis(3, rng);
            return white_noise_povm(ba, alpha);
        }();
        const Povm b = white_noise_povm(bb, beta);
        const int d = static_cast<int>(ba.size());
        const auto rho = random_pure_state(d, rng);
        const double sum = entropy_of(rho, a) + entropy_of(rho, b);
        const double b1 = b1_bound(ba, alpha, bb, beta);
        const auto mv = majorization_vector(ba, bb);
        const auto maj = qw_b2_bound(mv, alpha, beta, d);
        const double coles = coles_bound(a, b);
        t.at_least(sum, b1, 1e-9, "H_A + H_B >= B1");
        t.at_least(sum, maj.b2, 1e-9, "H_A + H_B >= B2");
        t.at_least(sum, coles, 1e-9, "H_A + H_B >= -log C");
        t.at_least(maj.b2, hw_bound(mv), 1e-9, "B2 >= H(W)");

        // Reduced memory-assisted relation for the sharp pair on a mixed state.
        const auto mixed = random_mixed_state(d, rng);
        const double sharp_sum = entropy_of(mixed, projective_from_basis(ba)) +
                                 entropy_of(mixed, projective_from_basis(bb));
        t.at_least(sharp_sum, berta_reduced_bound(ba, bb, mixed), 1e-9, "H_A + H_B >= MU + S(rho)");
        t.trial();
    }
    return std::move(t).finish();
}

// -log C is a valid bound for general POVM pairs and reduces to MU for bases.
SuiteResult coles_suite(long trials, RngSeed seed) {
    Tally t("coles");
    for (long k = 0; k < trials; ++k) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(k));
        const int d = rng.uniform_int(2, 4);
        const auto a = random_povm(d, rng.uniform_int(2, d + 2), rng);
        const auto b = random_povm(d, rng.uniform_int(2, d + 2), rng);
        const auto rho = random_state(d, rng);
        t.at_least(entropy_of(rho, a) + entropy_of(rho, b), coles_bound(a, b), 1e-9, "H_A + H_B >= -log C");

        const auto ba = random_basis(d, rng);
        const auto bb = random_basis(d, rng);
        t.close(coles_bound(projective_from_basis(ba), projective_from_basis(bb)), mu_bound(ba, bb), 1e-9,
                "-log C = MU for PVMs");
        t.trial();
    }
    return std::move(t).finish();
}

// Eigenvalue minimum of D_A + D_B against random-state sampling.
SuiteResult min_pair_suite(long trials, RngSeed seed) {
    Tally t("min-pair");
    std::uint64_t index = 0;
    for (int d : {2, 3}) {
        for (long k = 0; k < trials; ++k) {
            Rng rng = Rng::for_trial(seed, index++);
            const auto a = random_povm(d, rng.uniform_int(2, d + 1), rng);
            const auto b = random_povm(d, rng.uniform_int(2, d + 1), rng);
            const double floor = min_pair_device_bound(a, b);
            const ComplexMatrix m = device_operator(a) + device_operator(b);
            const auto objective = [&](const DensityMatrix& rho) { return (rho.matrix() * m).trace().real(); };
            // Dense sampling only for the first few pairs; it dominates the runtime.
            const int samples = k < 3 ? (d == 2 ? 20000 : 200000) : 200;
            const double sampled = sampled_min(objective, d, samples, rng);
            t.at_least(sampled, floor, 1e-9, "sampled min >= eigenvalue min");
            if (k < 3) t.at_least(floor + 0.01, sampled, 0.0, "dense sampling within 0.01 bits");
            const auto rho = random_state(d, rng);
            t.at_least(device_uncertainty(rho, a) + device_uncertainty(rho, b), floor, 1e-9, "D_A + D_B >= minD_pair");
            t.trial();
        }
    }
    return std::move(t).finish();
}

// Dual-map identity, S(rho_alpha) = D(A_alpha), and sum_i f(p_i) = Q.
SuiteResult dual_map_suite(long trials, RngSeed seed) {
    Tally t("dual-map");
    for (long k = 0; k < trials; ++k) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(k));
        const int d = rng.uniform_int(2, 5);
        const double alpha = rng.uniform();
        const auto basis = random_basis(d, rng);
        const auto povm = white_noise_povm(basis, alpha);
        const Ket psi = random_ket(d, rng);
        const ComplexMatrix noisy = alpha * projector(psi) +
                                    ComplexMatrix::Identity(d, d) * ((1.0 - alpha) / static_cast<double>(d));
        const auto rho_alpha = validate_density(noisy);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const double lhs = basis[i].dot(noisy * basis[i]).real();
            const double rhs = psi.dot(povm.effect(i) * psi).real();
            t.close(lhs, rhs, 1e-12, "dual map");
        }
        t.close(von_neumann_entropy(rho_alpha), device_uncertainty_white_noise(alpha, d), 1e-10, "S(rho_alpha) = D");

        const auto rho = random_state(3, rng);
        const auto basis3 = random_basis(3, rng);
        const auto povm3 = white_noise_povm(basis3, alpha);
        const auto sharp = outcome_probs(rho, projective_from_basis(basis3)).probs;
        double total = 0.0;
        for (double p : sharp) total += f_white_noise(p, alpha, 3);
        t.close(total, quantum_uncertainty(rho, povm3), 1e-10, "sum f = Q");
        t.trial();
    }
    return std::move(t).finish();
}

// Concavity in p and monotonicity in alpha of f, on a grid.
SuiteResult f_shape_suite(long trials, RngSeed) {
    Tally t("f-shape");
    const int n = static_cast<int>(std::clamp<long>(trials, 10, 200));
    for (int d : {2, 3, 4}) {
        for (int ia = 0; ia <= n; ++ia) {
            const double alpha = static_cast<double>(ia) / n;
            t.close(f_white_noise(0.0, alpha, d), 0.0, 1e-15, "f(0) = 0");
            t.close(f_white_noise(1.0, alpha, d), 0.0, 1e-15, "f(1) = 0");
            for (int ip = 0; ip <= n; ++ip) {
                const double p = static_cast<double>(ip) / n;
                for (int iq = ip + 2; iq <= n; iq += 3) {
                    const double q = static_cast<double>(iq) / n;
                    const double mid = f_white_noise((p + q) / 2.0, alpha, d);
                    const double chord = (f_white_noise(p, alpha, d) + f_white_noise(q, alpha, d)) / 2.0;
                    t.at_least(mid, chord, 1e-12, "f concave in p");
                }
                if (ia > 0) {
                    const double lower = static_cast<double>(ia - 1) / n;
                    t.at_least(f_white_noise(p, alpha, d), f_white_noise(p, lower, d), 1e-12, "f increasing in alpha");
                }
            }
            t.trial();
        }
    }
    return std::move(t).finish();
}

// D is unchanged when a degenerate eigenspace is given a different basis.
SuiteResult degeneracy_suite(long trials, RngSeed seed) {
    Tally t("degeneracy");
    for (long k = 0; k < trials; ++k) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(k));
        const int d = rng.uniform_int(3, 5);
        const auto povm = k % 2 == 0 || d != 3 ? white_noise_povm(random_basis(d, rng), rng.uniform())
                                               : amplitude_damping_povm(random_basis(3, rng), rng.uniform());
        std::vector<SpectralDecomposition> rotated = povm.spectra();
        for (auto& spec : rotated) {
            // Group eigenvalues within 1e-9 and rotate each group by a random unitary.
            std::size_t start = 0;
            while (start < spec.size()) {
                std::size_t end = start + 1;
                while (end < spec.size() && std::abs(spec.eigenvalues[end] - spec.eigenvalues[start]) < 1e-9) ++end;
                const int m = static_cast<int>(end - start);
                if (m > 1) {
                    const auto u = random_basis(m, rng);
                    std::vector<Ket> mixed(static_cast<std::size_t>(m), Ket::Zero(d));
                    for (int r = 0; r < m; ++r) {
                        for (int c = 0; c < m; ++c) {
                            mixed[static_cast<std::size_t>(r)] += u[static_cast<std::size_t>(r)](c) *
                                                                  spec.eigenvectors[start + static_cast<std::size_t>(c)];
                        }
                    }
                    for (int r = 0; r < m; ++r) spec.eigenvectors[start + static_cast<std::size_t>(r)] = mixed[static_cast<std::size_t>(r)];
                }
                start = end;
            }
        }
        for (std::size_t i = 0; i < rotated.size(); ++i) {
            t.close((rotated[i].reconstruct() - povm.effect(i)).cwiseAbs().maxCoeff(), 0.0, tol::reconstruction,
                    "rotated decomposition reconstructs effect");
        }
        const auto rho = random_state(d, rng);
        t.close(device_uncertainty(rho, std::span<const SpectralDecomposition>(rotated)), device_uncertainty(rho, povm),
                1e-10, "D independent of degenerate basis");
        t.trial();
    }
    return std::move(t).finish();
}

// Closed-form qubit device uncertainty and the trivial-POVM properties.
SuiteResult qubit_suite(long trials, RngSeed seed) {
    Tally t("qubit");
    for (long k = 0; k < trials; ++k) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(k));
        const double len = rng.uniform();
        const Ket dir = random_ket(2, rng);
        // Bloch direction of a random pure state.
        const Complex c0 = dir(0), c1 = dir(1);
        const double nx = 2.0 * (std::conj(c0) * c1).real();
        const double ny = 2.0 * (std::conj(c0) * c1).imag();
        const double nz = std::norm(c0) - std::norm(c1);
        QubitPovmParams params;
        params.a_vec = {len * nx, len * ny, len * nz};
        params.a0 = rng.uniform(len, 2.0 - len);
        const Ket psi = random_ket(2, rng);
        const auto povm = qubit_povm(params);
        const auto rho = DensityMatrix::pure(psi);
        t.close(device_uncertainty_qubit(psi, params), device_uncertainty(rho, povm), 1e-12, "qubit closed form");
        t.close(povm.spectrum(0).eigenvalues.front(), params.p_up_plus(), 1e-12, "p(up|+)");
        t.close(povm.spectrum(0).eigenvalues.back(), params.p_up_minus(), 1e-12, "p(up|-)");
        t.close(min_device_uncertainty(povm),
                std::min(binary_entropy(clamp_unit(params.p_up_plus())), binary_entropy(clamp_unit(params.p_up_minus()))),
                1e-10, "min D = min H_bin");

        // Effects lambda_i I: D = H, Q = 0 for every state.
        const int d = rng.uniform_int(2, 4);
        const int n = rng.uniform_int(2, 4);
        std::vector<double> lambdas(static_cast<std::size_t>(n));
        for (auto& l : lambdas) l = rng.uniform(0.05, 1.0);
        const double sum = std::accumulate(lambdas.begin(), lambdas.end(), 0.0);
        std::vector<ComplexMatrix> effects;
        for (double l : lambdas) effects.push_back(ComplexMatrix::Identity(d, d) * (l / sum));
        const auto trivial = make_povm(std::move(effects));
        const auto state = random_state(d, rng);
        t.close(device_uncertainty(state, trivial), entropy_of(state, trivial), 1e-10, "D = H for lambda I");
        t.close(quantum_uncertainty(state, trivial), 0.0, 1e-10, "Q = 0 for lambda I");

        // Converse: a POVM that is not lambda I admits a state with D < H.
        const auto general = random_povm(d, 2, rng);
        double best_gap = 0.0;
        for (int s = 0; s < 200 && best_gap <= 1e-6; ++s) {
            const auto probe = random_pure_state(d, rng);
            best_gap = std::max(best_gap, entropy_of(probe, general) - device_uncertainty(probe, general));
        }
        t.at_least(best_gap, 1e-6, 0.0, "some state has D < H");

        // PVMs: D = 0 and Q = H.
        const auto pvm = projective_from_basis(random_basis(d, rng));
        t.close(device_uncertainty(state, pvm), 0.0, 1e-12, "D = 0 for PVM");
        t.close(quantum_uncertainty(state, pvm), entropy_of(state, pvm), 1e-12, "Q = H for PVM");
        t.trial();
    }
    return std::move(t).finish();
}

using SuiteFn = std::function<SuiteResult(long, RngSeed)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> suites{
        {"chain", chain_suite},           {"majorization", majorization_suite},
        {"convex", convex_suite},         {"white-noise", white_noise_suite},
        {"validity", validity_suite},     {"coles", coles_suite},
        {"min-pair", min_pair_suite},     {"dual-map", dual_map_suite},
        {"f-shape", f_shape_suite},       {"degeneracy", degeneracy_suite},
        {"qubit", qubit_suite},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, long trials, RngSeed seed) {
    if (trials < 1) throw Error(ErrorCode::ConfigError, "trials must be at least 1");
    const auto& suites = registry();
    const auto it = suites.find(name);
    if (it == suites.end()) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
    return it->second(trials, seed);
}

}  // namespace unsharp
