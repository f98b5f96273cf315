#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "unsharp/bounds.hpp"
#include "unsharp/entropy.hpp"
#include "unsharp/random.hpp"

using namespace unsharp;

// Binary entropy of 3/4 evaluated independently: 2 - (3/4) log2 3.
static const double kH075 = 2.0 - 0.75 * std::log2(3.0);

TEST_CASE("outcome_probs") {
    const auto comp = projective_from_basis(computational_basis(2));
    const auto zero = DensityMatrix::pure(Ket::Unit(2, 0));
    const auto p = outcome_probs(zero, comp).probs;
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(0.0));

    const auto mixed = validate_density(ComplexMatrix::Identity(2, 2) / 2.0);
    const auto qubit = qubit_povm({0.7, {0.1, 0.2, 0.3}});
    const double t = qubit.effect(0).trace().real();
    const auto q = outcome_probs(mixed, qubit).probs;
    CHECK(q[0] == doctest::Approx(t / 2.0));
    CHECK(q[1] == doctest::Approx(1.0 - t / 2.0));

    const auto wn = outcome_probs(zero, white_noise_povm(computational_basis(2), 0.5)).probs;
    CHECK(wn[0] == doctest::Approx(0.75));
    CHECK(wn[1] == doctest::Approx(0.25));

    const auto qutrit = validate_density(ComplexMatrix::Identity(3, 3) / 3.0);
    CHECK_THROWS_AS(outcome_probs(qutrit, comp), Error);
}

TEST_CASE("shannon and binary entropy") {
    CHECK(shannon_entropy(OutcomeDistribution{{1.0, 0.0}}) == 0.0);
    CHECK(shannon_entropy(OutcomeDistribution{{0.5, 0.5}}) == doctest::Approx(1.0));
    CHECK(shannon_entropy(OutcomeDistribution{{0.75, 0.25}}) == doctest::Approx(0.811278).epsilon(1e-6));
    CHECK(shannon_entropy(OutcomeDistribution{{0.75, 0.25}}) == doctest::Approx(kH075).epsilon(1e-14));

    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.564) == doctest::Approx(0.98815).epsilon(1e-5));
    CHECK(binary_entropy(0.564) == doctest::Approx(oracle::binary_entropy(0.564)).epsilon(1e-14));
    CHECK_THROWS_AS(binary_entropy(1.5), Error);
    CHECK_THROWS_AS(binary_entropy(-0.1), Error);
}

TEST_CASE("device_uncertainty fixed examples") {
    Rng rng(RngSeed{29});
    SUBCASE("PVMs have zero device uncertainty") {
        for (int trial = 0; trial < 50; ++trial) {
            const int d = 2 + trial % 3;
            const auto pvm = projective_from_basis(random_basis(d, rng));
            CHECK(device_uncertainty(random_mixed_state(d, rng), pvm) < 1e-12);
        }
    }
    SUBCASE("white noise d=2 alpha=0.5 for any state") {
        const auto wn = white_noise_povm(random_basis(2, rng), 0.5);
        for (int trial = 0; trial < 20; ++trial) {
            CHECK(device_uncertainty(random_mixed_state(2, rng), wn) == doctest::Approx(kH075).epsilon(1e-12));
        }
    }
    SUBCASE("amplitude damping") {
        const auto [x, z] = mub_fourier_basis(3);
        for (double e : {0.0, 0.2, 0.5, 0.9, 1.0}) {
            const auto ad = amplitude_damping_povm(x, e);
            CHECK(device_uncertainty(DensityMatrix::pure(x[0]), ad) < 1e-12);
            for (int trial = 0; trial < 20; ++trial) {
                const auto rho = random_mixed_state(3, rng);
                const double s = (x[1].dot(rho.matrix() * x[1]) + x[2].dot(rho.matrix() * x[2])).real();
                CHECK(device_uncertainty(rho, ad) == doctest::Approx(s * oracle::binary_entropy(e)).epsilon(1e-12));
            }
        }
    }
    SUBCASE("dimension mismatch") {
        const auto pvm = projective_from_basis(computational_basis(2));
        CHECK_THROWS_AS(device_uncertainty(random_pure_state(3, rng), pvm), Error);
    }
}

TEST_CASE("device_uncertainty_qubit") {
    Rng rng(RngSeed{31});
    for (int trial = 0; trial < 20; ++trial) {
        const Ket psi = random_ket(2, rng);
        CHECK(device_uncertainty_qubit(psi, {1.0, {0.0, 0.0, 1.0}}) < 1e-15);
        CHECK(device_uncertainty_qubit(psi, {1.0, {0.0, 0.0, 0.0}}) == doctest::Approx(1.0));
    }
    for (double eta : {0.2, 0.6, 0.95}) {
        CHECK(device_uncertainty_qubit(Ket::Unit(2, 0), {1.0, {0.0, 0.0, eta}}) ==
              doctest::Approx(oracle::binary_entropy((1.0 + eta) / 2.0)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(device_uncertainty_qubit(Ket::Unit(2, 0), {0.2, {0.0, 0.0, 0.9}}), Error);
}

TEST_CASE("quantum_uncertainty") {
    Rng rng(RngSeed{37});
    const auto mixed = validate_density(ComplexMatrix::Identity(2, 2) / 2.0);
    const auto wn = white_noise_povm(computational_basis(2), 0.5);
    CHECK(shannon_entropy(outcome_probs(mixed, wn)) == doctest::Approx(1.0));
    CHECK(quantum_uncertainty(mixed, wn) == doctest::Approx(0.188722).epsilon(1e-6));
    CHECK(quantum_uncertainty(mixed, wn) == doctest::Approx(1.0 - kH075).epsilon(1e-12));

    for (int trial = 0; trial < 30; ++trial) {
        const int d = 2 + trial % 3;
        const auto rho = random_mixed_state(d, rng);
        const auto pvm = projective_from_basis(random_basis(d, rng));
        CHECK(quantum_uncertainty(rho, pvm) == doctest::Approx(shannon_entropy(outcome_probs(rho, pvm))).epsilon(1e-12));
        const auto trivial = make_povm({ComplexMatrix::Identity(d, d) * 0.2, ComplexMatrix::Identity(d, d) * 0.8});
        CHECK(std::abs(quantum_uncertainty(rho, trivial)) < 1e-12);
        const auto general = random_povm(d, 3, rng);
        const double q = quantum_uncertainty(rho, general);
        CHECK(q >= -1e-12);
        CHECK(q <= shannon_entropy(outcome_probs(rho, general)) + 1e-12);
    }
}

TEST_CASE("von_neumann_entropy") {
    Rng rng(RngSeed{41});
    CHECK(von_neumann_entropy(random_pure_state(3, rng)) < 1e-12);
    CHECK(von_neumann_entropy(validate_density(ComplexMatrix::Identity(4, 4) / 4.0)) == doctest::Approx(2.0));
}

TEST_CASE("f_white_noise") {
    for (double p : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
        CHECK(f_white_noise(p, 1.0, 3) == doctest::Approx(-oracle::xlog2x(p)).epsilon(1e-14));
        CHECK(std::abs(f_white_noise(p, 0.0, 3)) < 1e-15);
    }
    for (double alpha : {0.0, 0.3, 1.0}) {
        CHECK(f_white_noise(0.0, alpha, 2) == 0.0);
        CHECK(std::abs(f_white_noise(1.0, alpha, 2)) < 1e-15);
    }
    CHECK_THROWS_AS(f_white_noise(1.2, 0.5, 2), Error);
    CHECK_THROWS_AS(f_white_noise(0.5, 0.5, 1), Error);

    // sum_i f(p_i, alpha) = Q of the white-noise POVM, p_i from the sharp basis.
    Rng rng(RngSeed{43});
    for (int trial = 0; trial < 200; ++trial) {
        const double alpha = rng.uniform();
        const auto basis = random_basis(3, rng);
        const auto rho = random_mixed_state(3, rng);
        double total = 0.0;
        for (double p : outcome_probs(rho, projective_from_basis(basis)).probs) total += f_white_noise(p, alpha, 3);
        CHECK(std::abs(total - quantum_uncertainty(rho, white_noise_povm(basis, alpha))) < 1e-10);
    }
}

TEST_CASE("entropy properties on random POVMs") {
    Rng rng(RngSeed{47});
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 2 + trial % 3;
        const auto rho = trial % 2 ? random_pure_state(d, rng) : random_mixed_state(d, rng);
        const auto povm = random_povm(d, rng.uniform_int(2, d + 2), rng);
        const double dev = device_uncertainty(rho, povm);
        const double h = shannon_entropy(outcome_probs(rho, povm));
        CHECK(dev >= 0.0);
        CHECK(h >= dev - 1e-9);
        CHECK(h <= std::log2(static_cast<double>(povm.size())) + 1e-12);
    }
}

TEST_CASE("D-ii forward and sampled converse") {
    Rng rng(RngSeed{53});
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 3;
        const double l = rng.uniform();
        const auto trivial = make_povm({ComplexMatrix::Identity(d, d) * l, ComplexMatrix::Identity(d, d) * (1.0 - l)});
        const auto rho = random_mixed_state(d, rng);
        CHECK(std::abs(device_uncertainty(rho, trivial) - shannon_entropy(outcome_probs(rho, trivial))) < 1e-10);
    }
    const auto [x, z] = mub_fourier_basis(3);
    const std::vector<Povm> corpus{white_noise_povm(x, 0.5), amplitude_damping_povm(z, 0.3),
                                   qubit_povm({1.0, {0.0, 0.3, 0.4}}), random_povm(3, 4, rng)};
    for (const auto& povm : corpus) {
        double gap = 0.0;
        for (int s = 0; s < 500 && gap <= 1e-6; ++s) {
            const auto rho = random_pure_state(static_cast<int>(povm.dim()), rng);
            gap = std::max(gap, shannon_entropy(outcome_probs(rho, povm)) - device_uncertainty(rho, povm));
        }
        CHECK(gap > 1e-6);
    }
}

TEST_CASE("convex combination identities") {
    Rng rng(RngSeed{59});
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 3;
        const auto a = random_povm(d, 2 + trial % 3, rng);
        const auto b = random_povm(d, 2, rng);
        const double p = rng.uniform();
        const auto rho = random_mixed_state(d, rng);
        const auto mix = convex_combination(a, b, p);
        const double expected =
            p * device_uncertainty(rho, a) + (1.0 - p) * device_uncertainty(rho, b) + oracle::binary_entropy(p);
        CHECK(std::abs(device_uncertainty(rho, mix) - expected) < 1e-12);
        const double q_expected = p * quantum_uncertainty(rho, a) + (1.0 - p) * quantum_uncertainty(rho, b);
        CHECK(std::abs(quantum_uncertainty(rho, mix) - q_expected) < 1e-12);
    }
}

TEST_CASE("dual map identity") {
    Rng rng(RngSeed{61});
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 4;
        const double alpha = rng.uniform();
        const auto basis = random_basis(d, rng);
        const auto povm = white_noise_povm(basis, alpha);
        const Ket psi = random_ket(d, rng);
        const ComplexMatrix rho_alpha = alpha * projector(psi) + ComplexMatrix::Identity(d, d) * ((1.0 - alpha) / d);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(std::abs(basis[i].dot(rho_alpha * basis[i]).real() - psi.dot(povm.effect(i) * psi).real()) < 1e-12);
        }
    }
}
