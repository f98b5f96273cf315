#include <cmath>
#include <numbers>

#include "doctest.h"
#include "unsharp/povm.hpp"
#include "unsharp/random.hpp"

using namespace unsharp;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
}

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

void check_revalidates(const Povm& p) {
    CHECK_NOTHROW(make_povm(p.effects()));
    CHECK(p.completeness_residual() < 1e-12);
}

}  // namespace

TEST_CASE("make_povm") {
    const auto p0 = projector(Ket::Unit(2, 0));
    const auto p1 = projector(Ket::Unit(2, 1));
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);

    CHECK(make_povm({p0, p1}).size() == 2);
    CHECK(make_povm({id / 2.0, id / 2.0}).spectrum(0).eigenvalues[0] == doctest::Approx(0.5));

    try {
        make_povm({id, id});
        FAIL("expected CompletenessViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CompletenessViolated);
        CHECK(e.magnitude().value() == doctest::Approx(1.0));
    }

    ComplexMatrix neg(2, 2);
    neg << -0.1, 0.0, 0.0, 0.0;
    ComplexMatrix rest = id - neg;
    try {
        make_povm({rest, neg});
        FAIL("expected an error");
    } catch (const Error& e) {
        // rest has eigenvalue 1.1, checked first.
        CHECK(e.code() == ErrorCode::EigenvalueAboveOne);
        CHECK(e.index().value() == 0);
    }
    try {
        make_povm({neg, rest});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPositive);
        CHECK(e.index().value() == 0);
        CHECK(e.magnitude().value() == doctest::Approx(-0.1));
    }
    CHECK(code_of([&] { make_povm({p0, ComplexMatrix::Identity(3, 3)}); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([] { make_povm({}); }) == ErrorCode::WrongDimension);
}

TEST_CASE("projective_from_basis") {
    const auto comp = projective_from_basis(computational_basis(2));
    CHECK(max_diff(comp.effect(0), projector(Ket::Unit(2, 0))) < 1e-15);
    CHECK(max_diff(comp.effect(1), projector(Ket::Unit(2, 1))) < 1e-15);

    const auto [x, z] = mub_fourier_basis(3);
    const auto fourier = projective_from_basis(z);
    CHECK(fourier.size() == 3);
    check_revalidates(fourier);
    for (const auto& spec : fourier.spectra()) {
        CHECK(spec.eigenvalues[0] == doctest::Approx(1.0));
        CHECK(std::abs(spec.eigenvalues[1]) < 1e-12);
    }

    Ket tilted(2);
    tilted << std::cos(0.3), std::sin(0.3);
    CHECK(code_of([&] { projective_from_basis({Ket::Unit(2, 0), tilted}); }) == ErrorCode::NotOrthonormal);
}

TEST_CASE("qubit_povm") {
    SUBCASE("sharp z measurement") {
        QubitPovmParams params{1.0, {0.0, 0.0, 1.0}};
        const auto p = qubit_povm(params);
        CHECK(max_diff(p.effect(0), projector(Ket::Unit(2, 0))) < 1e-15);
        CHECK(max_diff(p.effect(1), projector(Ket::Unit(2, 1))) < 1e-15);
        CHECK(params.p_up_plus() == doctest::Approx(1.0));
    }
    SUBCASE("zero Bloch vector") {
        const auto p = qubit_povm({1.0, {0.0, 0.0, 0.0}});
        CHECK(max_diff(p.effect(0), ComplexMatrix::Identity(2, 2) / 2.0) < 1e-15);
        CHECK(max_diff(p.effect(1), ComplexMatrix::Identity(2, 2) / 2.0) < 1e-15);
    }
    SUBCASE("unsharp z with eta") {
        for (double eta : {0.1, 0.5, 0.9}) {
            const auto p = qubit_povm({1.0, {0.0, 0.0, eta}});
            CHECK(p.spectrum(0).eigenvalues[0] == doctest::Approx((1.0 + eta) / 2.0));
            CHECK(p.spectrum(0).eigenvalues[1] == doctest::Approx((1.0 - eta) / 2.0));
            const ComplexMatrix expected = (ComplexMatrix::Identity(2, 2) + eta * pauli_z()) / 2.0;
            CHECK(max_diff(p.effect(0), expected) < 1e-15);
        }
    }
    SUBCASE("eigenvectors are the Bloch eigenstates") {
        const std::array<double, 3> a{0.3, -0.2, 0.4};
        const auto p = qubit_povm({0.9, a});
        const auto [plus, minus] = bloch_eigenstates(a);
        CHECK(overlap(p.spectrum(0).eigenvectors[0], plus) == doctest::Approx(1.0));
        CHECK(overlap(p.spectrum(0).eigenvectors[1], minus) == doctest::Approx(1.0));
    }
    SUBCASE("conditional probabilities") {
        Rng rng(RngSeed{3});
        for (int trial = 0; trial < 200; ++trial) {
            const double len = rng.uniform();
            const Ket dir = random_ket(2, rng);
            const double nx = 2.0 * (std::conj(dir(0)) * dir(1)).real();
            const double ny = 2.0 * (std::conj(dir(0)) * dir(1)).imag();
            const double nz = std::norm(dir(0)) - std::norm(dir(1));
            QubitPovmParams params{rng.uniform(len, 2.0 - len), {len * nx, len * ny, len * nz}};
            const auto p = qubit_povm(params);
            const auto [plus, minus] = bloch_eigenstates(params.a_vec);
            const double up_plus = plus.dot(p.effect(0) * plus).real();
            const double down_plus = plus.dot(p.effect(1) * plus).real();
            const double up_minus = minus.dot(p.effect(0) * minus).real();
            CHECK(std::abs(up_plus + down_plus - 1.0) < 1e-12);
            CHECK(std::abs(up_plus - (params.a0 + len) / 2.0) < 1e-12);
            CHECK(std::abs(up_minus - (params.a0 - len) / 2.0) < 1e-12);
        }
    }
    SUBCASE("out of range") {
        CHECK(code_of([] { qubit_povm({0.5, {0.0, 0.0, 0.8}}); }) == ErrorCode::OutOfRange);
        CHECK(code_of([] { qubit_povm({1.5, {0.0, 0.0, 0.8}}); }) == ErrorCode::OutOfRange);
    }
}

TEST_CASE("white_noise_povm") {
    const auto basis = computational_basis(2);
    const auto sharp = white_noise_povm(basis, 1.0);
    const auto proj = projective_from_basis(basis);
    for (std::size_t i = 0; i < 2; ++i) CHECK(max_diff(sharp.effect(i), proj.effect(i)) < 1e-15);

    const auto flat = white_noise_povm(computational_basis(3), 0.0);
    for (const auto& e : flat.effects()) CHECK(max_diff(e, ComplexMatrix::Identity(3, 3) / 3.0) < 1e-15);

    const auto half = white_noise_povm(basis, 0.5);
    for (const auto& spec : half.spectra()) {
        CHECK(spec.eigenvalues[0] == doctest::Approx(0.75));
        CHECK(spec.eigenvalues[1] == doctest::Approx(0.25));
    }

    Rng rng(RngSeed{17});
    for (int d = 2; d <= 6; ++d) {
        for (int step = 0; step <= 10; ++step) {
            const double alpha = step / 10.0;
            const double noise = (1.0 - alpha) / d;
            const auto p = white_noise_povm(random_basis(d, rng), alpha);
            check_revalidates(p);
            for (const auto& spec : p.spectra()) {
                CHECK(std::abs(spec.eigenvalues[0] - (alpha + noise)) < 1e-10);
                for (std::size_t k = 1; k < spec.size(); ++k) CHECK(std::abs(spec.eigenvalues[k] - noise) < 1e-10);
            }
        }
    }

    CHECK(code_of([&] { white_noise_povm(basis, 1.2); }) == ErrorCode::OutOfRange);
    CHECK(code_of([&] { white_noise_povm(basis, -0.1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("amplitude_damping_povm") {
    const auto [x, z] = mub_fourier_basis(3);
    const auto sharp = amplitude_damping_povm(x, 0.0);
    const auto proj = projective_from_basis(x);
    for (std::size_t i = 0; i < 3; ++i) CHECK(max_diff(sharp.effect(i), proj.effect(i)) < 1e-15);

    const auto full = amplitude_damping_povm(z, 1.0);
    CHECK(max_diff(full.effect(0), ComplexMatrix::Identity(3, 3)) < 1e-12);
    CHECK(full.effect(1).cwiseAbs().maxCoeff() == 0.0);
    CHECK(full.effect(2).cwiseAbs().maxCoeff() == 0.0);

    const auto half = amplitude_damping_povm(x, 0.5);
    CHECK(half.spectrum(0).eigenvalues[0] == doctest::Approx(1.0));
    CHECK(half.spectrum(0).eigenvalues[1] == doctest::Approx(0.5));
    CHECK(half.spectrum(0).eigenvalues[2] == doctest::Approx(0.5));

    for (int i = 0; i <= 100; ++i) {
        const auto p = amplitude_damping_povm(z, i / 100.0);
        CHECK(p.completeness_residual() < 1e-12);
    }

    CHECK(code_of([] { amplitude_damping_povm(computational_basis(2), 0.5); }) == ErrorCode::WrongDimension);
    CHECK(code_of([&] { amplitude_damping_povm(x, 1.5); }) == ErrorCode::OutOfRange);
}

TEST_CASE("convex_combination") {
    const auto comp = projective_from_basis(computational_basis(2));
    const auto [x, z] = mub_fourier_basis(2);
    const auto fourier = projective_from_basis(z);

    const auto first = convex_combination(comp, fourier, 1.0);
    CHECK(first.size() == 4);
    CHECK(first.effect(2).cwiseAbs().maxCoeff() == 0.0);
    CHECK(first.effect(3).cwiseAbs().maxCoeff() == 0.0);

    const auto doubled = convex_combination(comp, comp, 0.5);
    CHECK(doubled.size() == 4);
    check_revalidates(doubled);

    const auto mixed = convex_combination(comp, fourier, 0.3);
    CHECK(mixed.spectrum(0).eigenvalues[0] == doctest::Approx(0.3));
    CHECK(mixed.spectrum(2).eigenvalues[0] == doctest::Approx(0.7));
    CHECK(std::abs(mixed.spectrum(2).eigenvalues[1]) < 1e-12);

    const auto qutrit = projective_from_basis(computational_basis(3));
    CHECK(code_of([&] { convex_combination(comp, qutrit, 0.5); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { convex_combination(comp, fourier, 1.1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("mub_fourier_basis") {
    for (int d : {2, 3, 4, 5}) {
        const auto [x, z] = mub_fourier_basis(d);
        require_orthonormal(x);
        require_orthonormal(z);
        for (const auto& a : x)
            for (const auto& b : z) CHECK(overlap(a, b) == doctest::Approx(1.0 / d).epsilon(1e-12));
    }
    const auto [x3, z3] = mub_fourier_basis(3);
    CHECK(std::abs(x3[0].dot(z3[0])) == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("detect_white_noise") {
    Rng rng(RngSeed{23});
    const auto basis = random_basis(3, rng);
    const auto form = detect_white_noise(white_noise_povm(basis, 0.4));
    REQUIRE(form.has_value());
    CHECK(form->alpha == doctest::Approx(0.4));
    for (std::size_t i = 0; i < 3; ++i) CHECK(overlap(form->basis[i], basis[i]) == doctest::Approx(1.0));

    CHECK(detect_white_noise(projective_from_basis(basis)).has_value());
    CHECK_FALSE(detect_white_noise(white_noise_povm(basis, 0.0)).has_value());
    CHECK_FALSE(detect_white_noise(amplitude_damping_povm(basis, 0.3)).has_value());
    CHECK_FALSE(detect_white_noise(random_povm(3, 3, rng)).has_value());
}
