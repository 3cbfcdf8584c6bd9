#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "truncbose/states.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace truncbose;
using states::Complex;
using states::StateVector;

namespace {

double norm2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& z : v)
        s += std::norm(z);
    return std::sqrt(s);
}

// Test-only oracle: exp(A) e0 by direct Taylor summation. Only valid for
// generators with modest norm, which is all the small cases used below.
std::vector<Complex> taylor_exp_e0(Dim dim, Complex zeta) {
    const std::size_t n = dim.size();
    const Matrix raise2 = [&] {
        const Matrix r = build_raising(dim).entries;
        return r * r;
    }();
    const Matrix lower2 = [&] {
        const Matrix l = build_lowering(dim).entries;
        return l * l;
    }();
    std::vector<Complex> term(n), sum(n);
    term[0] = 1.0;
    sum[0] = 1.0;
    for (int k = 1; k <= 300; ++k) {
        std::vector<Complex> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const Complex a = -0.5 * zeta * raise2(i, j) + 0.5 * std::conj(zeta) * lower2(i, j);
                if (a != Complex{})
                    acc += a * term[j];
            }
            next[i] = acc / static_cast<double>(k);
        }
        term = std::move(next);
        double mag = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sum[i] += term[i];
            mag += std::norm(term[i]);
        }
        if (std::sqrt(mag) < 1e-18)
            break;
    }
    return sum;
}

} // namespace

TEST_CASE("number state is a unit basis vector") {
    const StateVector state = states::number_state(Dim(4), 0);
    CHECK(state.amplitudes[0] == Complex{1.0});
    CHECK(state.amplitudes[1] == Complex{0.0});
    CHECK(norm2(state.amplitudes) == 1.0);
    CHECK(state.kind == states::StateKind::Number);

    CHECK_THROWS_AS(states::number_state(Dim(4), 4), std::invalid_argument);
    CHECK_THROWS_AS(states::number_state(Dim(4), -1), std::invalid_argument);
}

TEST_CASE("number state expectations are exact") {
    CHECK(states::expectation(states::number_state(Dim(4), 2), build_number(Dim(4))).real() ==
          2.0);
    CHECK(states::expectation(states::number_state(Dim(8), 3), build_number(Dim(8))).real() ==
          3.0);
    CHECK(states::expectation(states::number_state(Dim(4), 1), build_position(Dim(4))) ==
          Complex{0.0});
    CHECK(states::expectation(states::number_state(Dim(4), 1), build_momentum_like(Dim(4))) ==
          Complex{0.0});
}

TEST_CASE("coherent state basics") {
    const StateVector vacuum = states::coherent_state(Dim(8), Complex{0.0});
    CHECK(vacuum.amplitudes == states::number_state(Dim(8), 0).amplitudes);

    const StateVector state = states::coherent_state(Dim(64), Complex{1.0, 0.0});
    CHECK(std::fabs(norm2(state.amplitudes) - 1.0) < 1e-12);
    CHECK(std::fabs(states::expectation(state, build_number(Dim(64))).real() - 1.0) < 1e-10);

    const StateVector tilted = states::coherent_state(Dim(64), Complex{1.0, 1.0});
    CHECK(std::fabs(states::expectation(tilted, build_position(Dim(64))).real() - 2.0) < 1e-8);
    CHECK(std::fabs(states::expectation(tilted, build_position(Dim(64))).imag()) < 1e-12);
}

TEST_CASE("coherent number expectation converges monotonically") {
    const Complex beta{0.6, 0.8};  // |beta|^2 = 1
    double previous = 1.0;
    for (int n : {8, 16, 32, 64}) {
        const StateVector state = states::coherent_state(Dim(n), beta);
        const double error =
            std::fabs(states::expectation(state, build_number(Dim(n))).real() - 1.0);
        CHECK(error <= previous);
        previous = error;
    }
    CHECK(previous < 1e-8);
}

TEST_CASE("coherent momentum-like expectation is purely imaginary with magnitude 2|Im beta|") {
    const StateVector state = states::coherent_state(Dim(64), Complex{0.0, 1.0});
    const Complex value = states::expectation(state, build_momentum_like(Dim(64)));
    CHECK(std::fabs(value.real()) < 1e-12);
    CHECK(std::fabs(std::abs(value) - 2.0) < 1e-8);
}

TEST_CASE("coherent position magnitude traces the phase") {
    const double beta_mag = 1.0;
    for (int step = 0; step < 12; ++step) {
        const double phi = step * 0.5235987755982988;  // pi/6 grid
        const Complex beta = beta_mag * Complex{std::cos(phi), std::sin(phi)};
        const StateVector state = states::coherent_state(Dim(64), beta);
        const double magnitude =
            std::fabs(states::expectation(state, build_position(Dim(64))).real());
        CHECK(std::fabs(magnitude - 2.0 * beta_mag * std::fabs(std::cos(phi))) < 1e-6);
    }
}

TEST_CASE("squeezed vacuum basics") {
    const StateVector vacuum = states::squeezed_vacuum(Dim(16), Complex{0.0});
    CHECK(vacuum.amplitudes == states::number_state(Dim(16), 0).amplitudes);

    const StateVector state = states::squeezed_vacuum(Dim(128), Complex{0.5, 0.0});
    CHECK(std::fabs(norm2(state.amplitudes) - 1.0) < 1e-12);

    // even Fock support only
    for (std::size_t k = 1; k < state.amplitudes.size(); k += 2)
        CHECK(std::abs(state.amplitudes[k]) <= 1e-12);
}

TEST_CASE("squeezed vacuum photon number matches sinh^2|zeta|") {
    for (const Complex zeta : {Complex{0.5, 0.0}, Complex{0.3, 0.4}, Complex{-0.7, 0.2},
                               Complex{0.0, 1.0}}) {
        const StateVector state = states::squeezed_vacuum(Dim(128), zeta);
        const double expected = std::pow(std::sinh(std::abs(zeta)), 2);
        const double actual = states::expectation(state, build_number(Dim(128))).real();
        CHECK(std::fabs(actual - expected) / expected < 1e-5);
    }

    const StateVector half = states::squeezed_vacuum(Dim(128), Complex{0.5, 0.0});
    CHECK(std::fabs(states::expectation(half, build_number(Dim(128))).real() -
                    std::pow(std::sinh(0.5), 2)) < 1e-6);
    CHECK(std::fabs(states::expectation(half, build_position(Dim(128))).real()) < 1e-6);
    const Complex momentum =
        states::expectation(states::squeezed_vacuum(Dim(128), Complex{0.7, 0.0}),
                            build_momentum_like(Dim(128)));
    CHECK(std::abs(momentum) < 1e-6);
}

TEST_CASE("squeezed vacuum truncation and range guards") {
    CHECK_THROWS_AS(states::squeezed_vacuum(Dim(16), Complex{2.0, 0.0}), TruncationError);
    CHECK_THROWS_AS(states::squeezed_vacuum(Dim(128), Complex{2.5, 0.0}), std::domain_error);
    CHECK_THROWS_AS(states::squeezed_vacuum(Dim(16), Complex{1.0 / 0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("squeezed vacuum agrees with a direct Taylor oracle") {
    for (const Complex zeta : {Complex{0.3, 0.0}, Complex{0.2, -0.25}}) {
        const StateVector state = states::squeezed_vacuum(Dim(12), zeta);
        std::vector<Complex> oracle = taylor_exp_e0(Dim(12), zeta);
        const double norm = norm2(oracle);
        for (Complex& z : oracle)
            z /= norm;
        for (std::size_t i = 0; i < oracle.size(); ++i)
            CHECK(std::abs(state.amplitudes[i] - oracle[i]) < 1e-13);
    }
}

TEST_CASE("expectation hermiticity leaks stay below 1e-12") {
    const StateVector state = states::coherent_state(Dim(48), Complex{0.9, -0.4});
    CHECK(std::fabs(states::expectation(state, build_number(Dim(48))).imag()) < 1e-12);
    CHECK(std::fabs(states::expectation(state, build_position(Dim(48))).imag()) < 1e-12);
    CHECK(std::fabs(states::expectation(state, build_momentum_like(Dim(48))).real()) < 1e-12);
}

TEST_CASE("expectation rejects mismatched dims") {
    CHECK_THROWS_AS(states::expectation(states::number_state(Dim(4), 1), build_number(Dim(5))),
                    DimensionError);
}
