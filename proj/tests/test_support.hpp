// test_support.hpp — Deterministic random generators and independent oracles
// shared by the unit test binaries.

#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "switchqfi/linalg.hpp"

namespace test_support {

using switchqfi::CMatrix;
using switchqfi::cdouble;
using switchqfi::Vec3;

inline constexpr double kPi = std::numbers::pi;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    CMatrix hermitian(std::size_t dim) {
        CMatrix h(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            h(i, i) = uniform(-1.0, 1.0);
            for (std::size_t j = i + 1; j < dim; ++j) {
                h(i, j) = cdouble(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
                h(j, i) = std::conj(h(i, j));
            }
        }
        return h;
    }

    CMatrix complex_matrix(std::size_t dim) {
        CMatrix g(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                g(i, j) = cdouble(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
        return g;
    }

    // G G^dagger / tr: a valid density matrix.
    CMatrix density_matrix(std::size_t dim) {
        const CMatrix g = complex_matrix(dim);
        CMatrix rho = g * adjoint(g);
        return (1.0 / trace(rho).real()) * rho;
    }

    Vec3 bloch_in_ball() {
        for (;;) {
            Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            if (dot(v, v) <= 1.0) return v;
        }
    }

    Vec3 unit_axis() {
        for (;;) {
            Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            const double n = switchqfi::norm(v);
            if (n > 0.1 && n <= 1.0) return (1.0 / n) * v;
        }
    }

    // Off-diagonal entry keeping [[rho00, rho01], [conj, 1-rho00]] positive.
    cdouble rho01_for(double rho00) {
        const double cap = std::sqrt(std::max(0.0, rho00 * (1.0 - rho00)));
        return std::polar(uniform(0.0, 1.0) * cap, uniform(0.0, 2.0 * kPi));
    }
};

// Taylor-series matrix exponential, the oracle for the closed-form unitary.
inline CMatrix mat_exp_series(const CMatrix& m) {
    CMatrix sum = CMatrix::identity(m.dim());
    CMatrix term = CMatrix::identity(m.dim());
    for (int k = 1; k <= 60; ++k) {
        term = (cdouble(1.0 / k)) * (term * m);
        sum += term;
    }
    return sum;
}

}  // namespace test_support
