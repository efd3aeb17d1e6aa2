// linalg.cpp — CMatrix arithmetic, complex Jacobi eigensolver, joint-basis helpers.

#include "switchqfi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace switchqfi {

namespace {

void ensure_same_dim(const CMatrix& a, const CMatrix& b, const char* what) {
    if (a.dim() != b.dim()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

void ensure_dim_supported(std::size_t dim, const char* what) {
    if (dim < 2 || dim > 4)
        throw std::invalid_argument(std::string(what) + ": dimension must be 2, 3 or 4");
}

double offdiag_mass(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

double frobenius(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Mat3 Mat3::identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.m[k] = a.m[k] + b.m[k];
    return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

Mat3 operator*(double s, const Mat3& a) {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.m[k] = s * a.m[k];
    return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

CMatrix::CMatrix(std::size_t dim) : dim_(dim) { ensure_dim_supported(dim, "CMatrix"); }

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix r(dim);
    for (std::size_t i = 0; i < dim; ++i) r(i, i) = 1.0;
    return r;
}

CMatrix CMatrix::from(std::initializer_list<std::initializer_list<cdouble>> rows) {
    const std::size_t dim = rows.size();
    ensure_dim_supported(dim, "CMatrix::from");
    CMatrix r(dim);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != dim) throw std::invalid_argument("CMatrix::from: matrix is not square");
        std::size_t j = 0;
        for (const cdouble& v : row) r(i, j++) = v;
        ++i;
    }
    ensure_finite(r, "CMatrix::from");
    return r;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    ensure_same_dim(*this, o, "CMatrix::operator+=");
    for (std::size_t k = 0; k < dim_ * dim_; ++k) e_[k] += o.e_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    ensure_same_dim(*this, o, "CMatrix::operator-=");
    for (std::size_t k = 0; k < dim_ * dim_; ++k) e_[k] -= o.e_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(cdouble s) {
    for (std::size_t k = 0; k < dim_ * dim_; ++k) e_[k] *= s;
    return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    ensure_same_dim(a, b, "CMatrix::operator*");
    const std::size_t n = a.dim();
    CMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cdouble s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

CMatrix operator*(cdouble s, CMatrix a) { return a *= s; }
CMatrix operator*(CMatrix a, cdouble s) { return a *= s; }

CMatrix adjoint(const CMatrix& a) {
    CMatrix r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

cdouble trace(const CMatrix& a) {
    cdouble s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, i);
    return s;
}

double max_abs(const CMatrix& a) {
    double mx = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) mx = std::max(mx, std::abs(a(i, j)));
    return mx;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    ensure_same_dim(a, b, "max_abs_diff");
    double mx = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) mx = std::max(mx, std::abs(a(i, j) - b(i, j)));
    return mx;
}

bool is_hermitian(const CMatrix& a, double tol) { return max_abs_diff(a, adjoint(a)) <= tol; }

void ensure_finite(const CMatrix& a, const char* what) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const cdouble& v = a(i, j);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw std::invalid_argument(std::string(what) + ": non-finite entry");
        }
}

CMatrix pauli_x() { return CMatrix::from({{0.0, 1.0}, {1.0, 0.0}}); }

CMatrix pauli_y() {
    return CMatrix::from({{0.0, cdouble(0.0, -1.0)}, {cdouble(0.0, 1.0), 0.0}});
}

CMatrix pauli_z() { return CMatrix::from({{1.0, 0.0}, {0.0, -1.0}}); }

CMatrix basis_op(std::size_t dim, std::size_t i, std::size_t j) {
    ensure_dim_supported(dim, "basis_op");
    if (i >= dim || j >= dim) throw std::invalid_argument("basis_op: index out of range");
    CMatrix r(dim);
    r(i, j) = 1.0;
    return r;
}

CMatrix kron(const CMatrix& probe_op, const CMatrix& control_op) {
    if (probe_op.dim() != 2 || control_op.dim() != 2)
        throw std::invalid_argument("kron: both factors must be 2x2");
    CMatrix r(4);
    for (std::size_t ci = 0; ci < 2; ++ci)
        for (std::size_t cj = 0; cj < 2; ++cj)
            for (std::size_t pi = 0; pi < 2; ++pi)
                for (std::size_t pj = 0; pj < 2; ++pj)
                    r(2 * ci + pi, 2 * cj + pj) = probe_op(pi, pj) * control_op(ci, cj);
    return r;
}

CMatrix partial_trace(const CMatrix& joint, Subsystem keep) {
    if (joint.dim() != 4) throw std::invalid_argument("partial_trace: expected a 4x4 joint matrix");
    CMatrix r(2);
    if (keep == Subsystem::probe) {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                r(i, j) = joint(0 + i, 0 + j) + joint(2 + i, 2 + j);
    } else {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                r(i, j) = joint(2 * i, 2 * j) + joint(2 * i + 1, 2 * j + 1);
    }
    return r;
}

CMatrix to_probe_major(const CMatrix& joint) {
    if (joint.dim() != 4)
        throw std::invalid_argument("to_probe_major: expected a 4x4 joint matrix");
    // 2*control + probe  ->  2*probe + control: indices 1 and 2 swap.
    constexpr std::size_t perm[4] = {0, 2, 1, 3};
    CMatrix r(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r(perm[i], perm[j]) = joint(i, j);
    return r;
}

EigenSystem hermitian_eig(const CMatrix& m, double herm_tol) {
    const std::size_t n = m.dim();
    ensure_finite(m, "hermitian_eig");
    if (!is_hermitian(m, herm_tol))
        throw std::invalid_argument("hermitian_eig: input is not Hermitian within tolerance");

    CMatrix a = 0.5 * (m + adjoint(m));  // exactly Hermitian working copy
    CMatrix v = CMatrix::identity(n);

    constexpr double kOffTol = 1e-14;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && offdiag_mass(a) >= kOffTol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble g = a(p, q);
                const double ag = std::abs(g);
                if (ag == 0.0) continue;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * ag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cdouble phase = g / ag;

                // A <- J^H A J with J = I except J(p,p) = J(q,q) = c,
                // J(p,q) = s*phase, J(q,p) = -s*conj(phase).
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, q) = s * phase * vkp + c * vkq;
                }
                a(p, q) = a(q, p) = 0.0;  // the rotation annihilates this pair
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (offdiag_mass(a) > kOffTol * std::max(1.0, frobenius(a)))
        throw std::runtime_error("hermitian_eig: Jacobi sweep limit reached before convergence");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem out{std::vector<double>(n), CMatrix(n)};
    for (std::size_t col = 0; col < n; ++col) {
        out.values[col] = a(order[col], order[col]).real();
        for (std::size_t row = 0; row < n; ++row) out.vectors(row, col) = v(row, order[col]);
    }
    return out;
}

DensityOperator::DensityOperator(const CMatrix& mat, double tol) : mat_(mat), tol_(tol) {
    ensure_finite(mat_, "DensityOperator");
    if (!is_hermitian(mat_, tol_))
        throw std::invalid_argument("DensityOperator: matrix is not Hermitian within tolerance");
    if (std::abs(trace(mat_) - cdouble(1.0)) > tol_)
        throw std::invalid_argument("DensityOperator: trace differs from 1 beyond tolerance");
    const EigenSystem es = hermitian_eig(mat_, tol_);
    if (es.values.front() < -tol_)
        throw std::invalid_argument("DensityOperator: matrix is not positive semidefinite");
}

DensityOperator DensityOperator::qubit(double rho00, cdouble rho01, double tol) {
    return DensityOperator(
        CMatrix::from({{rho00, rho01}, {std::conj(rho01), 1.0 - rho00}}), tol);
}

BlochVector bloch_from_density(const DensityOperator& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("bloch_from_density: requires a 2x2 state");
    const CMatrix& m = rho.mat();
    return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), m(0, 0).real() - m(1, 1).real()};
}

DensityOperator density_from_bloch(const BlochVector& r, double tol) {
    if (norm(r) > 1.0 + tol)
        throw std::invalid_argument("density_from_bloch: Bloch vector leaves the unit ball");
    const CMatrix m = CMatrix::from({{0.5 * (1.0 + r.z), 0.5 * cdouble(r.x, -r.y)},
                                     {0.5 * cdouble(r.x, r.y), 0.5 * (1.0 - r.z)}});
    return DensityOperator(m, tol);
}

}  // namespace switchqfi
