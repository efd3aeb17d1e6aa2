// linalg.hpp — Small dense complex linear algebra for qubit pairs: matrices,
// Hermitian Jacobi eigendecomposition, tensor products, partial trace, Bloch picture.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace switchqfi {

using cdouble = std::complex<double>;

// Default validation tolerance wherever a density operator is constructed.
inline constexpr double kDefaultTol = 1e-10;

// ------------------------------ real 3-space --------------------------------

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Vec3& v);

// Row-major real 3x3 matrix (Bloch rotations and affine channel maps).
struct Mat3 {
    std::array<double, 9> m{};

    static Mat3 identity();

    double& operator()(std::size_t i, std::size_t j) { return m[3 * i + j]; }
    double operator()(std::size_t i, std::size_t j) const { return m[3 * i + j]; }
};

Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator*(double s, const Mat3& a);
Vec3 operator*(const Mat3& a, const Vec3& v);

// ----------------------------- complex matrices -----------------------------

// Dense square complex matrix of dimension 2, 3 or 4. Row-major, value type.
// NaN/Inf entries are rejected wherever raw entries are admitted.
class CMatrix {
  public:
    explicit CMatrix(std::size_t dim);

    static CMatrix identity(std::size_t dim);
    static CMatrix from(std::initializer_list<std::initializer_list<cdouble>> rows);

    std::size_t dim() const { return dim_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return e_[dim_ * i + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return e_[dim_ * i + j]; }

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cdouble s);

  private:
    std::size_t dim_;
    std::array<cdouble, 16> e_{};
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cdouble s, CMatrix a);
CMatrix operator*(CMatrix a, cdouble s);

CMatrix adjoint(const CMatrix& a);
cdouble trace(const CMatrix& a);
double max_abs(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool is_hermitian(const CMatrix& a, double tol);
void ensure_finite(const CMatrix& a, const char* what);

// Pauli operators and |i><j| building blocks.
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
CMatrix basis_op(std::size_t dim, std::size_t i, std::size_t j);

// ------------------ joint probe-control basis (control-major) ---------------
//
// Joint index = 2*(control basis index) + (probe basis index): the 4x4 joint
// matrix reads as a 2x2 grid of 2x2 probe blocks indexed by the control qubit.

enum class Subsystem { probe, control };

// Tensor product placing `probe_op` on the probe (minor index) and
// `control_op` on the control (major index) of the joint basis above.
CMatrix kron(const CMatrix& probe_op, const CMatrix& control_op);

CMatrix partial_trace(const CMatrix& joint, Subsystem keep);

// Permutes a control-major 4x4 matrix into probe-major ordering
// (joint index = 2*probe + control).
CMatrix to_probe_major(const CMatrix& joint);

// -------------------------- Hermitian eigenproblem --------------------------

struct EigenSystem {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // orthonormal eigenvectors as columns, same order
};

// Cyclic complex Jacobi rotations; converged when the off-diagonal Frobenius
// mass drops below 1e-14 (at most 100 sweeps). Rejects input that is not
// Hermitian within herm_tol.
EigenSystem hermitian_eig(const CMatrix& m, double herm_tol = kDefaultTol);

// ------------------------ density operators & Bloch -------------------------

class DensityOperator {
  public:
    // Validates hermiticity, unit trace and positivity within tol.
    explicit DensityOperator(const CMatrix& mat, double tol = kDefaultTol);

    // Qubit state [[rho00, rho01], [conj(rho01), 1 - rho00]].
    static DensityOperator qubit(double rho00, cdouble rho01, double tol = kDefaultTol);

    const CMatrix& mat() const { return mat_; }
    std::size_t dim() const { return mat_.dim(); }
    double tol() const { return tol_; }

  private:
    CMatrix mat_;
    double tol_;
};

using BlochVector = Vec3;

// rho = (I + r.sigma)/2 <-> r; the round trip is the identity to 1e-14.
BlochVector bloch_from_density(const DensityOperator& rho);
DensityOperator density_from_bloch(const BlochVector& r, double tol = kDefaultTol);

}  // namespace switchqfi
