#pragma once

#include <utility>
#include <vector>

#include "cvlab/common.hpp"
#include "cvlab/partition.hpp"

namespace cvlab {

enum class Axis { x, y, z };

// Dense 2^N x 2^N complex matrix acting on the m register. Every operator of
// the pseudo-spin algebra acts as (matrix tensor identity) over (s, y), so
// this block determines the full operator.
struct SpinMatrix {
    int N = 0;
    int L = 0;
    std::vector<cplx> a;  // row-major, a[mp*L + m] = <mp|M|m>

    SpinMatrix() = default;
    explicit SpinMatrix(int qubits);

    static SpinMatrix identity(int qubits);

    cplx& at(int row, int col) { return a[static_cast<std::size_t>(row) * L + col]; }
    const cplx& at(int row, int col) const {
        return a[static_cast<std::size_t>(row) * L + col];
    }

    SpinMatrix adjoint() const;
    bool is_hermitian(double tol = 1e-12) const;
    double max_abs() const;

    SpinMatrix& operator+=(const SpinMatrix& other);
    SpinMatrix& operator-=(const SpinMatrix& other);
    SpinMatrix& operator*=(cplx scalar);
};

SpinMatrix operator+(SpinMatrix lhs, const SpinMatrix& rhs);
SpinMatrix operator-(SpinMatrix lhs, const SpinMatrix& rhs);
SpinMatrix operator*(cplx scalar, SpinMatrix m);
SpinMatrix multiply(const SpinMatrix& lhs, const SpinMatrix& rhs);

// Measurement direction on the Bloch sphere; must be unit length.
struct Orientation {
    double nx = 0.0, ny = 0.0, nz = 1.0;

    Orientation() = default;
    Orientation(double x, double y, double z);
    static Orientation from_angles(double polar, double azimuth);

    bool is_unit(double tol = 1e-12) const;
};

// N (a, a') orientation pairs plus the Bell variant (1 or 2).
struct BellSpec {
    int N = 0;
    std::vector<std::pair<Orientation, Orientation>> pairs;
    int variant = 1;

    void validate() const;

    // Pairs (x, y) on every qubit except the last, which uses (x, -y); the
    // resulting ladder product sends m = L/2 to m = L/2 - 1.
    static BellSpec ladder_xy(int N, int variant = 1);
    // All pairs (x, -y); the product sends m = L-1 to m = 0.
    static BellSpec lowering_xy(int N, int variant = 1);
};

SpinMatrix sigma_component(int N, int j, Axis axis);
SpinMatrix sigma_dot(int N, int j, const Orientation& n);
SpinMatrix number_operator(int N);

// Right-multiply by a single-site operator: out = m * (sigma^(j) . n).
// The factor has at most two nonzeros per column, so this is O(L^2).
SpinMatrix apply_site(const SpinMatrix& m, int j, const Orientation& n);

// Hermitian Bell operator pair (B1, B2) built by the even/odd recursion from
// E^(1) = A^(1) + i (A^(1))'.
std::pair<SpinMatrix, SpinMatrix> bell_pair(const BellSpec& spec);

// Direct product construction E^(N) = prod_j (A^(j) + i (A^(j))').
SpinMatrix bell_product(const BellSpec& spec);

// Largest absolute eigenvalue; equals the full Hilbert-space operator norm
// because the algebra acts trivially on (s, y). Input must be Hermitian.
double spectral_norm(const SpinMatrix& m);

}  // namespace cvlab
