#pragma once

#include <vector>

#include "cvlab/common.hpp"

namespace cvlab {

// Eigenvalues of a Hermitian matrix (row-major n x n), ascending.
// Householder tridiagonalization followed by implicit-shift QL on the real
// tridiagonal form; fully deterministic for a given input.
std::vector<double> hermitian_eigenvalues(const cplx* a, int n);

struct HermitianEigen {
    std::vector<double> values;   // ascending
    std::vector<cplx> vectors;    // row-major n x n, column k pairs with values[k]
};

// Full eigensystem by cyclic complex Jacobi sweeps. Quadratic per sweep, so
// meant for the small matrices used for projectors and cross-checks.
HermitianEigen hermitian_eigensystem(const cplx* a, int n);

}  // namespace cvlab
