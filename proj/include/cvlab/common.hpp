#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvlab {

using cplx = std::complex<double>;

/// Bad arguments or violated preconditions. CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure (non-convergence, divergent evaluation). Exit code 3.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Resource cap exceeded (dimension/enumeration limits). Exit code 3.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Pairwise (cascade) summation; result independent of how callers chunk work.
double pairwise_sum(std::span<const double> terms);
cplx pairwise_sum(std::span<const cplx> terms);

/// Thread budget for batch loops: min(hardware, CVLAB_THREADS if set), at least 1.
int thread_budget();

/// Runs fn(i) for i in [0, n). Order of completion is unspecified but each
/// index is visited exactly once, so writes to per-index slots are race-free.
void parallel_for(long long n, const std::function<void(long long)>& fn);

}  // namespace cvlab
