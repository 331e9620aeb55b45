#pragma once

#include <iosfwd>

#include "cvlab/common.hpp"
#include "cvlab/partition.hpp"
#include "cvlab/states.hpp"

namespace cvlab {

// L x L overlap kernel
//   G(m', m) = sum_s int_0^a conj(psi(x(m',s,y) + w)) psi(x(m,s,y) + w) dy
// with x(m,s,y) = aL(s - 1/2) + am + y and window shift w (zero for the
// undisplaced kernel). Contracting a SpinMatrix against G gives <psi|M|psi>.
struct GramKernel {
    int N = 0;
    int L = 0;
    double a = 0.0;
    std::vector<cplx> g;     // row-major, g[mp*L + m]
    long long s_used = 0;    // largest |s| included in the sum
    double tail_bound = 0.0; // bound/estimate for mass dropped from the trace

    cplx at(int mp, int m) const { return g[static_cast<std::size_t>(mp) * L + m]; }
    cplx trace() const;
};

// Closed form for Gaussian states: completion of squares reduces every entry
// to standard-normal interval masses. Dropped s blocks are bounded by the
// Gaussian tail beyond the covered window; the bound is driven below eps or,
// failing that within the s_max cap, a truncation error is raised.
GramKernel gram_gaussian(const Partition& p, const GaussianParams& gp, double eps = 1e-10,
                         long long s_max = 64, double window_shift = 0.0);

// Adaptive panel quadrature per (m', m, s) for arbitrary states. The s sum is
// truncated by settings.s_max (extended to the state's declared support) and
// the residual estimated as twice the magnitude of the last included block.
GramKernel gram_quadrature(const Partition& p, const WaveFunction& wf,
                           const KernelSettings& settings = {}, double window_shift = 0.0);

// Dispatch: closed form for Gaussian states, quadrature otherwise.
GramKernel gram_kernel(const Partition& p, const WaveFunction& wf,
                       const KernelSettings& settings = {}, double window_shift = 0.0);

// CSV dump, row per m': L "re,im" pairs.
void dump_kernel_csv(const GramKernel& g, std::ostream& os);

}  // namespace cvlab
