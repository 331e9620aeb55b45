#pragma once

#include "cvlab/common.hpp"
#include "cvlab/gram_kernel.hpp"
#include "cvlab/spin_algebra.hpp"
#include "cvlab/states.hpp"

#include "json.hpp"

namespace cvlab {

// Phase-space displacement alpha = (qbar + i pbar)/sqrt(2).
struct DisplacementSpec {
    double qbar = 0.0;
    double pbar = 0.0;

    bool is_zero() const { return qbar == 0.0 && pbar == 0.0; }
};

struct BoundReport {
    double value = 0.0;
    double nchv_bound = 1.0;
    double tsirelson_bound = 1.0;  // 2^((N-1)/2)
    double violation_ratio = 0.0;  // value / nchv_bound
    double tsirelson_margin = 0.0; // tsirelson_bound - |value|
    bool nchv_violated = false;
    bool tsirelson_exceeded = false;
};

struct BellValue {
    double value = 0.0;         // Re <B_i> / <psi|psi>
    double imag_residue = 0.0;  // |Im <B_i>| / <psi|psi>
    double norm_used = 0.0;     // kernel trace the value was normalized by
    long long s_used = 0;
    double tail_bound = 0.0;
    BoundReport report;
};

// sum_{m',m} M[m',m] G(m',m) = <psi| M |psi> for the kernel's state.
cplx expect_spin_operator(const SpinMatrix& m, const GramKernel& g);

// Displaced operators differ from the undisplaced ones by the window shift
// qbar (handled in the kernel) and by the ladder phase e^(i a pbar (m'-m))
// on every matrix entry; this applies the latter.
SpinMatrix displace_matrix(const SpinMatrix& m, double a, double pbar);

// Quantum Bell correlation <B_{i,alpha}^(N)> for the requested variant, with
// matching bound report. The state must be normalized up to its declared
// truncation deficit and the kernel tail.
BellValue bell_correlation(const Partition& p, const WaveFunction& wf, const BellSpec& spec,
                           const DisplacementSpec& disp = {},
                           const KernelSettings& settings = {});

// Closed-form lower bound 2^((N+1)/2) e^(-mu^2/2) A(mu) on <B_1^(N)> for the
// squeezed vacuum with bin width a = 2 mu sigma; odd N only.
double smsv_bound(double mu, int N);

BoundReport bound_report(double value, int N);

// Canonical JSON result record used by the CLI.
nlohmann::ordered_json result_record(const std::string& state, int N, double a, double sigma,
                                     double qbar, double pbar, int variant,
                                     const BellValue& bv);

}  // namespace cvlab
