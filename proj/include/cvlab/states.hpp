#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cvlab/common.hpp"
#include "cvlab/partition.hpp"

namespace cvlab {

struct GaussianParams {
    double sigma = 1.0;  // width, sigma^2 = (1/2) e^(-2r') for squeezing r'
    double qbar = 0.0;   // position displacement
    double pbar = 0.0;   // momentum displacement

    void validate() const;
};

enum class WfKind { gaussian, max_violation, sampled };

struct MaxViolationParams {
    Partition partition;
    double theta = 0.0;
    long long s_trunc = 512;    // keep blocks |s| <= s_trunc
    double dropped_norm2 = 0.0; // exact mass lost to the truncation
};

struct SampledParams {
    double x0 = 0.0;  // coordinate of samples[0]
    double dx = 1.0;  // uniform spacing
    std::vector<cplx> samples;
};

// Single-mode state with a pointwise evaluator. Values are immutable after
// construction and the evaluator is safe to call concurrently.
class WaveFunction {
  public:
    cplx operator()(double x) const;

    WfKind kind() const { return kind_; }
    const GaussianParams& gaussian() const;
    const MaxViolationParams& max_violation() const;
    const SampledParams& sampled() const;

    // True when the state can be nonzero somewhere in sub-interval (m, s).
    bool cell_supported(const Partition& p, int m, long long s) const;

    // Largest |s| carrying any mass, when the state knows it (else nullopt).
    std::optional<long long> support_s_radius(const Partition& p) const;

    // Norm deficit that is built into the state by construction (truncation).
    double declared_norm_deficit() const;

    friend WaveFunction make_squeezed_coherent(double sigma, double qbar, double pbar);
    friend WaveFunction make_max_violation(const Partition& p, double theta,
                                           long long s_trunc);
    friend WaveFunction make_sampled(double x0, double dx, std::vector<cplx> samples);

  private:
    WfKind kind_ = WfKind::gaussian;
    std::variant<GaussianParams, MaxViolationParams, SampledParams> params_;
};

// psi(x) = (2 pi sigma^2)^(-1/4) exp(-(x - qbar)^2/(4 sigma^2) + i pbar x).
// qbar = pbar = 0 gives the squeezed vacuum; sigma^2 = 1/2 the vacuum.
WaveFunction make_squeezed_coherent(double sigma, double qbar, double pbar);

// Piecewise state supported on the m = 0 and m = L-1 sub-intervals with
// block-s coefficient 2/(pi (2s-1)) and constant profile (2a)^(-1/2); the
// m = L-1 branch carries the extra phase e^(i theta). The s sum is truncated
// at |s| <= s_trunc and the dropped mass recorded, not renormalized away.
WaveFunction make_max_violation(const Partition& p, double theta,
                                long long s_trunc = 512);

WaveFunction make_sampled(double x0, double dx, std::vector<cplx> samples);

// Three whitespace-separated columns per line: x, Re(psi), Im(psi).
// '#' starts a comment. The x grid must be uniform.
WaveFunction load_sampled(const std::string& path);

struct KernelSettings {
    double eps = 1e-10;    // Gaussian closed form: bound on dropped s mass
    double tol = 1e-8;     // quadrature path: absolute tolerance per entry
    long long s_max = 64;  // truncation radius cap for the s sum
};

// Integral of |psi|^2 via the kernel machinery (trace of the Gram kernel).
double wf_norm(const WaveFunction& wf, const Partition& p,
               const KernelSettings& settings = {});

// Convenience overload using the state's own partition (max_violation) or a
// default one-qubit window (gaussian / sampled).
double wf_norm(const WaveFunction& wf, const KernelSettings& settings = {});

}  // namespace cvlab
