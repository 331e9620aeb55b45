#include "cvlab/states.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cvlab/gram_kernel.hpp"

namespace cvlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double max_violation_coefficient(long long s) {
    return 2.0 / (kPi * static_cast<double>(2 * s - 1));
}

}  // namespace

void GaussianParams::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw input_error("GaussianParams: sigma must be positive and finite");
    }
    if (!std::isfinite(qbar) || !std::isfinite(pbar)) {
        throw input_error("GaussianParams: displacements must be finite");
    }
}

cplx WaveFunction::operator()(double x) const {
    switch (kind_) {
        case WfKind::gaussian: {
            const auto& g = std::get<GaussianParams>(params_);
            const double u = x - g.qbar;
            const double amp = std::pow(2.0 * kPi * g.sigma * g.sigma, -0.25) *
                               std::exp(-u * u / (4.0 * g.sigma * g.sigma));
            return amp * std::polar(1.0, g.pbar * x);
        }
        case WfKind::max_violation: {
            const auto& mv = std::get<MaxViolationParams>(params_);
            const Partition& p = mv.partition;
            const CellIndex c = x_to_cell(p, x);
            if (std::llabs(c.s) > mv.s_trunc) return 0.0;
            if (c.m != 0 && c.m != p.L - 1) return 0.0;
            const double amp =
                max_violation_coefficient(c.s) / std::sqrt(2.0 * p.a);
            if (c.m == 0) return amp;
            return amp * std::polar(1.0, mv.theta);
        }
        case WfKind::sampled: {
            const auto& sp = std::get<SampledParams>(params_);
            const double t = (x - sp.x0) / sp.dx;
            if (t < 0.0 || t > static_cast<double>(sp.samples.size() - 1)) return 0.0;
            const auto i = static_cast<std::size_t>(t);
            if (i + 1 >= sp.samples.size()) return sp.samples.back();
            const double w = t - static_cast<double>(i);
            return (1.0 - w) * sp.samples[i] + w * sp.samples[i + 1];
        }
    }
    return 0.0;
}

const GaussianParams& WaveFunction::gaussian() const {
    if (kind_ != WfKind::gaussian) throw input_error("WaveFunction: not a Gaussian state");
    return std::get<GaussianParams>(params_);
}

const MaxViolationParams& WaveFunction::max_violation() const {
    if (kind_ != WfKind::max_violation) {
        throw input_error("WaveFunction: not a max-violation state");
    }
    return std::get<MaxViolationParams>(params_);
}

const SampledParams& WaveFunction::sampled() const {
    if (kind_ != WfKind::sampled) throw input_error("WaveFunction: not a sampled state");
    return std::get<SampledParams>(params_);
}

bool WaveFunction::cell_supported(const Partition& p, int m, long long s) const {
    if (kind_ != WfKind::max_violation) return true;
    const auto& mv = std::get<MaxViolationParams>(params_);
    if (mv.partition.L != p.L || mv.partition.a != p.a) return true;
    return (m == 0 || m == p.L - 1) && std::llabs(s) <= mv.s_trunc;
}

std::optional<long long> WaveFunction::support_s_radius(const Partition& p) const {
    switch (kind_) {
        case WfKind::max_violation: {
            const auto& mv = std::get<MaxViolationParams>(params_);
            if (mv.partition.L == p.L && mv.partition.a == p.a) return mv.s_trunc;
            return std::nullopt;
        }
        case WfKind::sampled: {
            const auto& sp = std::get<SampledParams>(params_);
            const double x_lo = sp.x0;
            const double x_hi = sp.x0 + sp.dx * static_cast<double>(sp.samples.size() - 1);
            const long long s_lo = x_to_cell(p, x_lo).s;
            const long long s_hi = x_to_cell(p, x_hi).s;
            return std::max(std::llabs(s_lo), std::llabs(s_hi));
        }
        case WfKind::gaussian:
            return std::nullopt;
    }
    return std::nullopt;
}

double WaveFunction::declared_norm_deficit() const {
    if (kind_ != WfKind::max_violation) return 0.0;
    return std::get<MaxViolationParams>(params_).dropped_norm2;
}

WaveFunction make_squeezed_coherent(double sigma, double qbar, double pbar) {
    GaussianParams g{sigma, qbar, pbar};
    g.validate();
    WaveFunction wf;
    wf.kind_ = WfKind::gaussian;
    wf.params_ = g;
    return wf;
}

WaveFunction make_max_violation(const Partition& p, double theta, long long s_trunc) {
    if (s_trunc < 1) throw input_error("make_max_violation: s_trunc must be >= 1");
    MaxViolationParams mv{p, theta, s_trunc, 0.0};
    // Norm of the kept blocks: (4/pi^2) sum_{|s|<=S} (2s-1)^(-2); the full sum
    // over all integers s equals one because sum_{k>=1} (2k-1)^(-2) = pi^2/8.
    double kept = 0.0;
    for (long long s = -s_trunc; s <= s_trunc; ++s) {
        const double c = max_violation_coefficient(s);
        kept += c * c;
    }
    mv.dropped_norm2 = std::max(0.0, 1.0 - kept);
    WaveFunction wf;
    wf.kind_ = WfKind::max_violation;
    wf.params_ = mv;
    return wf;
}

WaveFunction make_sampled(double x0, double dx, std::vector<cplx> samples) {
    if (!(dx > 0.0) || !std::isfinite(dx) || !std::isfinite(x0)) {
        throw input_error("make_sampled: grid must be finite with dx > 0");
    }
    if (samples.size() < 2) throw input_error("make_sampled: need at least two samples");
    for (const cplx& v : samples) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw input_error("make_sampled: samples must be finite");
        }
    }
    WaveFunction wf;
    wf.kind_ = WfKind::sampled;
    wf.params_ = SampledParams{x0, dx, std::move(samples)};
    return wf;
}

WaveFunction load_sampled(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("load_sampled: cannot open " + path);
    std::vector<double> xs;
    std::vector<cplx> vals;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double x, re, im;
        if (!(ss >> x)) continue;  // blank or comment-only line
        if (!(ss >> re >> im)) {
            throw input_error("load_sampled: line " + std::to_string(line_no) +
                              ": expected three columns (x, Re, Im)");
        }
        xs.push_back(x);
        vals.emplace_back(re, im);
    }
    if (xs.size() < 2) throw input_error("load_sampled: need at least two samples");
    const double dx = xs[1] - xs[0];
    if (!(dx > 0.0)) throw input_error("load_sampled: x must be strictly increasing");
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double step = xs[i] - xs[i - 1];
        if (std::fabs(step - dx) > 1e-9 * std::max(1.0, std::fabs(dx))) {
            throw input_error("load_sampled: x grid must be uniform");
        }
    }
    return make_sampled(xs[0], dx, std::move(vals));
}

double wf_norm(const WaveFunction& wf, const Partition& p, const KernelSettings& settings) {
    const GramKernel g = gram_kernel(p, wf, settings, 0.0);
    return g.trace().real();
}

double wf_norm(const WaveFunction& wf, const KernelSettings& settings) {
    switch (wf.kind()) {
        case WfKind::max_violation:
            return wf_norm(wf, wf.max_violation().partition, settings);
        case WfKind::gaussian:
            return wf_norm(wf, Partition(1.8 * wf.gaussian().sigma, 1), settings);
        case WfKind::sampled: {
            const auto& sp = wf.sampled();
            const double span =
                sp.dx * static_cast<double>(sp.samples.size() - 1) + std::fabs(sp.x0);
            return wf_norm(wf, Partition(std::max(span, 1.0), 1), settings);
        }
    }
    throw input_error("wf_norm: unknown state kind");
}

}  // namespace cvlab
