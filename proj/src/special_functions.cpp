#include "cvlab/special_functions.hpp"

#include <cmath>
#include <limits>

namespace cvlab::special {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031;
constexpr double kOneOverSqrtPi = 0.5641895835477562869480794516;
constexpr double kSqrt2 = 1.4142135623730950488016887242;

// erf(x) = (2/sqrt(pi)) e^(-x^2) sum_{n>=0} (2x^2)^n x / (1*3*5*...*(2n+1)),
// all terms positive, good for |x| <= 2.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    double denom = 1.0;
    for (int n = 1; n < 200; ++n) {
        denom += 2.0;
        term *= 2.0 * x2 / denom;
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return kTwoOverSqrtPi * std::exp(-x2) * sum;
}

// erfc(x) = e^(-x^2)/sqrt(pi) * 1/(x + 1/2/(x + 1/(x + 3/2/(x + ...)))),
// for x >= 2, evaluated by the modified Lentz algorithm.
double erfc_cf(double x) {
    const double tiny = 1e-300;
    double b = x;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int n = 1; n < 300; ++n) {
        const double a = 0.5 * n;
        b = x;  // the partial denominators alternate a_n/(x + ...) with a_n = n/2
        d = b + a * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) * kOneOverSqrtPi * h;
}

}  // namespace

double erf(double x) {
    if (std::isnan(x)) return x;
    const double ax = std::fabs(x);
    double v;
    if (ax <= 2.0) {
        v = erf_series(ax);
    } else {
        v = 1.0 - erfc_cf(ax);
    }
    return x < 0.0 ? -v : v;
}

double erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x <= 2.0) return 1.0 - erf_series(x);
    if (x > 27.0) return 0.0;  // below smallest normalized double
    return erfc_cf(x);
}

double gauss_symmetric_mass(double mu) { return erf(mu / kSqrt2); }

double gauss_upper_tail(double t) { return 0.5 * erfc(t / kSqrt2); }

double gauss_interval_mass(double lo, double hi) {
    if (!(lo <= hi)) return 0.0;
    if (lo >= 0.0) return gauss_upper_tail(lo) - gauss_upper_tail(hi);
    if (hi <= 0.0) return gauss_upper_tail(-hi) - gauss_upper_tail(-lo);
    return 0.5 * (erf(hi / kSqrt2) + erf(-lo / kSqrt2));
}

}  // namespace cvlab::special
