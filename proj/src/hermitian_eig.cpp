#include "cvlab/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>

namespace cvlab {

namespace {

// Implicit-shift QL on a symmetric tridiagonal (d, e), values only.
// e[i] couples d[i] and d[i+1]; e has length n (last slot is workspace).
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    e[static_cast<std::size_t>(n - 1)] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-300 || std::fabs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw numeric_error("tridiagonal_ql: no convergence");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const cplx* a, int n) {
    if (n <= 0) throw input_error("hermitian_eigenvalues: empty matrix");
    if (n == 1) return {a[0].real()};

    std::vector<cplx> m(a, a + static_cast<std::size_t>(n) * n);
    auto at = [&](int r, int c) -> cplx& { return m[static_cast<std::size_t>(r) * n + c]; };

    std::vector<cplx> sub(static_cast<std::size_t>(n - 1));  // complex subdiagonal
    std::vector<cplx> w(static_cast<std::size_t>(n)), p(static_cast<std::size_t>(n));

    for (int k = 0; k + 2 < n; ++k) {
        const int len = n - k - 1;  // rows k+1..n-1
        double tail2 = 0.0;
        for (int i = k + 2; i < n; ++i) tail2 += std::norm(at(i, k));
        const cplx alpha = at(k + 1, k);
        if (tail2 == 0.0) {
            sub[k] = alpha;
            continue;
        }
        const double mu = std::sqrt(std::norm(alpha) + tail2);
        const cplx beta =
            (alpha == cplx(0.0)) ? cplx(-mu) : -(alpha / std::abs(alpha)) * mu;
        // Householder vector w = x - beta*e1 over rows k+1..n-1
        w[0] = alpha - beta;
        for (int i = 1; i < len; ++i) w[i] = at(k + 1 + i, k);
        double s = 0.0;
        for (int i = 0; i < len; ++i) s += std::norm(w[i]);

        // p = B w on the trailing block B = A[k+1.., k+1..]
        for (int r = 0; r < len; ++r) {
            cplx acc = 0.0;
            const cplx* row = &at(k + 1 + r, k + 1);
            for (int c = 0; c < len; ++c) acc += row[c] * w[c];
            p[r] = acc;
        }
        double gamma = 0.0;
        for (int i = 0; i < len; ++i) gamma += (std::conj(w[i]) * p[i]).real();
        const double two_over_s = 2.0 / s;
        for (int i = 0; i < len; ++i) p[i] = two_over_s * (p[i] - (gamma / s) * w[i]);
        // B -= q w^H + w q^H  with q stored in p
        for (int r = 0; r < len; ++r) {
            cplx* row = &at(k + 1 + r, k + 1);
            const cplx qr = p[r];
            const cplx wr = w[r];
            for (int c = 0; c < len; ++c) {
                row[c] -= qr * std::conj(w[c]) + wr * std::conj(p[c]);
            }
        }
        sub[k] = beta;
    }
    sub[static_cast<std::size_t>(n - 2)] = at(n - 1, n - 2);

    // Phases on the subdiagonal are removed by a diagonal unitary similarity,
    // leaving the real symmetric tridiagonal (diag, |sub|).
    std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) d[i] = at(i, i).real();
    for (int i = 0; i + 1 < n; ++i) e[i] = std::abs(sub[i]);
    tridiagonal_ql(d, e);
    return d;
}

HermitianEigen hermitian_eigensystem(const cplx* a, int n) {
    if (n <= 0) throw input_error("hermitian_eigensystem: empty matrix");
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<cplx> m(a, a + nn * nn);
    std::vector<cplx> v(nn * nn, cplx(0.0));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    auto at = [&](std::vector<cplx>& mat, int r, int c) -> cplx& {
        return mat[static_cast<std::size_t>(r) * n + c];
    };

    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(at(m, i, i)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) scale = std::max(scale, std::abs(at(m, i, j)));
    if (scale == 0.0) scale = 1.0;

    for (int sweep = 0; sweep < 80; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += std::norm(at(m, i, j));
        if (std::sqrt(off) <= 1e-15 * scale * n) break;
        if (sweep == 79) throw numeric_error("hermitian_eigensystem: Jacobi did not converge");

        for (int pi = 0; pi < n - 1; ++pi) {
            for (int qi = pi + 1; qi < n; ++qi) {
                const cplx apq = at(m, pi, qi);
                const double aapq = std::abs(apq);
                if (aapq <= 1e-18 * scale) continue;
                const double app = at(m, pi, pi).real();
                const double aqq = at(m, qi, qi).real();
                const cplx phase = apq / aapq;
                double theta = 0.5 * std::atan2(2.0 * aapq, aqq - app);
                if (theta > 0.25 * M_PI) theta -= 0.5 * M_PI;  // keep the small-angle root
                const double c = std::cos(theta);
                const cplx s = std::sin(theta) * phase;
                // Columns: M[:,p] <- c*M[:,p] - conj(s)*M[:,q]; M[:,q] <- s*M[:,p] + c*M[:,q]
                for (int r = 0; r < n; ++r) {
                    const cplx mp = at(m, r, pi), mq = at(m, r, qi);
                    at(m, r, pi) = c * mp - std::conj(s) * mq;
                    at(m, r, qi) = s * mp + c * mq;
                    const cplx vp = at(v, r, pi), vq = at(v, r, qi);
                    at(v, r, pi) = c * vp - std::conj(s) * vq;
                    at(v, r, qi) = s * vp + c * vq;
                }
                // Rows (conjugate transform)
                for (int col = 0; col < n; ++col) {
                    const cplx mp = at(m, pi, col), mq = at(m, qi, col);
                    at(m, pi, col) = c * mp - s * mq;
                    at(m, qi, col) = std::conj(s) * mp + c * mq;
                }
            }
        }
    }

    std::vector<int> order(nn);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return at(m, x, x).real() < at(m, y, y).real();
    });

    HermitianEigen out;
    out.values.resize(nn);
    out.vectors.assign(nn * nn, cplx(0.0));
    for (int k = 0; k < n; ++k) {
        out.values[k] = at(m, order[k], order[k]).real();
        for (int r = 0; r < n; ++r) {
            out.vectors[static_cast<std::size_t>(r) * n + k] = at(v, r, order[k]);
        }
    }
    return out;
}

}  // namespace cvlab
