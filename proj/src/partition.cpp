#include "cvlab/partition.hpp"

#include <cmath>

namespace cvlab {

Partition::Partition(double bin_width, int qubits, int n_max) : a(bin_width), N(qubits) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw input_error("Partition: bin width a must be positive and finite");
    }
    if (N < 1 || N > n_max) {
        throw input_error("Partition: qubit count N must satisfy 1 <= N <= " +
                          std::to_string(n_max));
    }
    L = 1 << N;
}

int encode_m(const QubitLabels& labels) {
    const int N = static_cast<int>(labels.bits.size());
    if (N < 1) throw input_error("encode_m: empty label list");
    int m = 0;
    for (int j = 1; j <= N; ++j) {
        const int b = labels.bits[static_cast<std::size_t>(j - 1)];
        if (b != -1 && b != +1) throw input_error("encode_m: labels must be +-1");
        m += (1 << (j - 1)) * (1 + b) / 2;
    }
    return m;
}

QubitLabels decode_m(int m, int N) {
    if (N < 1) throw input_error("decode_m: N must be >= 1");
    if (m < 0 || m >= (1 << N)) {
        throw input_error("decode_m: m out of range [0, 2^N - 1]");
    }
    QubitLabels labels;
    labels.bits.resize(static_cast<std::size_t>(N));
    for (int j = 1; j <= N; ++j) {
        labels.bits[static_cast<std::size_t>(j - 1)] = qubit_sign(m, j);
    }
    return labels;
}

double cell_to_x(const Partition& p, const CellIndex& c) {
    if (c.m < 0 || c.m >= p.L) throw input_error("cell_to_x: m out of range");
    if (!(c.y >= 0.0) || !(c.y < p.a)) throw input_error("cell_to_x: y outside [0, a)");
    return p.block_length() * (static_cast<double>(c.s) - 0.5) + p.a * c.m + c.y;
}

CellIndex x_to_cell(const Partition& p, double x) {
    if (!std::isfinite(x)) throw input_error("x_to_cell: x must be finite");
    const double block = p.block_length();
    // Half-open convention: a point exactly on an edge belongs to the bin
    // on its right, which is what floor arithmetic produces.
    double s_real = std::floor(x / block + 0.5);
    double r = x - block * (s_real - 0.5);
    if (r < 0.0) {
        s_real -= 1.0;
        r = x - block * (s_real - 0.5);
    } else if (r >= block) {
        s_real += 1.0;
        r = x - block * (s_real - 0.5);
    }
    CellIndex c;
    c.s = static_cast<long long>(s_real);
    int m = static_cast<int>(std::floor(r / p.a));
    double y = r - p.a * m;
    if (y < 0.0) {
        m -= 1;
        y = r - p.a * m;
    } else if (y >= p.a) {
        m += 1;
        y = r - p.a * m;
    }
    if (m < 0) {
        m = 0;
        y = 0.0;
    } else if (m >= p.L) {
        m = p.L - 1;
        y = std::nextafter(p.a, 0.0);
    }
    if (y < 0.0) y = 0.0;
    if (y >= p.a) y = std::nextafter(p.a, 0.0);
    c.m = m;
    c.y = y;
    return c;
}

}  // namespace cvlab
