#pragma once

#include <vector>

#include "cvlab/common.hpp"

namespace cvlab {

// The quadrature line is tiled by blocks of length a*L centred at a*L*s,
// each split into L = 2^N sub-intervals of length a labelled m = 0..L-1.
// A point x decomposes as x = a*L*(s - 1/2) + a*m + y with y in [0, a).
struct Partition {
    static constexpr int default_n_max = 12;

    double a;
    int N;
    int L;

    Partition(double bin_width, int qubits, int n_max = default_n_max);

    double block_length() const { return a * static_cast<double>(L); }
};

struct CellIndex {
    int m = 0;          // sub-interval label in [0, L-1]
    long long s = 0;    // block index, any integer
    double y = 0.0;     // offset within the sub-interval, in [0, a)
};

// Qubit labels m_1..m_N, each +-1. bits[j-1] holds m_j.
struct QubitLabels {
    std::vector<int> bits;
};

// m = sum_j 2^(j-1) (1 + m_j)/2, so qubit j occupies bit j-1 of m.
int encode_m(const QubitLabels& labels);
QubitLabels decode_m(int m, int N);

double cell_to_x(const Partition& p, const CellIndex& c);
CellIndex x_to_cell(const Partition& p, double x);

// Sign of qubit j in label m: +1 if bit j-1 set, else -1.
inline int qubit_sign(int m, int j) { return (m >> (j - 1)) & 1 ? +1 : -1; }

}  // namespace cvlab
