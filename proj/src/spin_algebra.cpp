#include "cvlab/spin_algebra.hpp"

#include <cmath>

#include "cvlab/hermitian_eig.hpp"

namespace cvlab {

SpinMatrix::SpinMatrix(int qubits) : N(qubits), L(1 << qubits) {
    if (qubits < 1 || qubits > Partition::default_n_max) {
        throw input_error("SpinMatrix: N out of range");
    }
    a.assign(static_cast<std::size_t>(L) * L, cplx(0.0));
}

SpinMatrix SpinMatrix::identity(int qubits) {
    SpinMatrix m(qubits);
    for (int i = 0; i < m.L; ++i) m.at(i, i) = 1.0;
    return m;
}

SpinMatrix SpinMatrix::adjoint() const {
    SpinMatrix out(N);
    for (int r = 0; r < L; ++r)
        for (int c = 0; c < L; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

bool SpinMatrix::is_hermitian(double tol) const {
    const double scale = 1.0 + max_abs();
    for (int r = 0; r < L; ++r)
        for (int c = r; c < L; ++c)
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol * scale) return false;
    return true;
}

double SpinMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a) m = std::max(m, std::abs(v));
    return m;
}

SpinMatrix& SpinMatrix::operator+=(const SpinMatrix& other) {
    if (other.L != L) throw input_error("SpinMatrix: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += other.a[i];
    return *this;
}

SpinMatrix& SpinMatrix::operator-=(const SpinMatrix& other) {
    if (other.L != L) throw input_error("SpinMatrix: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= other.a[i];
    return *this;
}

SpinMatrix& SpinMatrix::operator*=(cplx scalar) {
    for (cplx& v : a) v *= scalar;
    return *this;
}

SpinMatrix operator+(SpinMatrix lhs, const SpinMatrix& rhs) { return lhs += rhs; }
SpinMatrix operator-(SpinMatrix lhs, const SpinMatrix& rhs) { return lhs -= rhs; }
SpinMatrix operator*(cplx scalar, SpinMatrix m) { return m *= scalar; }

SpinMatrix multiply(const SpinMatrix& lhs, const SpinMatrix& rhs) {
    if (lhs.L != rhs.L) throw input_error("multiply: dimension mismatch");
    SpinMatrix out(lhs.N);
    for (int r = 0; r < lhs.L; ++r) {
        for (int k = 0; k < lhs.L; ++k) {
            const cplx f = lhs.at(r, k);
            if (f == cplx(0.0)) continue;
            for (int c = 0; c < lhs.L; ++c) out.at(r, c) += f * rhs.at(k, c);
        }
    }
    return out;
}

Orientation::Orientation(double x, double y, double z) : nx(x), ny(y), nz(z) {
    if (!is_unit()) throw input_error("Orientation: vector must be unit length");
}

Orientation Orientation::from_angles(double polar, double azimuth) {
    Orientation n;
    n.nx = std::sin(polar) * std::cos(azimuth);
    n.ny = std::sin(polar) * std::sin(azimuth);
    n.nz = std::cos(polar);
    return n;
}

bool Orientation::is_unit(double tol) const {
    return std::fabs(std::sqrt(nx * nx + ny * ny + nz * nz) - 1.0) <= tol;
}

void BellSpec::validate() const {
    if (N < 1 || static_cast<int>(pairs.size()) != N) {
        throw input_error("BellSpec: need exactly N orientation pairs");
    }
    if (variant != 1 && variant != 2) throw input_error("BellSpec: variant must be 1 or 2");
    for (const auto& [a, ap] : pairs) {
        if (!a.is_unit() || !ap.is_unit()) {
            throw input_error("BellSpec: orientations must be unit vectors");
        }
    }
}

BellSpec BellSpec::ladder_xy(int N, int variant) {
    BellSpec spec;
    spec.N = N;
    spec.variant = variant;
    const Orientation ex(1.0, 0.0, 0.0), ey(0.0, 1.0, 0.0), ney(0.0, -1.0, 0.0);
    for (int j = 1; j < N; ++j) spec.pairs.emplace_back(ex, ey);
    spec.pairs.emplace_back(ex, ney);
    return spec;
}

BellSpec BellSpec::lowering_xy(int N, int variant) {
    BellSpec spec;
    spec.N = N;
    spec.variant = variant;
    const Orientation ex(1.0, 0.0, 0.0), ney(0.0, -1.0, 0.0);
    for (int j = 0; j < N; ++j) spec.pairs.emplace_back(ex, ney);
    return spec;
}

SpinMatrix sigma_component(int N, int j, Axis axis) {
    if (j < 1 || j > N) throw input_error("sigma_component: qubit index out of range");
    SpinMatrix out(N);
    const int bit = 1 << (j - 1);
    for (int m = 0; m < out.L; ++m) {
        const int mj = qubit_sign(m, j);
        switch (axis) {
            case Axis::x:
                out.at(m ^ bit, m) = 1.0;
                break;
            case Axis::y:
                out.at(m ^ bit, m) = cplx(0.0, static_cast<double>(mj));
                break;
            case Axis::z:
                out.at(m, m) = static_cast<double>(mj);
                break;
        }
    }
    return out;
}

SpinMatrix sigma_dot(int N, int j, const Orientation& n) {
    if (j < 1 || j > N) throw input_error("sigma_dot: qubit index out of range");
    if (!n.is_unit()) throw input_error("sigma_dot: orientation must be unit length");
    SpinMatrix out(N);
    const int bit = 1 << (j - 1);
    for (int m = 0; m < out.L; ++m) {
        const int mj = qubit_sign(m, j);
        out.at(m, m) = n.nz * mj;
        out.at(m ^ bit, m) = cplx(n.nx, n.ny * mj);
    }
    return out;
}

SpinMatrix number_operator(int N) {
    SpinMatrix out(N);
    for (int m = 0; m < out.L; ++m) out.at(m, m) = static_cast<double>(m);
    return out;
}

SpinMatrix apply_site(const SpinMatrix& m, int j, const Orientation& n) {
    if (j < 1 || j > m.N) throw input_error("apply_site: qubit index out of range");
    SpinMatrix out(m.N);
    const int bit = 1 << (j - 1);
    for (int c = 0; c < m.L; ++c) {
        const int mj = qubit_sign(c, j);
        const cplx diag = n.nz * static_cast<double>(mj);
        const cplx flip(n.nx, n.ny * mj);  // <c^bit | sigma.n | c>
        for (int r = 0; r < m.L; ++r) {
            out.at(r, c) = m.at(r, c) * diag + m.at(r, c ^ bit) * flip;
        }
    }
    return out;
}

std::pair<SpinMatrix, SpinMatrix> bell_pair(const BellSpec& spec) {
    spec.validate();
    SpinMatrix b1 = sigma_dot(spec.N, 1, spec.pairs[0].first);
    SpinMatrix b2 = sigma_dot(spec.N, 1, spec.pairs[0].second);
    for (int k = 2; k <= spec.N; ++k) {
        const Orientation& ak = spec.pairs[static_cast<std::size_t>(k - 1)].first;
        const Orientation& akp = spec.pairs[static_cast<std::size_t>(k - 1)].second;
        SpinMatrix b1a = apply_site(b1, k, ak);
        SpinMatrix b1ap = apply_site(b1, k, akp);
        SpinMatrix b2a = apply_site(b2, k, ak);
        SpinMatrix b2ap = apply_site(b2, k, akp);
        SpinMatrix sum1 = b1a + b1ap;   // B1 (A + A')
        SpinMatrix dif1 = b1a - b1ap;   // B1 (A - A')
        SpinMatrix sum2 = b2a + b2ap;
        SpinMatrix dif2 = b2a - b2ap;
        SpinMatrix nb1(spec.N), nb2(spec.N);
        if (k % 2 == 0) {
            nb1 = 0.5 * sum1 + 0.5 * dif2;
            nb2 = cplx(-0.5) * sum2 + 0.5 * dif1;
        } else {
            nb1 = 0.5 * sum2 + 0.5 * dif1;
            nb2 = 0.5 * sum1 - 0.5 * dif2;
        }
        b1 = std::move(nb1);
        b2 = std::move(nb2);
    }
    return {std::move(b1), std::move(b2)};
}

SpinMatrix bell_product(const BellSpec& spec) {
    spec.validate();
    SpinMatrix e = SpinMatrix::identity(spec.N);
    for (int j = 1; j <= spec.N; ++j) {
        const auto& [aj, ajp] = spec.pairs[static_cast<std::size_t>(j - 1)];
        SpinMatrix ea = apply_site(e, j, aj);
        SpinMatrix eap = apply_site(e, j, ajp);
        e = ea + cplx(0.0, 1.0) * eap;
    }
    return e;
}

double spectral_norm(const SpinMatrix& m) {
    if (!m.is_hermitian(1e-10)) throw input_error("spectral_norm: matrix is not Hermitian");
    const std::vector<double> ev = hermitian_eigenvalues(m.a.data(), m.L);
    return std::max(std::fabs(ev.front()), std::fabs(ev.back()));
}

}  // namespace cvlab
