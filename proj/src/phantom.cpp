#include "naxray/phantom.hpp"

#include <cmath>

namespace naxray {

namespace {

double abs_det2(const Mat& a) {
    // Small n: Laplace expansion is fine for the conditioning check.
    const int n = a.order();
    if (n == 1) return std::abs(a(0, 0));
    Mat work = a;
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(work(col, col));
        for (int row = col + 1; row < n; ++row)
            if (std::abs(work(row, col)) > best) best = std::abs(work(row, col)), pivot = row;
        if (best == 0.0) return 0.0;
        if (pivot != col)
            for (int j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
        det *= best;
        for (int row = col + 1; row < n; ++row) {
            const Cx f = work(row, col) / work(col, col);
            for (int j = col; j < n; ++j) work(row, j) -= f * work(col, j);
        }
    }
    return det;
}

}  // namespace

LatticeField multiplicative_phantom(int d, int n, double r, std::uint64_t seed) {
    Rng rng(seed);
    LatticeField out;
    out.d = d;
    out.n = n;
    out.r = r;
    out.regime = Regime::multiplicative;
    for (const auto& z : ball_lattice_points(r, d)) {
        Mat value;
        do {
            value = Mat::identity(n) + rng.gauss_mat(n) * Cx(0.3, 0.0);
        } while (abs_det2(value) < 0.1);
        out.values[z] = std::move(value);
    }
    return out;
}

LatticeField additive_phantom(int d, int n, double r, double M, std::uint64_t seed) {
    if (!(M > 0)) throw DomainError("additive phantom: M must be positive");
    Rng rng(seed);
    LatticeField out;
    out.d = d;
    out.n = n;
    out.r = r;
    out.regime = Regime::additive;
    out.bound = M;
    for (const auto& z : ball_lattice_points(r, d)) {
        Mat g;
        double nrm;
        do {
            g = rng.gauss_mat(n);
            nrm = frobenius_norm(g);
        } while (nrm == 0.0);
        out.values[z] = g * Cx(0.5 * M / nrm, 0.0);
    }
    return out;
}

DeltaFieldSpec delta_phantom(int d, int n, double r, double rho_max, std::uint64_t seed) {
    if (!(rho_max > 0.05) || rho_max > 0.5)
        throw DomainError("delta phantom: rho_max must lie in (0.05, 0.5]");
    DeltaFieldSpec spec;
    spec.base = additive_phantom(d, n, r, 1.0, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (const auto& [z, m] : spec.base.values) {
        (void)m;
        spec.w[z] = 0.5 + rng.uniform();
        spec.rho[z] = 0.05 + rng.uniform() * (rho_max - 0.05);
    }
    return spec;
}

}  // namespace naxray
