#pragma once

#include <cstdint>
#include <random>

#include "naxray/field.hpp"

namespace naxray {

// Seeded random source with a fully specified mapping from seed to draws,
// so identical seeds give identical phantoms on any platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }  // [0, 1)

    double gauss() {
        // Box-Muller, cosine branch only.
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    Cx gauss_c() {
        const double re = gauss();
        const double im = gauss();
        return {re, im};
    }

    Mat gauss_mat(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = gauss_c();
        return m;
    }

  private:
    std::mt19937_64 gen_;
};

// Well-conditioned multiplicative phantom: I + 0.3*G per cell with G a
// seeded complex Gaussian matrix, resampled while |det| < 0.1.
LatticeField multiplicative_phantom(int d, int n, double r, std::uint64_t seed);

// Additive phantom with ||f(z)||_F = M/2 per cell (0.5*M*G/||G||).
LatticeField additive_phantom(int d, int n, double r, double M, std::uint64_t seed);

// Regularized-delta phantom: additive base values plus positive weights in
// [0.5, 1.5) and ball radii in [0.05, rho_max).
DeltaFieldSpec delta_phantom(int d, int n, double r, double rho_max, std::uint64_t seed);

}  // namespace naxray
