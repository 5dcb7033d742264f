#pragma once

#include <complex>
#include <vector>

#include "naxray/errors.hpp"

namespace naxray {

using Cx = std::complex<double>;

// Dense n-by-n complex matrix, row major. The order n is a runtime
// parameter so the same code paths serve scalar (n = 1) and matrix
// tomography. Values are immutable in spirit: every operation returns a
// fresh matrix and never aliases its inputs.
class Mat {
  public:
    Mat() = default;
    explicit Mat(int n) : n_(n), a_(std::size_t(n) * n, Cx(0.0, 0.0)) {}
    Mat(int n, std::vector<Cx> entries);

    static Mat identity(int n);
    static Mat zero(int n) { return Mat(n); }

    int order() const { return n_; }

    Cx& operator()(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
    const Cx& operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }

    const std::vector<Cx>& data() const { return a_; }

    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat operator*(Cx s) const;

    bool operator==(const Mat& rhs) const { return n_ == rhs.n_ && a_ == rhs.a_; }

    bool finite() const;

  private:
    int n_ = 0;
    std::vector<Cx> a_;
};

inline Mat operator*(Cx s, const Mat& m) { return m * s; }

// sqrt(Trace(a^dagger a)); zero iff a is the zero matrix.
double frobenius_norm(const Mat& a);

// Matrix exponential by scaling and squaring with a truncated Taylor
// series. Relative accuracy ~1e-13 for ||a||_F <= 10; exp(0) = I exactly.
Mat mat_exp(const Mat& a);

// Principal logarithm by the alternating series in (a - I). Requires
// ||a - I||_F < 1; throws DomainError otherwise (the caller must shrink
// the chord length or the norm bound).
Mat mat_log(const Mat& a);

// Inverse by Gauss-Jordan elimination with partial pivoting. Throws
// SingularError when a pivot falls below 1e-300 in magnitude.
Mat mat_inv(const Mat& a);

}  // namespace naxray
