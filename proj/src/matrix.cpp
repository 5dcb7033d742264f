#include "naxray/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace naxray {

Mat::Mat(int n, std::vector<Cx> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != std::size_t(n) * n)
        throw DomainError("matrix entry count does not match order " + std::to_string(n));
}

Mat Mat::identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::operator*(const Mat& rhs) const {
    Mat out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Cx aik = (*this)(i, k);
            if (aik == Cx(0.0, 0.0)) continue;
            for (int j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    Mat out = *this;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += rhs.a_[i];
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    Mat out = *this;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= rhs.a_[i];
    return out;
}

Mat Mat::operator*(Cx s) const {
    Mat out = *this;
    for (auto& v : out.a_) v *= s;
    return out;
}

bool Mat::finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double frobenius_norm(const Mat& a) {
    double s = 0.0;
    for (const auto& v : a.data()) s += std::norm(v);
    return std::sqrt(s);
}

Mat mat_exp(const Mat& a) {
    const int n = a.order();
    if (!a.finite()) throw DomainError("matrix exp: non-finite entries");
    // Scale so the series argument has Frobenius norm <= 0.5.
    int squarings = 0;
    double nrm = frobenius_norm(a);
    double scale = 1.0;
    while (nrm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    Mat arg = a * Cx(scale, 0.0);

    Mat sum = Mat::identity(n);
    Mat term = Mat::identity(n);
    for (int m = 1; m <= 64; ++m) {
        term = term * arg * Cx(1.0 / m, 0.0);
        sum = sum + term;
        if (frobenius_norm(term) < 1e-17) break;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

Mat mat_log(const Mat& a) {
    const int n = a.order();
    const Mat delta = a - Mat::identity(n);
    const double nd = frobenius_norm(delta);
    if (!(nd < 1.0))
        throw DomainError("matrix log: ||a - I||_F = " + std::to_string(nd) +
                          " is outside the unit disk");
    Mat sum(n);
    Mat power = delta;
    // ||delta^m|| <= nd^m, so the term criterion terminates for nd < 1.
    const long max_terms = 4'000'000;
    for (long m = 1;; ++m) {
        const double sign = (m % 2 == 1) ? 1.0 : -1.0;
        sum = sum + power * Cx(sign / double(m), 0.0);
        if (frobenius_norm(power) / double(m) < 1e-15) break;
        if (m >= max_terms)
            throw DomainError("matrix log series did not converge (||a - I||_F too close to 1)");
        power = power * delta;
    }
    return sum;
}

Mat mat_inv(const Mat& a) {
    const int n = a.order();
    Mat work = a;
    Mat inv = Mat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(work(col, col));
        for (int row = col + 1; row < n; ++row) {
            const double mag = std::abs(work(row, col));
            if (mag > best) {
                best = mag;
                pivot = row;
            }
        }
        if (best < 1e-300)
            throw SingularError("matrix inverse: pivot below 1e-300 at column " +
                                std::to_string(col));
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Cx inv_pivot = Cx(1.0, 0.0) / work(col, col);
        for (int j = 0; j < n; ++j) {
            work(col, j) *= inv_pivot;
            inv(col, j) *= inv_pivot;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            const Cx factor = work(row, col);
            if (factor == Cx(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) {
                work(row, j) -= factor * work(col, j);
                inv(row, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace naxray
