#include "naxray/field.hpp"

#include <cmath>
#include <set>
#include <string>

namespace naxray {

namespace {

std::string point_str(const IntVec& z) {
    std::string s = "(";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(z[i]);
    }
    return s + ")";
}

// |det| via the pivoted elimination's pivot magnitudes.
double abs_det(const Mat& a) {
    Mat work = a;
    const int n = a.order();
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

void LatticeField::validate() const {
    if (d < 2) throw DomainError("field: d must be at least 2");
    if (n < 1) throw DomainError("field: n must be at least 1");
    if (!(r > 0)) throw DomainError("field: r must be positive");
    const Rat r2 = rat_of(r) * rat_of(r);
    for (const auto& [z, m] : values) {
        if (int(z.size()) != d) throw DomainError("field: point dimension mismatch at " + point_str(z));
        if (m.order() != n) throw DomainError("field: matrix order mismatch at " + point_str(z));
        if (!m.finite()) throw DomainError("field: non-finite value at " + point_str(z));
        if (Rat(norm2(z)) > r2)
            throw DomainError("field: support point " + point_str(z) + " outside B_r");
        if (regime == Regime::multiplicative && abs_det(m) == 0.0)
            throw DomainError("field: singular value at " + point_str(z));
        if (regime == Regime::additive && bound && frobenius_norm(m) > *bound + 1e-12)
            throw DomainError("field: value at " + point_str(z) + " exceeds the bound M");
    }
}

void DeltaFieldSpec::validate() const {
    base.validate();
    if (base.regime != Regime::additive) throw DomainError("delta spec: base must be additive");
    for (const auto& [z, m] : base.values) {
        (void)m;
        auto wi = w.find(z), ri = rho.find(z);
        if (wi == w.end() || !(wi->second > 0))
            throw DomainError("delta spec: missing or nonpositive weight at " + point_str(z));
        if (ri == rho.end() || !(ri->second > 0))
            throw DomainError("delta spec: missing or nonpositive radius at " + point_str(z));
    }
    // Pairwise disjoint balls: |z1 - z2| > rho1 + rho2, checked exactly.
    for (auto i = base.values.begin(); i != base.values.end(); ++i)
        for (auto j = std::next(i); j != base.values.end(); ++j) {
            IntVec diff(base.d);
            for (int k = 0; k < base.d; ++k) diff[k] = i->first[k] - j->first[k];
            const Rat sum = rat_of(rho.at(i->first)) + rat_of(rho.at(j->first));
            if (Rat(norm2(diff)) <= sum * sum)
                throw DomainError("delta spec: balls at " + point_str(i->first) + " and " +
                                  point_str(j->first) + " are not disjoint");
        }
}

void Sinogram::validate() const {
    if (d < 2 || n < 1 || !(r > 0)) throw DomainError("sinogram: bad metadata");
    if (transform_kind != "S_dis" && transform_kind != "S_star" && transform_kind != "S_con_delta")
        throw DomainError("sinogram: unknown transform kind '" + transform_kind + "'");
    std::set<std::pair<RatVec, IntVec>> seen;
    for (const auto& e : rays) {
        if (int(e.ray.base.size()) != d || int(e.ray.dir.size()) != d)
            throw DomainError("sinogram: ray dimension mismatch");
        if (e.value.order() != n) throw DomainError("sinogram: value order mismatch");
        if (!seen.insert({e.ray.base, e.ray.dir}).second)
            throw DomainError("sinogram: duplicate ray record");
    }
}

}  // namespace naxray
