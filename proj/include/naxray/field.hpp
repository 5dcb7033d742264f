#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "naxray/geometry.hpp"
#include "naxray/matrix.hpp"

namespace naxray {

enum class Regime { multiplicative, additive };

// Finitely supported map Z^d -> M(n, C). In the multiplicative regime
// unstored points are implicitly the identity and stored values must be
// invertible; in the additive regime unstored points are zero. Stored
// points lie in the closed ball of radius r.
struct LatticeField {
    int d = 0;
    int n = 0;
    double r = 0.0;
    Regime regime = Regime::multiplicative;
    std::map<LatticePoint, Mat> values;
    std::optional<double> bound;  // additive: sup of ||f(z)||_F, if promised

    Mat background() const {
        return regime == Regime::multiplicative ? Mat::identity(n) : Mat::zero(n);
    }
    const Mat* stored(const LatticePoint& z) const {
        auto it = values.find(z);
        return it == values.end() ? nullptr : &it->second;
    }
    Mat at(const LatticePoint& z) const {
        const Mat* m = stored(z);
        return m ? *m : background();
    }
    void set(const LatticePoint& z, Mat m) { values[z] = std::move(m); }

    // Enforces the support, invertibility/bound and finiteness invariants;
    // throws DomainError on violation.
    void validate() const;
};

// Additive base values plus per-point delta weights w(z) > 0 and ball
// radii rho(z) > 0 with pairwise disjoint balls: the field
// sum_z w(z) f(z) chi_{|x - z| <= rho(z)} of regularized lattice deltas.
struct DeltaFieldSpec {
    LatticeField base;
    std::map<LatticePoint, double> w;
    std::map<LatticePoint, double> rho;

    void validate() const;
};

// Measured transform values indexed by rays, with provenance metadata.
struct SinogramEntry {
    Ray ray;
    Mat value;
};

struct Sinogram {
    int d = 0;
    int n = 0;
    double r = 0.0;
    std::string transform_kind;  // "S_dis" | "S_star" | "S_con_delta"
    std::optional<std::string> plan_id;
    std::vector<SinogramEntry> rays;

    void validate() const;  // unique (base, dir), square values of order n
};

}  // namespace naxray
