#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "naxray/field.hpp"
#include "naxray/parallel.hpp"
#include "naxray/plan.hpp"

namespace naxray {

// Source of transform values for the reconstructions: either an exact
// (base, dir) lookup into a sinogram, or a forward-transform closure over
// a hidden field (synthetic mode). Safe for concurrent read-only queries;
// the query counter feeds the measurement-count checks.
class MeasurementProvider {
  public:
    MeasurementProvider(int d, int n, double r) : d(d), n(n), r(r) {}
    virtual ~MeasurementProvider() = default;

    Mat measure(const Ray& ray) const {
        ++queries_;
        return lookup(ray);
    }
    std::size_t queries() const { return queries_.load(); }

    const int d;
    const int n;
    const double r;

  private:
    virtual Mat lookup(const Ray& ray) const = 0;
    mutable std::atomic<std::size_t> queries_{0};
};

class SinogramProvider final : public MeasurementProvider {
  public:
    explicit SinogramProvider(const Sinogram& sino);

  private:
    Mat lookup(const Ray& ray) const override;  // throws MissingRay
    std::map<std::pair<RatVec, IntVec>, Mat> table_;
};

class FunctionProvider final : public MeasurementProvider {
  public:
    FunctionProvider(int d, int n, double r, std::function<Mat(const Ray&)> fn)
        : MeasurementProvider(d, n, r), fn_(std::move(fn)) {}

  private:
    Mat lookup(const Ray& ray) const override { return fn_(ray); }
    std::function<Mat(const Ray&)> fn_;
};

struct Annulus {
    double alpha = 0.0;
    double beta = 0.0;
};

// Pointwise recovery from the single-incidence family: F(x) is read off
// the ray through x that meets no other ball lattice point. Consumes
// exactly one measurement per point.
LatticeField reconstruct_irrational(const MeasurementProvider& data, double r,
                                    Exec exec = Exec::serial);

// Layer stripping over tangent rays, slice by slice: outermost points are
// read off directly, inner points after peeling the ordered products of
// already-recovered factors. With an annulus only the points with
// alpha <= sqrt(z1^2+z2^2) <= beta are recovered (requires beta >= r).
LatticeField reconstruct_layers_discrete(const MeasurementProvider& data, double r,
                                         std::optional<Annulus> annulus, int d,
                                         Exec exec = Exec::serial);

// Layer stripping for the star transform over a reconstruction plan:
// f(z) = log(peeled measurement) / (own chord length), layer by layer.
// For n = 1 the principal scalar logarithm is used, which extends the
// recovery to unbounded real scalar fields; for n >= 2 the series log
// applies and throws DomainError when the norm bound was violated.
LatticeField reconstruct_star(const MeasurementProvider& data, const ReconstructionPlan& plan,
                              Exec exec = Exec::serial);

// Two scalar fields with equal star transforms on the single-ray plan of
// a radius r < 1 ball: f2 = f1 + 2*pi*i*k / chord. Demonstrates why the
// chord bound is essential for uniqueness.
struct AmbiguityExample {
    LatticeField f1;
    LatticeField f2;
    Mat s1;
    Mat s2;
    double chord = 0.0;
};

AmbiguityExample star_ambiguity_example(long long k, const ReconstructionPlan& plan);

// Round-trip bookkeeping for reports.
struct ReconReport {
    std::size_t measurements = 0;
    int layers = 0;
    double wall_time_s = 0.0;
    std::map<LatticePoint, double> residuals;  // filled when truth is known
    double max_residual = 0.0;
};

}  // namespace naxray
