#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "naxray/field.hpp"
#include "naxray/parallel.hpp"

namespace naxray {

// Ordered product of the field values over the ray's lattice points:
// factors are taken in increasing ray parameter and multiply on the left,
// so the last-crossed point contributes the leftmost factor. Identity when
// the ray misses the support.
Mat discrete_xray(const LatticeField& field, const Ray& ray);

// Sum of a scalar (n = 1) additive field over the ray's lattice points.
Cx discrete_scalar_xray(const LatticeField& field, const Ray& ray);

// W(y, theta): weight at lattice point y for rays of direction theta.
using WeightFn = std::function<Cx(const LatticePoint&, const IntVec&)>;

// Sum of W(y, dir) * u(y) over the ray's lattice points.
Cx weighted_xray(const WeightFn& weight, const LatticeField& u, const Ray& ray);

// Upper-triangular 2x2 field z -> [[w1(z), w2(z)*u(z)], [0, 1]] built from
// three scalar fields; w1, w2 must be nonvanishing on their support.
LatticeField make_triangular_field(const LatticeField& w1, const LatticeField& w2,
                                   const LatticeField& u);

// Weight induced by the triangular reduction along direction theta:
// W(y) = w2(y) * prod of w1 over the lattice points strictly after y on
// the ray through y (an empty product is 1).
WeightFn induced_weight(const LatticeField& w1, const LatticeField& w2, IntVec theta);

// Inverse of induced_weight with w2 == 1 off the shadow set: recovers
// scalar fields (w1, w2) reproducing the given nonvanishing weight on the
// ball lattice. Throws DomainError on a zero weight value.
std::pair<LatticeField, LatticeField> factorize_weight(const WeightFn& weight,
                                                       const IntVec& theta, double r, int d);

// F(z) = exp(2 rho(z) w(z) f(z)) on the support, identity elsewhere.
LatticeField lift_delta_field(const DeltaFieldSpec& spec);

// Continuous transform of the regularized-delta field along a ray that
// passes through each support ball's center or misses it entirely; the
// per-ball chord is then the diameter 2 rho(z). Throws OffCenterClip when
// the ray clips a ball off its center (checked exactly).
Mat continuous_xray_delta(const DeltaFieldSpec& spec, const Ray& ray);

// Ordered product of exp(chord length * f(cell)) over the cells the ray
// crosses; equals the continuous transform of the piecewise-constant
// extension of f.
Mat star_transform(const LatticeField& field, const Ray& ray);

// Step-product oracle for the continuous transform: midpoint samples on a
// uniform arclength grid anchored at t_min, later factors on the left.
// First-order accurate in delta.
Mat continuous_xray_numeric(const std::function<Mat(const std::vector<double>&)>& evaluator,
                            const Ray& ray, double delta, double t_min, double t_max);

// Per-step attenuation factors (w1, w2) with w1 = exp(-a*delta) and
// w2 = (exp(-a*delta) - 1)/a; at a = 0 the removable limit w2 = -delta.
std::pair<Cx, Cx> attenuation_cell_factors(Cx a, double delta);

// Forward projection of a ray family. The OpenMP kernel and the serial
// reference run the same per-ray operation.
using RayOp = std::function<Mat(const Ray&)>;
std::vector<Mat> project_rays_serial(const std::vector<Ray>& rays, const RayOp& op);
std::vector<Mat> project_rays_openmp(const std::vector<Ray>& rays, const RayOp& op);
std::vector<Mat> project_rays(const std::vector<Ray>& rays, const RayOp& op, Exec exec);

// Assemble a sinogram by projecting the family with the named transform
// ("S_dis" -> discrete_xray, "S_star" -> star_transform).
Sinogram forward_sinogram(const LatticeField& field, const std::vector<Ray>& rays,
                          const std::string& kind, Exec exec);

}  // namespace naxray
