#pragma once

#include <optional>
#include <vector>

#include "naxray/rational.hpp"

namespace naxray {

using Int = long long;
using IntVec = std::vector<Int>;
using LatticePoint = IntVec;

Int norm2(const IntVec& z);

// z / gcd(|z_1|,...,|z_d|); preserves the sign pattern. DomainError on z = 0.
IntVec primitive_direction(const IntVec& z);

// Oriented straight line with an exact rational base point and a primitive
// integer direction. The parameter t in base + t*dir increases along the
// orientation; arclength per unit t is |dir|.
struct Ray {
    RatVec base;
    IntVec dir;

    int dim() const { return int(base.size()); }
    double dir_norm() const;
    std::vector<double> unit_dir() const;
    Ray reversed() const;
};

bool operator==(const Ray& a, const Ray& b);
bool operator<(const Ray& a, const Ray& b);  // lexicographic on (base, dir)

// One crossing of a half-open unit cell [-1/2,1/2)^d + cell by a ray.
// length = (t_exit - t_enter) * |dir| in Euclidean units.
struct CellChord {
    LatticePoint cell;
    Rat t_enter;
    Rat t_exit;
    double length = 0.0;
};

// Partition of lattice points into layers, outermost first.
struct LayerDecomposition {
    std::vector<std::vector<LatticePoint>> layers;
    double r = 0.0;
    int d = 0;
};

// All z in Z^d with |z| <= r, sorted lexicographically.
std::vector<LatticePoint> ball_lattice_points(double r, int d);

// Exact-radius variant: |z|^2 <= r2. Used for slice disks where the slice
// radius squared is rational but the radius itself is not.
std::vector<LatticePoint> lattice_points_in_ball2(const Rat& r2, int d);

// Lattice points of the ray inside the closed ball of radius r, ordered by
// increasing ray parameter. Membership and incidence are decided exactly:
// solutions of base + t*dir in Z^d form t1 + Z (dir is primitive) or are
// empty.
std::vector<LatticePoint> ray_lattice_points(const Ray& ray, double r);
std::vector<LatticePoint> ray_lattice_points_ball2(const Ray& ray, const Rat& r2);

// Exact ray parameter of a point, if the point lies on the ray.
std::optional<Rat> ray_parameter(const Ray& ray, const RatVec& point);

// The ray through lattice point z running perpendicular to (z_1, z_2)
// within the leading coordinate plane; direction e_1 when z_1 = z_2 = 0.
Ray tangent_ray(const LatticePoint& z);

// A ray through x whose primitive direction p = (floor(2r)+1, 1, 0, ...)
// satisfies |p| > 2r, so the ray meets no other lattice point of B_r.
Ray single_incidence_ray(const LatticePoint& x, double r);

// Peel B_r (cap) Z^2 into layers of equal norm, outermost first; the last
// layer is {0}. Requires d = 2 (higher dimensions are handled slice-wise).
LayerDecomposition norm_layers(double r, int d);

// Group the given points by |z|^2, descending. Exact integer comparison.
std::vector<std::vector<LatticePoint>> layers_by_norm(std::vector<LatticePoint> pts);

// Intersection of the ray with one half-open unit cell. A face shared by
// two cells belongs to the cell with the larger coordinate; zero-length
// (face- or edge-grazing) incidences yield nullopt.
std::optional<CellChord> chord_of_cell(const Ray& ray, const LatticePoint& cell);

// All positive-length cell crossings for cells within B_{r+sqrt(d)},
// sorted by entry parameter. Along any ray these chords tile its passage
// through the covered region without overlap.
std::vector<CellChord> cell_chords(const Ray& ray, double r);

// Points z of B_r (cap) Z^d from which z + s*theta leaves the ball lattice
// for every s > 0. theta is an integer direction vector.
std::vector<LatticePoint> shadow_set(double r, const IntVec& theta, int d);

// Measurement ray families, one ray per ball lattice point.
std::vector<Ray> single_incidence_family(double r, int d);
std::vector<Ray> tangent_ray_family(double r, int d);
// Restriction to points with alpha <= sqrt(z_1^2 + z_2^2) <= beta.
std::vector<Ray> tangent_ray_family_annulus(double r, int d, double alpha, double beta);

// Slice bookkeeping for d >= 3: trailing integer coordinates (z_3,...,z_d)
// with z_3^2 + ... + z_d^2 <= r^2, sorted; for d = 2 the single empty tail.
std::vector<IntVec> slice_tails(double r, int d);
// Squared radius of the 2-D slice disk: r^2 - (z_3^2 + ... + z_d^2).
Rat slice_radius2(double r, const IntVec& tail);

}  // namespace naxray
