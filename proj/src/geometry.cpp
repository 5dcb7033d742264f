#include "naxray/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace naxray {

namespace {

// Enumerate the integer box [-m, m]^d and keep |z|^2 <= r2.
void collect_ball(const Rat& r2, int d, std::vector<LatticePoint>& out) {
    if (r2 < 0) return;
    const Int m = Int(std::floor(std::sqrt(rat_double(r2)))) + 1;
    LatticePoint z(d, 0);
    std::vector<Int> lo(d, -m), hi(d, m);
    // odometer loop
    for (int i = 0; i < d; ++i) z[i] = lo[i];
    while (true) {
        if (Rat(norm2(z)) <= r2) out.push_back(z);
        int i = d - 1;
        while (i >= 0 && z[i] == hi[i]) {
            z[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++z[i];
    }
}

}  // namespace

Int norm2(const IntVec& z) {
    Int s = 0;
    for (Int c : z) s += c * c;
    return s;
}

IntVec primitive_direction(const IntVec& z) {
    Int g = 0;
    for (Int c : z) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) throw DomainError("primitive_direction: zero vector");
    IntVec out = z;
    for (Int& c : out) c /= g;
    return out;
}

double Ray::dir_norm() const { return std::sqrt(double(norm2(dir))); }

std::vector<double> Ray::unit_dir() const {
    const double n = dir_norm();
    std::vector<double> u(dir.size());
    for (std::size_t i = 0; i < dir.size(); ++i) u[i] = double(dir[i]) / n;
    return u;
}

Ray Ray::reversed() const {
    Ray out = *this;
    for (Int& c : out.dir) c = -c;
    return out;
}

bool operator==(const Ray& a, const Ray& b) { return a.base == b.base && a.dir == b.dir; }

bool operator<(const Ray& a, const Ray& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.dir < b.dir;
}

std::vector<LatticePoint> ball_lattice_points(double r, int d) {
    if (!(r > 0)) throw DomainError("ball_lattice_points: r must be positive");
    if (d < 2) throw DomainError("ball_lattice_points: d must be at least 2");
    std::vector<LatticePoint> out;
    collect_ball(rat_of(r) * rat_of(r), d, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticePoint> lattice_points_in_ball2(const Rat& r2, int d) {
    std::vector<LatticePoint> out;
    collect_ball(r2, d, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticePoint> ray_lattice_points(const Ray& ray, double r) {
    return ray_lattice_points_ball2(ray, rat_of(r) * rat_of(r));
}

std::vector<LatticePoint> ray_lattice_points_ball2(const Ray& ray, const Rat& r2) {
    const int d = ray.dim();
    int pivot = -1;
    for (int i = 0; i < d; ++i)
        if (ray.dir[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot < 0) throw DomainError("ray_lattice_points: zero direction");

    // Lattice incidences satisfy base[pivot] + t*dir[pivot] in Z. Scanning
    // one unit period of t covers all residues; if some t1 works, the full
    // solution set is t1 + Z because dir is primitive.
    const Rat b = ray.base[pivot];
    const Int p = ray.dir[pivot];
    const Int ap = p < 0 ? -p : p;
    std::optional<Rat> t1;
    const BigInt k0 = rat_ceil(p > 0 ? b : b - Rat(ap) * 1);
    for (Int j = 0; j < ap && !t1; ++j) {
        const Rat t = (Rat(k0 + j) - b) / p;
        bool integral = true;
        for (int i = 0; i < d && integral; ++i) {
            const Rat coord = ray.base[i] + t * ray.dir[i];
            if (denominator(coord) != 1) integral = false;
        }
        if (integral) t1 = t;
    }
    std::vector<LatticePoint> out;
    if (!t1) return out;

    // First incidence as an exact integer point; the rest step by dir.
    LatticePoint y0(d);
    for (int i = 0; i < d; ++i) {
        const Rat coord = ray.base[i] + *t1 * ray.dir[i];
        y0[i] = numerator(coord).convert_to<Int>();
    }

    // |y0 + s*dir|^2 is an integer quadratic in s; bound the s window in
    // floating point with slack and test each candidate exactly.
    const Int q2 = norm2(ray.dir);
    Int q1 = 0;
    for (int i = 0; i < d; ++i) q1 += y0[i] * ray.dir[i];
    const double rd = std::sqrt(std::max(0.0, rat_double(r2)));
    const double center = -double(q1) / double(q2);
    const double half = rd / std::sqrt(double(q2)) + 2.0;
    const Int s_lo = Int(std::floor(center - half)), s_hi = Int(std::ceil(center + half));
    for (Int s = s_lo; s <= s_hi; ++s) {
        const Int n2 = norm2(y0) + 2 * s * q1 + s * s * q2;
        if (Rat(n2) <= r2) {
            LatticePoint y(d);
            for (int i = 0; i < d; ++i) y[i] = y0[i] + s * ray.dir[i];
            out.push_back(y);
        }
    }
    // Candidates were scanned in increasing s, i.e. increasing t.
    return out;
}

std::optional<Rat> ray_parameter(const Ray& ray, const RatVec& point) {
    const int d = ray.dim();
    int pivot = -1;
    for (int i = 0; i < d; ++i)
        if (ray.dir[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot < 0) throw DomainError("ray_parameter: zero direction");
    const Rat t = (point[pivot] - ray.base[pivot]) / ray.dir[pivot];
    for (int i = 0; i < d; ++i)
        if (ray.base[i] + t * ray.dir[i] != point[i]) return std::nullopt;
    return t;
}

Ray tangent_ray(const LatticePoint& z) {
    const int d = int(z.size());
    Ray ray;
    ray.base.assign(z.begin(), z.end());
    ray.dir.assign(d, 0);
    if (z[0] == 0 && z[1] == 0) {
        ray.dir[0] = 1;  // fixed in-plane direction for the plane origin
    } else {
        IntVec v(d, 0);
        v[0] = -z[1];
        v[1] = z[0];
        ray.dir = primitive_direction(v);
    }
    return ray;
}

Ray single_incidence_ray(const LatticePoint& x, double r) {
    if (!(r > 0)) throw DomainError("single_incidence_ray: r must be positive");
    const int d = int(x.size());
    const Int m = (rat_floor(2 * rat_of(r))).convert_to<Int>() + 1;
    Ray ray;
    ray.base.assign(x.begin(), x.end());
    ray.dir.assign(d, 0);
    ray.dir[0] = m;
    ray.dir[1] = 1;  // gcd(m, 1) = 1, |dir| > 2r
    return ray;
}

std::vector<std::vector<LatticePoint>> layers_by_norm(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        const Int na = norm2(a), nb = norm2(b);
        if (na != nb) return na > nb;
        return a < b;
    });
    std::vector<std::vector<LatticePoint>> layers;
    for (std::size_t i = 0; i < pts.size();) {
        std::size_t j = i;
        while (j < pts.size() && norm2(pts[j]) == norm2(pts[i])) ++j;
        layers.emplace_back(pts.begin() + i, pts.begin() + j);
        i = j;
    }
    return layers;
}

LayerDecomposition norm_layers(double r, int d) {
    if (d != 2) throw DomainError("norm_layers: defined for d = 2 (use slices otherwise)");
    LayerDecomposition out;
    out.r = r;
    out.d = d;
    out.layers = layers_by_norm(ball_lattice_points(r, d));
    return out;
}

std::optional<CellChord> chord_of_cell(const Ray& ray, const LatticePoint& cell) {
    const int d = ray.dim();
    // Intersect half-open slabs cell_i - 1/2 <= x_i < cell_i + 1/2.
    bool has_lo = false, has_hi = false;
    Rat t_lo, t_hi;
    for (int i = 0; i < d; ++i) {
        const Rat l = Rat(2 * cell[i] - 1, 2);
        const Rat u = Rat(2 * cell[i] + 1, 2);
        const Int p = ray.dir[i];
        if (p == 0) {
            if (!(l <= ray.base[i] && ray.base[i] < u)) return std::nullopt;
            continue;
        }
        Rat a = (l - ray.base[i]) / p;
        Rat b = (u - ray.base[i]) / p;
        if (p < 0) std::swap(a, b);
        if (!has_lo || a > t_lo) {
            t_lo = a;
            has_lo = true;
        }
        if (!has_hi || b < t_hi) {
            t_hi = b;
            has_hi = true;
        }
    }
    if (!has_lo || !(t_lo < t_hi)) return std::nullopt;
    CellChord chord;
    chord.cell = cell;
    chord.t_enter = t_lo;
    chord.t_exit = t_hi;
    chord.length = rat_double(t_hi - t_lo) * ray.dir_norm();
    return chord;
}

std::vector<CellChord> cell_chords(const Ray& ray, double r) {
    const int d = ray.dim();
    const double rr = r + std::sqrt(double(d));
    const Rat r2 = rat_of(rr) * rat_of(rr);
    std::vector<CellChord> out;
    for (const auto& cell : lattice_points_in_ball2(r2, d))
        if (auto chord = chord_of_cell(ray, cell)) out.push_back(std::move(*chord));
    std::sort(out.begin(), out.end(),
              [](const CellChord& a, const CellChord& b) { return a.t_enter < b.t_enter; });
    return out;
}

std::vector<LatticePoint> shadow_set(double r, const IntVec& theta, int d) {
    if (norm2(theta) == 0) throw DomainError("shadow_set: zero direction");
    const IntVec p = primitive_direction(theta);
    const Rat r2 = rat_of(r) * rat_of(r);
    const auto ball = lattice_points_in_ball2(r2, d);
    // z + s*theta hits the lattice only at integer multiples of the
    // primitive step; |z + s*p| > r once s|p| > 2r.
    const Int s_max = Int(std::floor(2.0 * r / std::sqrt(double(norm2(p))))) + 1;
    std::vector<LatticePoint> out;
    for (const auto& z : ball) {
        bool shadow = true;
        LatticePoint y = z;
        for (Int s = 1; s <= s_max && shadow; ++s) {
            for (int i = 0; i < d; ++i) y[i] = z[i] + s * p[i];
            if (Rat(norm2(y)) <= r2) shadow = false;
        }
        if (shadow) out.push_back(z);
    }
    return out;
}

std::vector<Ray> single_incidence_family(double r, int d) {
    std::vector<Ray> rays;
    for (const auto& x : ball_lattice_points(r, d)) rays.push_back(single_incidence_ray(x, r));
    return rays;
}

std::vector<Ray> tangent_ray_family(double r, int d) {
    std::vector<Ray> rays;
    for (const auto& z : ball_lattice_points(r, d)) rays.push_back(tangent_ray(z));
    return rays;
}

std::vector<Ray> tangent_ray_family_annulus(double r, int d, double alpha, double beta) {
    if (!(0 <= alpha && alpha <= beta))
        throw DomainError("annulus: need 0 <= alpha <= beta");
    const Rat a2 = rat_of(alpha) * rat_of(alpha);
    const Rat b2 = rat_of(beta) * rat_of(beta);
    std::vector<Ray> rays;
    for (const auto& z : ball_lattice_points(r, d)) {
        const Rat plane2 = Rat(z[0] * z[0] + z[1] * z[1]);
        if (a2 <= plane2 && plane2 <= b2) rays.push_back(tangent_ray(z));
    }
    return rays;
}

std::vector<IntVec> slice_tails(double r, int d) {
    if (d == 2) return {IntVec{}};
    std::vector<IntVec> tails;
    for (const auto& t : lattice_points_in_ball2(rat_of(r) * rat_of(r), d - 2))
        tails.push_back(t);
    return tails;
}

Rat slice_radius2(double r, const IntVec& tail) {
    Rat r2 = rat_of(r) * rat_of(r);
    for (Int c : tail) r2 -= Rat(c) * Rat(c);
    return r2;
}

}  // namespace naxray
