#include "naxray/transforms.hpp"

#include <algorithm>
#include <cmath>
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

}  // namespace

Mat discrete_xray(const LatticeField& field, const Ray& ray) {
    Mat acc = Mat::identity(field.n);
    for (const auto& y : ray_lattice_points(ray, field.r)) {
        const Mat* v = field.stored(y);
        if (v) acc = *v * acc;  // later points multiply on the left
    }
    return acc;
}

Cx discrete_scalar_xray(const LatticeField& field, const Ray& ray) {
    if (field.n != 1) throw DomainError("discrete_scalar_xray: field order must be 1");
    Cx sum = 0.0;
    for (const auto& y : ray_lattice_points(ray, field.r)) {
        const Mat* v = field.stored(y);
        if (v) sum += (*v)(0, 0);
    }
    return sum;
}

Cx weighted_xray(const WeightFn& weight, const LatticeField& u, const Ray& ray) {
    if (u.n != 1) throw DomainError("weighted_xray: field order must be 1");
    Cx sum = 0.0;
    for (const auto& y : ray_lattice_points(ray, u.r)) {
        const Mat* v = u.stored(y);
        if (v) sum += weight(y, ray.dir) * (*v)(0, 0);
    }
    return sum;
}

LatticeField make_triangular_field(const LatticeField& w1, const LatticeField& w2,
                                   const LatticeField& u) {
    for (const auto* f : {&w1, &w2})
        for (const auto& [z, m] : f->values)
            if (m(0, 0) == Cx(0.0, 0.0))
                throw DomainError("triangular field: zero scalar weight at " + point_str(z));

    LatticeField out;
    out.d = u.d;
    out.n = 2;
    out.r = std::max(u.r, std::max(w1.r, w2.r));
    out.regime = Regime::multiplicative;
    auto touch = [&](const LatticePoint& z) {
        if (out.values.count(z)) return;
        Mat m = Mat::identity(2);
        m(0, 0) = w1.at(z)(0, 0);
        m(0, 1) = w2.at(z)(0, 0) * u.at(z)(0, 0);
        out.values[z] = std::move(m);
    };
    for (const auto& [z, m] : w1.values) (void)m, touch(z);
    for (const auto& [z, m] : w2.values) (void)m, touch(z);
    for (const auto& [z, m] : u.values) (void)m, touch(z);
    return out;
}

WeightFn induced_weight(const LatticeField& w1, const LatticeField& w2, IntVec theta) {
    theta = primitive_direction(theta);
    // Forward product runs over y + k*theta, k >= 1; w1 is 1 outside its
    // support ball, so k is bounded by the ball crossing.
    const double r = w1.r;
    return [w1, w2, theta, r](const LatticePoint& y, const IntVec& dir) -> Cx {
        if (primitive_direction(dir) != theta)
            throw DomainError("induced weight: ray direction does not match theta");
        Cx w = w2.at(y)(0, 0);
        const double reach = std::sqrt(double(norm2(y))) + r;
        const Int k_max = Int(std::ceil(reach / std::sqrt(double(norm2(theta))))) + 1;
        LatticePoint p(y.size());
        for (Int k = 1; k <= k_max; ++k) {
            for (std::size_t i = 0; i < y.size(); ++i) p[i] = y[i] + k * theta[i];
            const Mat* v = w1.stored(p);
            if (v) w *= (*v)(0, 0);
        }
        return w;
    };
}

std::pair<LatticeField, LatticeField> factorize_weight(const WeightFn& weight,
                                                       const IntVec& theta, double r, int d) {
    const IntVec dir = primitive_direction(theta);
    LatticeField w1, w2;
    for (auto* f : {&w1, &w2}) {
        f->d = d;
        f->n = 1;
        f->r = r;
        f->regime = Regime::multiplicative;
    }
    auto scalar = [](Cx v) {
        Mat m(1);
        m(0, 0) = v;
        return m;
    };

    // Group ball points into lines along theta; within each line the
    // points are consecutive steps of the primitive direction.
    auto ball = ball_lattice_points(r, d);
    std::map<LatticePoint, std::vector<LatticePoint>> lines;  // key: anchor point
    for (const auto& z : ball) {
        // Walk back to the first ball point on this line.
        LatticePoint anchor = z;
        while (true) {
            LatticePoint prev(anchor.size());
            for (std::size_t i = 0; i < anchor.size(); ++i) prev[i] = anchor[i] - dir[i];
            if (std::binary_search(ball.begin(), ball.end(), prev))
                anchor = prev;
            else
                break;
        }
        lines[anchor].push_back(z);
    }
    for (auto& [anchor, pts] : lines) {
        // Order along theta: multiples of dir from the anchor.
        std::sort(pts.begin(), pts.end(), [&](const LatticePoint& a, const LatticePoint& b) {
            Int ta = 0, tb = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                ta += (a[i] - anchor[i]) * dir[i];
                tb += (b[i] - anchor[i]) * dir[i];
            }
            return ta < tb;
        });
        const std::size_t n = pts.size();
        std::vector<Cx> W(n);
        for (std::size_t k = 0; k < n; ++k) {
            W[k] = weight(pts[k], dir);
            if (W[k] == Cx(0.0, 0.0))
                throw DomainError("factorize_weight: zero weight at " + point_str(pts[k]));
        }
        // w2 carries the last point's weight; w1 telescopes the rest.
        // The first point's w1 is unconstrained and stays at 1.
        w2.set(pts[n - 1], scalar(W[n - 1]));
        if (n >= 2) w1.set(pts[n - 1], scalar(W[n - 2]));
        for (std::size_t k = 1; k + 1 < n; ++k) w1.set(pts[k], scalar(W[k - 1] / W[k]));
    }
    return {std::move(w1), std::move(w2)};
}

LatticeField lift_delta_field(const DeltaFieldSpec& spec) {
    LatticeField out;
    out.d = spec.base.d;
    out.n = spec.base.n;
    out.r = spec.base.r;
    out.regime = Regime::multiplicative;
    for (const auto& [z, f] : spec.base.values)
        out.values[z] = mat_exp(f * Cx(2.0 * spec.rho.at(z) * spec.w.at(z), 0.0));
    return out;
}

Mat continuous_xray_delta(const DeltaFieldSpec& spec, const Ray& ray) {
    struct Hit {
        Rat t;
        const LatticePoint* z;
    };
    std::vector<Hit> hits;
    for (const auto& [z, f] : spec.base.values) {
        (void)f;
        RatVec zq(z.begin(), z.end());
        if (auto t = ray_parameter(ray, zq)) {
            hits.push_back({*t, &z});
            continue;
        }
        // Off the ray: require the ball around z to be missed entirely.
        // dist^2(z, line) = |v|^2 - (v.dir)^2 / |dir|^2, exact.
        RatVec v(zq.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = zq[i] - ray.base[i];
        Rat vdotp = 0, vv = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            vdotp += v[i] * ray.dir[i];
            vv += v[i] * v[i];
        }
        const Rat dist2 = vv - vdotp * vdotp / Rat(norm2(ray.dir));
        const Rat rho2 = rat_of(spec.rho.at(z)) * rat_of(spec.rho.at(z));
        if (dist2 <= rho2)
            throw OffCenterClip("ray clips the ball at " + point_str(z) + " off center");
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
    Mat acc = Mat::identity(spec.base.n);
    for (const auto& h : hits) {
        const double chord = 2.0 * spec.rho.at(*h.z);
        acc = mat_exp(spec.base.values.at(*h.z) * Cx(spec.w.at(*h.z) * chord, 0.0)) * acc;
    }
    return acc;
}

Mat star_transform(const LatticeField& field, const Ray& ray) {
    Mat acc = Mat::identity(field.n);
    for (const auto& chord : cell_chords(ray, field.r)) {
        const Mat* v = field.stored(chord.cell);
        if (v) acc = mat_exp(*v * Cx(chord.length, 0.0)) * acc;
    }
    return acc;
}

Mat continuous_xray_numeric(const std::function<Mat(const std::vector<double>&)>& evaluator,
                            const Ray& ray, double delta, double t_min, double t_max) {
    if (!(delta > 0)) throw DomainError("numeric transform: delta must be positive");
    const auto u = ray.unit_dir();
    std::vector<double> base(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) base[i] = rat_double(ray.base[i]);

    const long steps = long(std::ceil((t_max - t_min) / delta));
    std::vector<double> x(u.size());
    Mat acc;
    bool first = true;
    for (long i = 0; i < steps; ++i) {
        const double t = t_min + (double(i) + 0.5) * delta;
        for (std::size_t k = 0; k < u.size(); ++k) x[k] = base[k] + t * u[k];
        const Mat f = evaluator(x);
        if (first) {
            acc = Mat::identity(f.order());
            first = false;
        }
        acc = mat_exp(f * Cx(delta, 0.0)) * acc;
    }
    if (first) throw DomainError("numeric transform: empty integration window");
    return acc;
}

std::pair<Cx, Cx> attenuation_cell_factors(Cx a, double delta) {
    if (a == Cx(0.0, 0.0)) return {Cx(1.0, 0.0), Cx(-delta, 0.0)};
    const Cx w1 = std::exp(-a * delta);
    return {w1, (w1 - Cx(1.0, 0.0)) / a};
}

std::vector<Mat> project_rays_serial(const std::vector<Ray>& rays, const RayOp& op) {
    std::vector<Mat> out(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) out[i] = op(rays[i]);
    return out;
}

std::vector<Mat> project_rays_openmp(const std::vector<Ray>& rays, const RayOp& op) {
    std::vector<Mat> out(rays.size());
    parallel_for(Exec::openmp, rays.size(), [&](std::size_t i) { out[i] = op(rays[i]); });
    return out;
}

std::vector<Mat> project_rays(const std::vector<Ray>& rays, const RayOp& op, Exec exec) {
    return exec == Exec::openmp ? project_rays_openmp(rays, op) : project_rays_serial(rays, op);
}

Sinogram forward_sinogram(const LatticeField& field, const std::vector<Ray>& rays,
                          const std::string& kind, Exec exec) {
    RayOp op;
    if (kind == "S_dis")
        op = [&field](const Ray& ray) { return discrete_xray(field, ray); };
    else if (kind == "S_star")
        op = [&field](const Ray& ray) { return star_transform(field, ray); };
    else
        throw DomainError("forward: unsupported transform kind '" + kind + "'");

    Sinogram sino;
    sino.d = field.d;
    sino.n = field.n;
    sino.r = field.r;
    sino.transform_kind = kind;
    auto values = project_rays(rays, op, exec);
    sino.rays.reserve(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) sino.rays.push_back({rays[i], values[i]});
    return sino;
}

}  // namespace naxray
