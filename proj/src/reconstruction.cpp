#include "naxray/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "naxray/transforms.hpp"

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

std::string ray_str(const Ray& ray) {
    std::string s = "base (";
    for (std::size_t i = 0; i < ray.base.size(); ++i) {
        if (i) s += ",";
        s += rat_str(ray.base[i]);
    }
    s += ") dir (";
    for (std::size_t i = 0; i < ray.dir.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ray.dir[i]);
    }
    return s + ")";
}

}  // namespace

SinogramProvider::SinogramProvider(const Sinogram& sino)
    : MeasurementProvider(sino.d, sino.n, sino.r) {
    for (const auto& e : sino.rays) table_[{e.ray.base, e.ray.dir}] = e.value;
}

Mat SinogramProvider::lookup(const Ray& ray) const {
    auto it = table_.find({ray.base, ray.dir});
    if (it == table_.end()) throw MissingRay("sinogram has no measurement for ray " + ray_str(ray));
    return it->second;
}

LatticeField reconstruct_irrational(const MeasurementProvider& data, double r, Exec exec) {
    LatticeField out;
    out.d = data.d;
    out.n = data.n;
    out.r = r;
    out.regime = Regime::multiplicative;

    const auto pts = ball_lattice_points(r, data.d);
    std::vector<Mat> values(pts.size());
    parallel_for(exec, pts.size(), [&](std::size_t i) {
        values[i] = data.measure(single_incidence_ray(pts[i], r));
    });
    for (std::size_t i = 0; i < pts.size(); ++i) out.values[pts[i]] = std::move(values[i]);
    return out;
}

LatticeField reconstruct_layers_discrete(const MeasurementProvider& data, double r,
                                         std::optional<Annulus> annulus, int d, Exec exec) {
    if (annulus) {
        if (!(annulus->alpha <= annulus->beta))
            throw DomainError("annulus: need alpha <= beta");
        if (annulus->beta < r)
            throw DomainError("annulus: beta must be at least r");
    }
    const Rat alpha2 = annulus ? rat_of(annulus->alpha) * rat_of(annulus->alpha) : Rat(0);

    LatticeField out;
    out.d = d;
    out.n = data.n;
    out.r = r;
    out.regime = Regime::multiplicative;

    for (const auto& tail : slice_tails(r, d)) {
        const auto pts2 = lattice_points_in_ball2(slice_radius2(r, tail), 2);
        for (const auto& stratum2 : layers_by_norm(pts2)) {
            // Layers carry a single in-plane norm; stop once below alpha.
            if (annulus && Rat(norm2(stratum2.front())) < alpha2) break;

            std::vector<LatticePoint> stratum;
            for (const auto& z2 : stratum2) {
                LatticePoint z = z2;
                z.insert(z.end(), tail.begin(), tail.end());
                stratum.push_back(std::move(z));
            }
            std::vector<Mat> recovered(stratum.size());
            parallel_for(exec, stratum.size(), [&](std::size_t i) {
                const LatticePoint& z = stratum[i];
                const Ray ray = tangent_ray(z);
                const auto on_ray = ray_lattice_points(ray, r);
                // Every other ball point on the tangent ray has strictly
                // larger in-plane norm, so it was recovered in an earlier
                // layer.
                Mat left = Mat::identity(data.n), right = Mat::identity(data.n);
                bool after_z = false;
                for (const auto& y : on_ray) {
                    if (y == z) {
                        after_z = true;
                        continue;
                    }
                    const Mat* v = out.stored(y);
                    if (!v) continue;  // outside B_r: identity by the support assumption
                    if (after_z)
                        left = *v * left;
                    else
                        right = *v * right;
                }
                recovered[i] = mat_inv(left) * data.measure(ray) * mat_inv(right);
            });
            for (std::size_t i = 0; i < stratum.size(); ++i)
                out.values[stratum[i]] = std::move(recovered[i]);
        }
    }
    return out;
}

LatticeField reconstruct_star(const MeasurementProvider& data, const ReconstructionPlan& plan,
                              Exec exec) {
    LatticeField out;
    out.d = plan.d;
    out.n = data.n;
    out.r = plan.r;
    out.regime = Regime::additive;
    out.bound = plan.M;

    // Entries are ordered by slice, then layer; a layer is a barrier
    // within its slice, and slices never interact.
    std::size_t i = 0;
    while (i < plan.entries.size()) {
        std::size_t j = i;
        auto tail_of = [&](const PlanEntry& e) {
            return IntVec(e.z.begin() + 2, e.z.end());
        };
        while (j < plan.entries.size() && plan.entries[j].layer == plan.entries[i].layer &&
               tail_of(plan.entries[j]) == tail_of(plan.entries[i]))
            ++j;

        std::vector<Mat> recovered(j - i);
        parallel_for(exec, j - i, [&](std::size_t k) {
            const PlanEntry& entry = plan.entries[i + k];
            Mat left = Mat::identity(data.n), right = Mat::identity(data.n);
            bool after_own = false;
            double own_len = -1.0;
            for (const auto& chord : entry.chords) {
                if (chord.cell == entry.z) {
                    after_own = true;
                    own_len = chord.length;
                    continue;
                }
                const Mat* f = out.stored(chord.cell);
                if (!f)
                    throw DomainError("star reconstruction: chord cell " + point_str(chord.cell) +
                                      " not yet recovered (plan/data mismatch)");
                const Mat factor = mat_exp(*f * Cx(chord.length, 0.0));
                if (after_own)
                    left = factor * left;
                else
                    right = factor * right;
            }
            if (own_len <= 0.0)
                throw DomainError("star reconstruction: plan entry for " + point_str(entry.z) +
                                  " has no chord through its own cell");
            const Mat peeled = mat_inv(left) * data.measure(entry.ray) * mat_inv(right);
            if (data.n == 1) {
                // Scalar case: the principal logarithm needs no norm bound
                // and agrees with the series inside its disk.
                const Cx v = peeled(0, 0);
                if (v == Cx(0.0, 0.0))
                    throw SingularError("star reconstruction: zero measurement after peeling at " +
                                        point_str(entry.z));
                Mat f(1);
                f(0, 0) = std::log(v) / own_len;
                recovered[k] = std::move(f);
            } else {
                recovered[k] = mat_log(peeled) * Cx(1.0 / own_len, 0.0);
            }
        });
        for (std::size_t k = 0; k < j - i; ++k)
            out.values[plan.entries[i + k].z] = std::move(recovered[k]);
        i = j;
    }
    return out;
}

AmbiguityExample star_ambiguity_example(long long k, const ReconstructionPlan& plan) {
    if (k == 0) throw DomainError("ambiguity example: k must be nonzero (k = 0 gives f1 = f2)");
    if (plan.d != 2 || plan.entries.size() != 1 || norm2(plan.entries.front().z) != 0)
        throw DomainError("ambiguity example: need the single-entry plan of a radius r < 1 ball");

    const PlanEntry& entry = plan.entries.front();
    double chord = -1.0;
    for (const auto& c : entry.chords)
        if (c.cell == entry.z) chord = c.length;
    if (!(chord > 0)) throw DomainError("ambiguity example: plan has no chord through cell 0");

    AmbiguityExample ex;
    ex.chord = chord;
    for (auto* f : {&ex.f1, &ex.f2}) {
        f->d = 2;
        f->n = 1;
        f->r = plan.r;
        f->regime = Regime::additive;
    }
    Mat one(1), shifted(1);
    one(0, 0) = Cx(1.0, 0.0);
    shifted(0, 0) = Cx(1.0, 0.0) + Cx(0.0, 2.0 * std::numbers::pi * double(k)) / chord;
    ex.f1.set(entry.z, one);
    ex.f2.set(entry.z, shifted);
    ex.s1 = star_transform(ex.f1, entry.ray);
    ex.s2 = star_transform(ex.f2, entry.ray);
    return ex;
}

}  // namespace naxray
