#include "naxray/plan.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace naxray {

namespace {

// Squared distance from the slice origin to the farthest vertex of the
// closed unit cell around z (2-D, exact).
Rat max_corner_dist2(const LatticePoint& z2) {
    Rat best = -1;
    for (int cx = -1; cx <= 1; cx += 2)
        for (int cy = -1; cy <= 1; cy += 2) {
            const Rat vx = Rat(2 * z2[0] + cx, 2);
            const Rat vy = Rat(2 * z2[1] + cy, 2);
            const Rat d2 = vx * vx + vy * vy;
            if (d2 > best) best = d2;
        }
    return best;
}

// Lexicographically largest vertex of the cell attaining dist2.
RatVec pick_vertex(const LatticePoint& z2, const Rat& dist2) {
    RatVec best;
    for (int cx = 1; cx >= -1; cx -= 2)
        for (int cy = 1; cy >= -1; cy -= 2) {
            const Rat vx = Rat(2 * z2[0] + cx, 2);
            const Rat vy = Rat(2 * z2[1] + cy, 2);
            if (vx * vx + vy * vy != dist2) continue;
            RatVec v{vx, vy};
            if (best.empty() || v > best) best = v;
        }
    return best;
}

// Largest eps in (0, 1] such that (1-eps')*x stays in the open cell for
// all eps' in (0, eps). Each vertex coordinate has maximal magnitude over
// the cell, so shrinking toward the origin only ever meets the wall on
// the origin side.
Rat shrink_limit(const LatticePoint& z2, const RatVec& x2) {
    Rat eps0 = 1;
    for (int k = 0; k < 2; ++k) {
        const Rat l = Rat(2 * z2[k] - 1, 2);
        const Rat u = Rat(2 * z2[k] + 1, 2);
        const Rat bound = x2[k] > 0 ? 1 - l / x2[k] : 1 - u / x2[k];
        if (bound < eps0) eps0 = bound;
    }
    return eps0;
}

// Does the line through y2 perpendicular to y2 (both slice coordinates)
// stay at positive distance from the closed unit cell around cell2?
// The line is {v : <v, y2> = |y2|^2}; the closed cell misses it exactly
// when all four vertices sit strictly on one side.
bool line_misses_closed_cell(const RatVec& y2, const LatticePoint& cell2) {
    const Rat level = y2[0] * y2[0] + y2[1] * y2[1];
    int below = 0, above = 0;
    for (int cx = -1; cx <= 1; cx += 2)
        for (int cy = -1; cy <= 1; cy += 2) {
            const Rat vx = Rat(2 * cell2[0] + cx, 2);
            const Rat vy = Rat(2 * cell2[1] + cy, 2);
            const Rat s = vx * y2[0] + vy * y2[1];
            if (s < level)
                ++below;
            else if (s > level)
                ++above;
            else
                return false;  // vertex on the line
        }
    return below == 4 || above == 4;
}

std::string point_str(const IntVec& z) {
    std::string s = "(";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(z[i]);
    }
    return s + ")";
}

}  // namespace

std::vector<Ray> ReconstructionPlan::rays() const {
    std::vector<Ray> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.ray);
    return out;
}

ReconstructionPlan ReconstructionPlan::prefix(int j) const {
    ReconstructionPlan out;
    out.r = r;
    out.M = M;
    out.d = d;
    for (const auto& e : entries)
        if (e.layer <= j) out.entries.push_back(e);
    return out;
}

ReconstructionPlan build_reconstruction_plan(double r, double M, int d) {
    if (!(r > 0)) throw DomainError("plan: r must be positive");
    if (!(M > 0)) throw DomainError("plan: M must be positive");
    if (d < 2) throw DomainError("plan: d must be at least 2");

    ReconstructionPlan plan;
    plan.r = r;
    plan.M = M;
    plan.d = d;
    const double chord_cap = std::log(2.0) / M;
    const Rat ball2 = rat_of(r) * rat_of(r);

    for (const auto& tail : slice_tails(r, d)) {
        const Rat r2s = slice_radius2(r, tail);
        auto pts = lattice_points_in_ball2(r2s, 2);
        std::set<LatticePoint> remaining(pts.begin(), pts.end());

        int layer = 0;
        while (!remaining.empty()) {
            ++layer;
            Rat maxd2 = -1;
            for (const auto& z : remaining) {
                const Rat d2 = max_corner_dist2(z);
                if (d2 > maxd2) maxd2 = d2;
            }
            std::vector<LatticePoint> stratum;
            for (const auto& z : remaining)
                if (max_corner_dist2(z) == maxd2) stratum.push_back(z);

            for (const auto& z2 : stratum) {
                const RatVec x2 = pick_vertex(z2, maxd2);
                const Rat eps0 = shrink_limit(z2, x2);
                Rat eps = eps0 / 2;

                PlanEntry entry;
                bool ok = false;
                // y2 is parallel to x2, so the perpendicular direction is
                // the fixed primitive vector (-2*x2[1], 2*x2[0]) (doubled
                // vertex coordinates are integers).
                const Rat two_x0 = 2 * x2[0], two_x1 = 2 * x2[1];
                const IntVec dir2 = primitive_direction(
                    IntVec{-numerator(two_x1).convert_to<Int>(),
                           numerator(two_x0).convert_to<Int>()});

                for (int attempt = 0; attempt < 64 && !ok; ++attempt, eps /= 2) {
                    const Rat scale = 1 - eps;
                    const RatVec y2{scale * x2[0], scale * x2[1]};

                    Ray ray;
                    ray.base = y2;
                    ray.base.insert(ray.base.end(), tail.begin(), tail.end());
                    ray.dir = IntVec(d, 0);
                    ray.dir[0] = dir2[0];
                    ray.dir[1] = dir2[1];

                    LatticePoint z_full = z2;
                    z_full.insert(z_full.end(), tail.begin(), tail.end());

                    const auto own = chord_of_cell(ray, z_full);
                    if (!own || !(own->length > 0.0) || !(own->length < chord_cap)) continue;

                    bool separated = true;
                    for (const auto& other : remaining) {
                        if (other == z2) continue;
                        if (!line_misses_closed_cell(y2, other)) {
                            separated = false;
                            break;
                        }
                    }
                    if (!separated) continue;

                    entry.z = z_full;
                    entry.layer = layer;
                    entry.x = x2;
                    entry.x.insert(entry.x.end(), tail.begin(), tail.end());
                    entry.y = ray.base;
                    entry.epsilon = eps;
                    entry.ray = ray;
                    for (auto& chord : cell_chords(ray, r))
                        if (Rat(norm2(chord.cell)) <= ball2) entry.chords.push_back(std::move(chord));
                    ok = true;
                }
                if (!ok)
                    throw DomainError("plan: shrink search failed for cell " + point_str(z2) +
                                      " (this indicates a geometry bug)");
                plan.entries.push_back(std::move(entry));
            }
            for (const auto& z : stratum) remaining.erase(z);
        }
    }
    return plan;
}

}  // namespace naxray
