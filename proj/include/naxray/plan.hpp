#pragma once

#include <vector>

#include "naxray/geometry.hpp"

namespace naxray {

// One measurement ray of a reconstruction plan, targeting cell z.
//
// x is the chosen vertex of the closed cell attaining the maximal distance
// from the slice origin within the not-yet-stripped region; y = (1-eps)*x
// lies in the open cell; the ray passes through y perpendicular to y
// within its slice. chords lists the ray's crossings of cells inside B_r,
// ordered along the ray.
struct PlanEntry {
    LatticePoint z;
    int layer = 0;  // 1-based, per slice
    RatVec x;
    RatVec y;
    Rat epsilon;
    Ray ray;
    std::vector<CellChord> chords;
};

// Ray family for the star-transform layer stripping: exactly one ray per
// lattice point of B_r, constructed slice by slice so that each ray
// crosses its target cell with a short chord (< log(2)/M) and stays at
// positive distance from every cell not yet reconstructed.
struct ReconstructionPlan {
    double r = 0.0;
    double M = 0.0;
    int d = 0;
    std::vector<PlanEntry> entries;

    std::vector<Ray> rays() const;
    // Entries with layer <= j, preserving order; used for prefix runs.
    ReconstructionPlan prefix(int j) const;
};

// Build the plan for radius r, norm bound M, dimension d. Entries are
// ordered by slice, then layer, then target cell. Throws DomainError on
// nonpositive r or M, or if the shrink search for some cell fails (which
// would indicate a geometry bug, not bad input).
ReconstructionPlan build_reconstruction_plan(double r, double M, int d);

}  // namespace naxray
