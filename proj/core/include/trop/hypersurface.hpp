#pragma once

#include "trop/complex.hpp"
#include "trop/subdivision.hpp"

namespace trop {

// Tropical hypersurface (corner locus of a max-plus polynomial) together with
// its dual subdivision and the cell<->face duality. Curves in R^2 and
// surfaces in R^3 are the instances used here; the construction is generic.
struct Hypersurface {
    TropPoly poly;
    DualSubdivision tau;
    WeightedComplex cx;
    // cell index -> (dual face dim, index into tau.faces[dim])
    std::vector<std::pair<int, int>> dual_face;

    const std::vector<int>& dual_face_points(int cell) const {
        const auto& [d, i] = dual_face[(size_t)cell];
        return tau.faces[(size_t)d][(size_t)i];
    }
    // Cell dual to a given subdivision face; -1 if none.
    int cell_of_face(int facedim, int faceidx) const;
    int cell_of_face_points(const std::vector<int>& pts) const;
};

// Corner locus with facet weights = lattice lengths of dual edges.
// Errors with "EmptyHypersurface" for single-term input.
Hypersurface hypersurface(const TropPoly& p);

// Dual subdivision is a primitive (unimodular) triangulation.
bool is_nonsingular(const TropPoly& p);

} // namespace trop
