#pragma once

#include <map>
#include <vector>

#include "trop/polyhedron.hpp"

namespace trop {

// Rational polyhedral complex with positive integer weights on its
// top-dimensional ("facet") cells. Cells of all dimensions are stored;
// boundary[] links each cell to its codimension-1 faces inside the complex.
struct WeightedComplex {
    int ambient = 0;
    int weighted_dim = 0;                 // dimension of the weighted cells
    std::vector<Polyhedron> cells;        // all dimensions, canonical order
    std::vector<std::vector<int>> boundary;
    std::map<int, long> weight;           // facet cell index -> weight > 0

    std::vector<int> cells_of_dim(int d) const;
    std::vector<int> facet_indices() const { return cells_of_dim(weighted_dim); }

    // Indices of weighted facets whose closure contains the given cell.
    std::vector<int> facets_adjacent_to(int cell) const;

    // Cell of minimal dimension whose relative interior contains p
    // (-1 when p is not in the support).
    int minimal_cell_containing(const QPoint& p) const;
    bool supports(const QPoint& p) const { return minimal_cell_containing(p) >= 0; }

    // Rebuilds boundary incidence from scratch (subset tests).
    void rebuild_incidence();

    // Structural sanity: weights positive, facets have the weighted dim.
    void validate() const;
};

// Balancing at every codimension-1 cell: the weighted sum of primitive facet
// directions vanishes in the quotient lattice by the cell's direction space.
bool check_balancing(const WeightedComplex& c);

// Unbounded-edge census of a 1-dimensional complex: total weight per
// primitive ray direction.
std::map<LatticeVec, long> ray_census(const WeightedComplex& c);

// Union of supports as a set test helper: same support (mutual subset on cells).
bool same_support(const WeightedComplex& a, const WeightedComplex& b);

} // namespace trop
