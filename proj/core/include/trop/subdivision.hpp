#pragma once

#include <vector>

#include "trop/polyhedron.hpp"
#include "trop/troppoly.hpp"

namespace trop {

// Regular subdivision of the Newton polytope induced by the upper hull of the
// lifted support {(i, a_i)}. Faces of every dimension are stored as sorted
// point-index sets; the dual tropical hypersurface cells are indexed against
// faces of positive dimension.
struct DualSubdivision {
    int dim = 0;      // ambient lattice dimension
    int polydim = 0;  // dimension of the Newton polytope
    std::vector<LatticeVec> points;  // support, sorted
    std::vector<Rat> heights;        // lifting (coefficients)
    // faces[d] = faces of dimension d, each a sorted list of point indices
    // (every support point lying on the face, not only its vertices).
    std::vector<std::vector<std::vector<int>>> faces;

    const std::vector<std::vector<int>>& cells() const { return faces[(size_t)polydim]; }

    int point_index(const LatticeVec& p) const;
    // Vertices (extreme points) of a face given by point indices.
    std::vector<int> face_vertices(const std::vector<int>& face) const;
    // Lattice length of an edge face.
    long edge_lattice_length(const std::vector<int>& edge) const;
    // Normalized volume of a simplex cell (d! * euclidean volume).
    long normalized_volume(const std::vector<int>& cell) const;

    Polyhedron face_polytope(const std::vector<int>& face) const;
    Polyhedron newton_polytope() const;
};

DualSubdivision regular_subdivision(const std::vector<LatticeVec>& points,
                                    const std::vector<Rat>& heights);
DualSubdivision dual_subdivision(const TropPoly& p);

// True iff every cell is a simplex of normalized volume 1 (primitive /
// unimodular triangulation).
bool is_primitive_triangulation(const DualSubdivision& s);

} // namespace trop
