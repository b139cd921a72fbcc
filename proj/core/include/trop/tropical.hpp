#pragma once

#include "trop/hypersurface.hpp"

namespace trop {

// Transversality: every maximal cell of the set intersection lies in the
// relative interior of facets of both complexes whose direction spaces span
// the ambient space.
bool transverse(const WeightedComplex& s1, const WeightedComplex& s2);

// Maximal cells of the set intersection (pairwise cell intersections,
// filtered by inclusion).
std::vector<Polyhedron> intersection_cells(const WeightedComplex& s1,
                                           const WeightedComplex& s2);

// Set intersection of two surfaces in R^3 assembled as a 1-dimensional
// weighted complex (weights all 1; use stable_intersection for
// multiplicities). Errors if some maximal intersection cell is not a curve.
WeightedComplex intersection_curve(const WeightedComplex& s1, const WeightedComplex& s2);

// Stable intersection via the fan displacement rule with a fixed schedule of
// generic translation directions ((1,2,5),(1,3,7),...). Deterministic;
// errors with "NoGenericDirection" when the schedule is exhausted.
WeightedComplex stable_intersection(const WeightedComplex& s1, const WeightedComplex& s2);

} // namespace trop
