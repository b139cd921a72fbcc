#pragma once

#include <optional>
#include <vector>

#include "trop/lattice.hpp"

namespace trop {

// Closed halfspace <normal, x> <= bound with primitive integer normal.
struct Halfspace {
    LatticeVec normal;
    Rat bound;

    Halfspace() = default;
    Halfspace(LatticeVec n, Rat b);

    friend bool operator==(const Halfspace& a, const Halfspace& b) {
        return a.normal == b.normal && a.bound == b.bound;
    }
    friend bool operator<(const Halfspace& a, const Halfspace& b) {
        if (!(a.normal == b.normal)) return a.normal < b.normal;
        return a.bound < b.bound;
    }
};

// Rational polyhedron holding both canonical representations.
//
// H-side: irredundant facets plus affine-hull equations.
// V-side: vertices, primitive rays, lineality basis.
// Both sides are kept in a deterministic canonical order, so operator==
// is exact set equality of polyhedra.
//
// `exp_scale` marks the symbolic coordinate change of F^exp: bounds are kept
// in log coordinates and only interpreted as exp(bound) for rendering; the
// combinatorics stay exact. See exp_map / log_map.
class Polyhedron {
public:
    Polyhedron() = default;

    static Polyhedron from_halfspaces(int ambient, std::vector<Halfspace> ineqs,
                                      std::vector<Halfspace> eqs = {});
    static Polyhedron from_generators(int ambient, std::vector<QPoint> vertices,
                                      std::vector<LatticeVec> rays = {},
                                      std::vector<LatticeVec> lineality = {});
    static Polyhedron empty(int ambient);

    int ambient_dim() const { return ambient_; }
    int dim() const { return dim_; }  // -1 for empty
    bool is_empty() const { return dim_ < 0; }
    bool is_bounded() const { return rays_.empty() && lin_.empty(); }

    const std::vector<Halfspace>& facets() const { return facets_; }
    const std::vector<Halfspace>& equations() const { return eqs_; }
    const std::vector<QPoint>& vertices() const { return verts_; }
    const std::vector<LatticeVec>& rays() const { return rays_; }
    const std::vector<LatticeVec>& lineality() const { return lin_; }

    bool exp_scale() const { return exp_; }

    bool contains(const QPoint& p) const;
    bool contains_ray(const LatticeVec& r) const;  // recession cone membership
    bool subset_of(const Polyhedron& other) const;
    Polyhedron intersect(const Polyhedron& other) const;

    // A point in the relative interior (centroid of vertices pushed along rays).
    QPoint relint_point() const;

    // Saturated integer basis of the direction space lin(P).
    std::vector<LatticeVec> direction_lattice() const;

    // All faces of every dimension (including the polyhedron itself and
    // excluding the empty face), computed from facet-activity closure.
    std::vector<Polyhedron> all_faces() const;
    std::vector<Polyhedron> faces_of_dim(int k) const;

    friend bool operator==(const Polyhedron& a, const Polyhedron& b);
    bool same_set(const Polyhedron& other) const { return *this == other; }

    std::string str() const;

private:
    friend Polyhedron exp_map(const Polyhedron&);
    friend Polyhedron log_map(const Polyhedron&);

    int ambient_ = 0;
    int dim_ = -1;
    bool exp_ = false;
    std::vector<Halfspace> facets_;
    std::vector<Halfspace> eqs_;
    std::vector<QPoint> verts_;
    std::vector<LatticeVec> rays_;
    std::vector<LatticeVec> lin_;
};

// Symbolic coordinate change of the positive-orthant embedding: same normals,
// bounds reinterpreted as exp(bound) resp. log(bound). Mutually inverse.
Polyhedron exp_map(const Polyhedron& f);
Polyhedron log_map(const Polyhedron& f);

// Numeric value of facet bound i, applying exp() when flagged.
double bound_value(const Polyhedron& f, size_t facet_index);

// Minkowski sum {a+b}. Facet candidates come from both normal fans plus
// edge-cross products in dim 3; the result is canonicalized exactly.
Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);

// Extreme rays and lineality of the cone {x : a.x >= 0 for all rows}.
struct ConeGenerators {
    std::vector<QPoint> rays;      // extreme rays (nonzero, canonical scale)
    std::vector<QPoint> lineality; // basis of the lineality space
};
ConeGenerators dd_cone(int dim, const std::vector<QPoint>& rows);

// Membership v in cone(gens + lin): exact.
bool cone_contains(int dim, const std::vector<LatticeVec>& gen_rays,
                   const std::vector<LatticeVec>& gen_lines, const LatticeVec& v);

// Support face argmax_{x in P} <d, x>; empty polyhedron if unbounded in d.
Polyhedron support_face(const Polyhedron& p, const LatticeVec& d);

} // namespace trop
