#include "trop/subdivision.hpp"

#include <algorithm>
#include <set>

namespace trop {

int DualSubdivision::point_index(const LatticeVec& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || !(*it == p)) return -1;
    return (int)(it - points.begin());
}

Polyhedron DualSubdivision::face_polytope(const std::vector<int>& face) const {
    std::vector<QPoint> vs;
    for (int i : face) vs.push_back(qpoint_of(points[(size_t)i]));
    return Polyhedron::from_generators(dim, vs);
}

Polyhedron DualSubdivision::newton_polytope() const {
    std::vector<QPoint> vs;
    for (const auto& p : points) vs.push_back(qpoint_of(p));
    return Polyhedron::from_generators(dim, vs);
}

std::vector<int> DualSubdivision::face_vertices(const std::vector<int>& face) const {
    Polyhedron poly = face_polytope(face);
    std::vector<int> out;
    for (int i : face)
        for (const auto& v : poly.vertices())
            if (qpoint_of(points[(size_t)i]) == v) { out.push_back(i); break; }
    return out;
}

long DualSubdivision::edge_lattice_length(const std::vector<int>& edge) const {
    std::vector<int> vs = face_vertices(edge);
    require(vs.size() == 2, "NotAnEdge", "edge_lattice_length");
    return gcd_all(points[(size_t)vs[1]] - points[(size_t)vs[0]]);
}

long DualSubdivision::normalized_volume(const std::vector<int>& cell) const {
    std::vector<int> vs = face_vertices(cell);
    if ((int)vs.size() != polydim + 1) return -1;  // not a simplex
    // Determinant of edge vectors from vs[0]; for polydim < dim this is the
    // lattice index within the saturated direction lattice.
    std::vector<LatticeVec> edges;
    for (size_t i = 1; i < vs.size(); ++i)
        edges.push_back(points[(size_t)vs[i]] - points[(size_t)vs[0]]);
    if (polydim == dim) return full_lattice_index(edges, dim);
    // Lower-dimensional simplex: express edges in the saturated basis of
    // their span and take |det| of the coordinate matrix.
    std::vector<LatticeVec> basis = saturated_lattice_basis(edges, dim);
    std::vector<std::vector<Rat>> coords;
    for (const auto& e : edges) {
        size_t k = basis.size();
        std::vector<std::vector<Rat>> sys((size_t)dim, std::vector<Rat>(k + 1, Rat(0)));
        for (size_t r = 0; r < (size_t)dim; ++r) {
            for (size_t c = 0; c < k; ++c) sys[r][c] = Rat(basis[c][(int)r]);
            sys[r][k] = Rat(e[(int)r]);
        }
        rref(sys);
        std::vector<Rat> sol(k, Rat(0));
        for (size_t r = 0; r < sys.size(); ++r) {
            size_t lead = k + 1;
            for (size_t c = 0; c < k; ++c)
                if (!sys[r][c].is_zero()) { lead = c; break; }
            if (lead < k) sol[lead] = sys[r][k];
        }
        coords.emplace_back(sol);
    }
    // |det coords| via fraction-free elimination on the square matrix.
    size_t k = basis.size();
    require(coords.size() == k, "Internal", "simplex volume dimensions");
    Rat det(1);
    for (size_t c = 0; c < k; ++c) {
        size_t piv = c;
        while (piv < k && coords[piv][c].is_zero()) ++piv;
        if (piv == k) return 0;
        if (piv != c) { std::swap(coords[piv], coords[c]); det = -det; }
        det *= coords[c][c];
        for (size_t r = c + 1; r < k; ++r) {
            Rat f = coords[r][c] / coords[c][c];
            for (size_t j = c; j < k; ++j) coords[r][j] -= f * coords[c][j];
        }
    }
    return rat_abs(det).to_long();
}

DualSubdivision regular_subdivision(const std::vector<LatticeVec>& pts_in,
                                    const std::vector<Rat>& heights_in) {
    require(pts_in.size() == heights_in.size(), "DimMismatch", "points vs heights");
    require(!pts_in.empty(), "EmptySupport", "regular_subdivision of nothing");
    DualSubdivision s;
    s.dim = pts_in[0].dim();
    // sort points, carry heights
    std::vector<size_t> order(pts_in.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pts_in[a] < pts_in[b]; });
    for (size_t i : order) {
        if (!s.points.empty() && s.points.back() == pts_in[i])
            fail("DuplicatePoint", "duplicate support point " + pts_in[i].str());
        s.points.push_back(pts_in[i]);
        s.heights.push_back(heights_in[i]);
    }

    // Upper hull: conv{(p, h(p))} + ray (0,...,0,-1); facets with positive
    // last normal coordinate are the upper faces.
    int d = s.dim;
    std::vector<QPoint> lifted;
    for (size_t i = 0; i < s.points.size(); ++i) {
        QPoint q = qpoint_of(s.points[i]);
        q.push_back(s.heights[i]);
        lifted.push_back(q);
    }
    LatticeVec down(std::vector<long>((size_t)(d + 1), 0));
    down[d] = -1;
    Polyhedron hull = Polyhedron::from_generators(d + 1, lifted, {down});

    s.polydim = s.newton_polytope().dim();
    s.faces.assign((size_t)s.polydim + 1, {});

    std::set<std::vector<int>> cells;
    auto cell_of_plane = [&](const LatticeVec& normal, const Rat& bound) {
        std::vector<int> cell;
        for (size_t i = 0; i < lifted.size(); ++i)
            if (dot(normal, lifted[i]) == bound) cell.push_back((int)i);
        return cell;
    };
    if (hull.dim() == d + 1) {
        for (const auto& f : hull.facets())
            if (f.normal[d] > 0) cells.insert(cell_of_plane(f.normal, f.bound));
    } else {
        // Degenerate lifting: all points on one affine plane. The single cell
        // is everything; it is an upper face.
        std::vector<int> all;
        for (size_t i = 0; i < s.points.size(); ++i) all.push_back((int)i);
        cells.insert(all);
    }

    // Faces of each cell via polytope face enumeration, recorded as
    // point-index subsets.
    std::vector<std::set<std::vector<int>>> byd((size_t)s.polydim + 1);
    for (const auto& cell : cells) {
        Polyhedron cp = s.face_polytope(cell);
        require(cp.dim() == s.polydim, "Internal", "subdivision cell of wrong dimension");
        for (const auto& face : cp.all_faces()) {
            std::vector<int> idx;
            for (int i : cell)
                if (face.contains(qpoint_of(s.points[(size_t)i]))) idx.push_back(i);
            byd[(size_t)face.dim()].insert(idx);
        }
    }
    for (int k = 0; k <= s.polydim; ++k)
        s.faces[(size_t)k].assign(byd[(size_t)k].begin(), byd[(size_t)k].end());
    return s;
}

DualSubdivision dual_subdivision(const TropPoly& p) {
    std::vector<LatticeVec> pts;
    std::vector<Rat> hs;
    for (const auto& [e, c] : p.terms) {
        pts.push_back(e);
        hs.push_back(c);
    }
    return regular_subdivision(pts, hs);
}

bool is_primitive_triangulation(const DualSubdivision& s) {
    for (const auto& cell : s.cells()) {
        if ((int)cell.size() != s.polydim + 1) return false;
        if (s.normalized_volume(cell) != 1) return false;
    }
    return true;
}

} // namespace trop
