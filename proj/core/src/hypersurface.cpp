#include "trop/hypersurface.hpp"

#include <algorithm>

namespace trop {

int Hypersurface::cell_of_face(int facedim, int faceidx) const {
    for (size_t c = 0; c < dual_face.size(); ++c)
        if (dual_face[c].first == facedim && dual_face[c].second == faceidx) return (int)c;
    return -1;
}

int Hypersurface::cell_of_face_points(const std::vector<int>& pts) const {
    for (size_t c = 0; c < dual_face.size(); ++c)
        if (dual_face_points((int)c) == pts) return (int)c;
    return -1;
}

Hypersurface hypersurface(const TropPoly& p) {
    require(p.support_size() >= 2, "EmptyHypersurface",
            "single-term polynomial has empty corner locus");
    Hypersurface h;
    h.poly = p;
    h.tau = dual_subdivision(p);
    int n = p.dim;
    h.cx.ambient = n;
    h.cx.weighted_dim = n - 1;

    // Dual cell of a positive-dimensional face sigma: the set of x where all
    // terms of sigma tie and dominate every other term. The tie equations use
    // sigma's points; domination is imposed against the full support.
    for (int fd = 1; fd <= h.tau.polydim; ++fd) {
        const auto& faces = h.tau.faces[(size_t)fd];
        for (size_t fi = 0; fi < faces.size(); ++fi) {
            const auto& pts = faces[fi];
            std::vector<Halfspace> eqs, ineqs;
            const LatticeVec& e0 = h.tau.points[(size_t)pts[0]];
            const Rat& a0 = h.tau.heights[(size_t)pts[0]];
            for (size_t k = 1; k < pts.size(); ++k) {
                const LatticeVec& ek = h.tau.points[(size_t)pts[k]];
                const Rat& ak = h.tau.heights[(size_t)pts[k]];
                LatticeVec nrm = ek - e0;
                if (nrm.is_zero()) continue;
                eqs.emplace_back(nrm, a0 - ak);
            }
            for (size_t q = 0; q < h.tau.points.size(); ++q) {
                if (std::find(pts.begin(), pts.end(), (int)q) != pts.end()) continue;
                // a_q + <e_q, x> <= a_0 + <e_0, x>
                LatticeVec nrm = h.tau.points[q] - e0;
                if (nrm.is_zero()) continue;
                ineqs.emplace_back(nrm, a0 - h.tau.heights[q]);
            }
            Polyhedron cell = Polyhedron::from_halfspaces(n, std::move(ineqs), std::move(eqs));
            require(!cell.is_empty(), "Internal", "dual cell of a subdivision face is empty");
            require(cell.dim() == n - fd, "Internal", "dual cell dimension mismatch");
            h.cx.cells.push_back(std::move(cell));
            h.dual_face.emplace_back(fd, (int)fi);
        }
    }
    h.cx.rebuild_incidence();
    for (size_t c = 0; c < h.cx.cells.size(); ++c) {
        if (h.cx.cells[c].dim() != n - 1) continue;
        const auto& pts = h.dual_face_points((int)c);
        h.cx.weight[(int)c] = h.tau.edge_lattice_length(pts);
    }
    h.cx.validate();
    return h;
}

bool is_nonsingular(const TropPoly& p) {
    if (p.support_size() < 2) return false;
    return is_primitive_triangulation(dual_subdivision(p));
}

} // namespace trop
