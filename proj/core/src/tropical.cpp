#include "trop/tropical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trop {

std::vector<Polyhedron> intersection_cells(const WeightedComplex& s1,
                                           const WeightedComplex& s2) {
    require(s1.ambient == s2.ambient, "DimMismatch", "intersection of complexes");
    std::vector<Polyhedron> pieces;
    for (const auto& c1 : s1.cells) {
        for (const auto& c2 : s2.cells) {
            Polyhedron i = c1.intersect(c2);
            if (i.is_empty()) continue;
            bool dup = false;
            for (const auto& p : pieces)
                if (p == i) { dup = true; break; }
            if (!dup) pieces.push_back(std::move(i));
        }
    }
    // maximal by inclusion
    std::vector<Polyhedron> maximal;
    for (size_t i = 0; i < pieces.size(); ++i) {
        bool strictly_inside = false;
        for (size_t j = 0; j < pieces.size(); ++j) {
            if (i == j) continue;
            if (pieces[i].subset_of(pieces[j]) && !(pieces[i] == pieces[j])) {
                strictly_inside = true;
                break;
            }
        }
        if (!strictly_inside) maximal.push_back(pieces[i]);
    }
    return maximal;
}

bool transverse(const WeightedComplex& s1, const WeightedComplex& s2) {
    int n = s1.ambient;
    for (const auto& cell : intersection_cells(s1, s2)) {
        QPoint x = cell.relint_point();
        int m1 = s1.minimal_cell_containing(x);
        int m2 = s2.minimal_cell_containing(x);
        require(m1 >= 0 && m2 >= 0, "Internal", "intersection point off a complex");
        if (s1.cells[(size_t)m1].dim() != s1.weighted_dim) return false;
        if (s2.cells[(size_t)m2].dim() != s2.weighted_dim) return false;
        std::vector<LatticeVec> span = s1.cells[(size_t)m1].direction_lattice();
        for (const auto& d : s2.cells[(size_t)m2].direction_lattice()) span.push_back(d);
        std::vector<std::vector<Rat>> rows;
        for (const auto& d : span) {
            std::vector<Rat> r;
            for (long v : d.c) r.emplace_back(v);
            rows.push_back(std::move(r));
        }
        if (rank_of(std::move(rows)) != n) return false;
    }
    return true;
}

namespace {

// Weighted 1-dimensional pieces are merged into a canonical complex: pieces
// on a common line are broken at all piece endpoints, weights added on
// overlaps, and the resulting atoms plus their endpoints form the cells.
WeightedComplex assemble_curve(int ambient,
                               const std::vector<std::pair<Polyhedron, long>>& pieces) {
    // Group pieces by (line through base point, primitive direction).
    struct Atom {
        Polyhedron poly;
        long weight;
    };
    std::vector<Atom> atoms;
    std::vector<bool> used(pieces.size(), false);
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (used[i]) continue;
        // collect all pieces on the same affine line
        std::vector<size_t> group{i};
        used[i] = true;
        const Polyhedron& pi = pieces[i].first;
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            if (used[j]) continue;
            const Polyhedron& pj = pieces[j].first;
            // same line: directions parallel and pj's vertex on pi's line
            std::vector<LatticeVec> di = pi.direction_lattice();
            std::vector<LatticeVec> dj = pj.direction_lattice();
            if (di.size() != 1 || dj.size() != 1) continue;
            if (!(di[0] == dj[0]) && !(di[0] == -dj[0])) continue;
            QPoint diff = pj.vertices()[0] - pi.vertices()[0];
            QPoint dirq = qpoint_of(di[0]);
            bool on_line = true;
            // diff must be a rational multiple of dir
            Rat t;
            bool t_set = false;
            for (size_t k = 0; k < diff.size(); ++k) {
                if (dirq[k].is_zero()) {
                    if (!diff[k].is_zero()) { on_line = false; break; }
                } else if (!t_set) {
                    t = diff[k] / dirq[k];
                    t_set = true;
                } else if (diff[k] != t * dirq[k]) {
                    on_line = false;
                    break;
                }
            }
            if (on_line) {
                group.push_back(j);
                used[j] = true;
            }
        }
        // Parametrize along the line: base = pieces[group[0]].vertex[0], dir.
        QPoint base = pi.vertices()[0];
        LatticeVec dir = pi.direction_lattice()[0];
        QPoint dirq = qpoint_of(dir);
        int k0 = -1;
        for (int k = 0; k < dir.dim(); ++k)
            if (dir[k] != 0) { k0 = k; break; }
        auto param = [&](const QPoint& p) { return (p[(size_t)k0] - base[(size_t)k0]) / Rat(dir[k0]); };
        struct Seg {
            Rat lo, hi;
            bool loinf = false, hiinf = false;
            long w;
        };
        std::vector<Seg> segs;
        std::set<Rat> cuts;
        for (size_t j : group) {
            const Polyhedron& pj = pieces[j].first;
            Seg s;
            s.w = pieces[j].second;
            if (pj.vertices().size() == 2) {
                Rat a = param(pj.vertices()[0]), b = param(pj.vertices()[1]);
                s.lo = rat_min(a, b);
                s.hi = rat_max(a, b);
            } else {
                Rat a = param(pj.vertices()[0]);
                LatticeVec r = primitive(pj.rays()[0]);
                if (r == primitive(dir)) { s.lo = a; s.hiinf = true; }
                else { s.hi = a; s.loinf = true; }
            }
            if (!s.loinf) cuts.insert(s.lo);
            if (!s.hiinf) cuts.insert(s.hi);
            segs.push_back(s);
        }
        std::vector<Rat> cut(cuts.begin(), cuts.end());
        auto weight_at = [&](const Rat& lo, const Rat& hi, int mode) {
            // mode 0: [lo,hi]; 1: (-inf, hi]; 2: [lo, +inf)
            long w = 0;
            for (const auto& s : segs) {
                bool cover_lo = s.loinf || (mode != 1 && s.lo <= lo) || (mode == 1);
                if (mode == 1) cover_lo = s.loinf;
                bool cover_hi = s.hiinf || (mode != 2 && s.hi >= hi);
                if (mode == 2) cover_hi = s.hiinf;
                if (mode == 0 && !s.loinf && s.lo > lo) cover_lo = false;
                if (cover_lo && cover_hi) w += s.w;
            }
            return w;
        };
        auto emit = [&](const Rat& lo, const Rat& hi, int mode, long w) {
            if (w <= 0) return;
            std::vector<QPoint> vs;
            std::vector<LatticeVec> rs;
            if (mode == 0) {
                vs.push_back(base + lo * dirq);
                vs.push_back(base + hi * dirq);
            } else if (mode == 1) {
                vs.push_back(base + hi * dirq);
                rs.push_back(-primitive(dir));
            } else {
                vs.push_back(base + lo * dirq);
                rs.push_back(primitive(dir));
            }
            atoms.push_back({Polyhedron::from_generators(ambient, vs, rs), w});
        };
        bool has_loinf = std::any_of(segs.begin(), segs.end(), [](const Seg& s) { return s.loinf; });
        bool has_hiinf = std::any_of(segs.begin(), segs.end(), [](const Seg& s) { return s.hiinf; });
        if (cut.empty()) {
            // full line pieces are not expected here
            require(!(has_loinf && has_hiinf), "UnsupportedLineality", "full line in curve assembly");
            continue;
        }
        if (has_loinf) emit(Rat(0), cut.front(), 1, weight_at(Rat(0), cut.front(), 1));
        for (size_t t = 0; t + 1 < cut.size(); ++t)
            emit(cut[t], cut[t + 1], 0, weight_at(cut[t], cut[t + 1], 0));
        if (has_hiinf) emit(cut.back(), Rat(0), 2, weight_at(cut.back(), Rat(0), 2));
    }
    // Merge collinear consecutive atoms of equal weight.
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < atoms.size() && !merged; ++i) {
            for (size_t j = i + 1; j < atoms.size() && !merged; ++j) {
                if (atoms[i].weight != atoms[j].weight) continue;
                const Polyhedron &a = atoms[i].poly, &b = atoms[j].poly;
                std::vector<LatticeVec> da = a.direction_lattice(), db = b.direction_lattice();
                if (!(da[0] == db[0]) && !(da[0] == -db[0])) continue;
                // shared endpoint and no other branch touching it
                for (const auto& va : a.vertices()) {
                    bool shared = false;
                    for (const auto& vb : b.vertices())
                        if (va == vb) shared = true;
                    if (!shared) continue;
                    int deg = 0;
                    for (const auto& at : atoms)
                        if (at.poly.contains(va)) ++deg;
                    if (deg != 2) continue;
                    // merge: union of generators minus the shared vertex
                    std::vector<QPoint> vs;
                    std::vector<LatticeVec> rs = a.rays();
                    rs.insert(rs.end(), b.rays().begin(), b.rays().end());
                    for (const auto& v : a.vertices())
                        if (!(v == va)) vs.push_back(v);
                    for (const auto& v : b.vertices())
                        if (!(v == va)) vs.push_back(v);
                    if (vs.empty()) break;  // two opposite rays: full line, skip merge
                    Polyhedron m = Polyhedron::from_generators(a.ambient_dim(), vs, rs);
                    // only merge when genuinely collinear (m is 1-dim covering both)
                    if (m.dim() != 1 || !a.subset_of(m) || !b.subset_of(m)) break;
                    atoms[i].poly = m;
                    atoms.erase(atoms.begin() + (long)j);
                    merged = true;
                    break;
                }
            }
        }
    }

    WeightedComplex out;
    out.ambient = ambient;
    out.weighted_dim = 1;
    std::vector<QPoint> endpoints;
    for (const auto& at : atoms) {
        out.cells.push_back(at.poly);
        for (const auto& v : at.poly.vertices()) endpoints.push_back(v);
    }
    std::sort(endpoints.begin(), endpoints.end(), [](const QPoint& a, const QPoint& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    });
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
    size_t natoms = atoms.size();
    for (size_t i = 0; i < natoms; ++i) out.weight[(int)i] = atoms[i].weight;
    for (const auto& v : endpoints)
        out.cells.push_back(Polyhedron::from_generators(ambient, {v}));
    out.rebuild_incidence();
    out.validate();
    return out;
}

} // namespace

WeightedComplex intersection_curve(const WeightedComplex& s1, const WeightedComplex& s2) {
    std::vector<std::pair<Polyhedron, long>> pieces;
    for (const auto& cell : intersection_cells(s1, s2)) {
        require(cell.dim() <= 1, "NotACurve", "intersection has a 2-dimensional cell");
        if (cell.dim() == 1) pieces.emplace_back(cell, 1);
    }
    return assemble_curve(s1.ambient, pieces);
}

WeightedComplex stable_intersection(const WeightedComplex& s1, const WeightedComplex& s2) {
    require(s1.ambient == s2.ambient, "DimMismatch", "stable intersection");
    int n = s1.ambient;
    require(s1.weighted_dim + s2.weighted_dim - n == 1, "Unsupported",
            "stable_intersection implemented for curve-valued intersections");

    static const std::vector<std::vector<long>> schedule3 = {
        {1, 2, 5}, {1, 3, 7}, {2, 5, 11}, {3, 7, 17}, {5, 11, 23}, {1, 4, 9}, {2, 7, 13}};
    static const std::vector<std::vector<long>> schedule2 = {
        {1, 2}, {1, 3}, {2, 5}, {3, 7}, {5, 11}};
    const auto& schedule = n == 3 ? schedule3 : schedule2;

    for (const auto& vraw : schedule) {
        LatticeVec v(std::vector<long>(vraw.begin(), vraw.end()));
        // Genericity: v must avoid span(lin1+lin2) for every non-spanning
        // pair of cells.
        bool generic = true;
        for (const auto& c1 : s1.cells) {
            for (const auto& c2 : s2.cells) {
                std::vector<LatticeVec> span = c1.direction_lattice();
                for (const auto& d : c2.direction_lattice()) span.push_back(d);
                std::vector<std::vector<Rat>> rows;
                for (const auto& d : span) {
                    std::vector<Rat> r;
                    for (long x : d.c) r.emplace_back(x);
                    rows.push_back(std::move(r));
                }
                int rk = rank_of(rows);
                if (rk == n) continue;
                std::vector<Rat> vr;
                for (long x : v.c) vr.emplace_back(x);
                rows.push_back(vr);
                if (rank_of(rows) == rk) { generic = false; break; }
            }
            if (!generic) break;
        }
        if (!generic) continue;

        std::vector<std::pair<Polyhedron, long>> pieces;
        for (int f1 : s1.facet_indices()) {
            for (int f2 : s2.facet_indices()) {
                const Polyhedron& F1 = s1.cells[(size_t)f1];
                const Polyhedron& F2 = s2.cells[(size_t)f2];
                std::vector<LatticeVec> L1 = F1.direction_lattice();
                std::vector<LatticeVec> L2 = F2.direction_lattice();
                std::vector<LatticeVec> both = L1;
                both.insert(both.end(), L2.begin(), L2.end());
                std::vector<std::vector<Rat>> rows;
                for (const auto& d : both) {
                    std::vector<Rat> r;
                    for (long x : d.c) r.emplace_back(x);
                    rows.push_back(std::move(r));
                }
                if (rank_of(std::move(rows)) != n) continue;
                Polyhedron I = F1.intersect(F2);
                if (I.is_empty() || I.dim() != 1) continue;
                // Displacement feasibility: v in TC(F1) - TC(F2) at relint(I).
                QPoint x = I.relint_point();
                auto tangent_gens = [&](const Polyhedron& F) {
                    std::vector<Halfspace> ineqs;
                    std::vector<Halfspace> eqs = F.equations();
                    for (const auto& h : F.facets())
                        if (dot(h.normal, x) == h.bound) ineqs.emplace_back(h.normal, Rat(0));
                    std::vector<Halfspace> eqs0;
                    for (const auto& e : eqs) eqs0.emplace_back(e.normal, Rat(0));
                    Polyhedron tc = Polyhedron::from_halfspaces(n, ineqs, eqs0);
                    return tc;
                };
                Polyhedron tc1 = tangent_gens(F1);
                Polyhedron tc2 = tangent_gens(F2);
                std::vector<LatticeVec> gens, lines;
                for (const auto& r : tc1.rays()) gens.push_back(r);
                for (const auto& l : tc1.lineality()) lines.push_back(l);
                for (const auto& r : tc2.rays()) gens.push_back(-r);
                for (const auto& l : tc2.lineality()) lines.push_back(l);
                if (!cone_contains(n, gens, lines, v)) continue;
                long w1 = s1.weight.count(f1) ? s1.weight.at(f1) : 1;
                long w2 = s2.weight.count(f2) ? s2.weight.at(f2) : 1;
                std::vector<LatticeVec> stack = L1;
                stack.insert(stack.end(), L2.begin(), L2.end());
                long idx = full_lattice_index(stack, n);
                pieces.emplace_back(I, w1 * w2 * idx);
            }
        }
        WeightedComplex out = assemble_curve(n, pieces);
        require(check_balancing(out), "Internal", "stable intersection is not balanced");
        return out;
    }
    fail("NoGenericDirection", "translation schedule exhausted");
}

} // namespace trop
