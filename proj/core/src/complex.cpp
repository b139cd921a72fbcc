#include "trop/complex.hpp"

#include <algorithm>
#include <optional>

namespace trop {

std::vector<int> WeightedComplex::cells_of_dim(int d) const {
    std::vector<int> out;
    for (size_t i = 0; i < cells.size(); ++i)
        if (cells[i].dim() == d) out.push_back((int)i);
    return out;
}

std::vector<int> WeightedComplex::facets_adjacent_to(int cell) const {
    std::vector<int> out;
    for (int f : facet_indices())
        if (cells[(size_t)cell].subset_of(cells[(size_t)f])) out.push_back(f);
    return out;
}

int WeightedComplex::minimal_cell_containing(const QPoint& p) const {
    int best = -1;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (!cells[i].contains(p)) continue;
        if (best < 0 || cells[i].dim() < cells[(size_t)best].dim()) best = (int)i;
    }
    return best;
}

void WeightedComplex::rebuild_incidence() {
    boundary.assign(cells.size(), {});
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = 0; j < cells.size(); ++j) {
            if (i == j) continue;
            if (cells[j].dim() == cells[i].dim() - 1 && cells[j].subset_of(cells[i]))
                boundary[i].push_back((int)j);
        }
}

void WeightedComplex::validate() const {
    for (const auto& [idx, w] : weight) {
        require(w > 0, "NonPositiveWeight", "facet weight must be positive");
        require(cells[(size_t)idx].dim() == weighted_dim, "BadFacetDim",
                "weighted cell of wrong dimension");
    }
}

bool check_balancing(const WeightedComplex& c) {
    for (int h : c.cells_of_dim(c.weighted_dim - 1)) {
        const Polyhedron& hc = c.cells[(size_t)h];
        std::vector<int> adj = c.facets_adjacent_to(h);
        if (adj.empty()) continue;
        QuotientMap qm = quotient_by(hc.direction_lattice(), c.ambient);
        QPoint ph = hc.relint_point();
        LatticeVec sum(std::vector<long>(qm.proj.size(), 0));
        for (int f : adj) {
            const Polyhedron& fc = c.cells[(size_t)f];
            // Primitive generator of the facet direction in the quotient,
            // oriented from the face into the facet.
            QPoint pf = fc.relint_point();
            std::vector<LatticeVec> fdirs = fc.direction_lattice();
            LatticeVec img(std::vector<long>(qm.proj.size(), 0));
            for (const auto& d : fdirs) {
                LatticeVec q = qm.apply(d);
                if (!q.is_zero()) { img = q; break; }
            }
            if (img.is_zero()) continue;  // facet direction inside the face span
            img = primitive(img);
            // Orientation via the rational displacement relint(F)-relint(H).
            QPoint disp = pf - ph;
            Rat o;
            for (size_t j = 0; j < qm.proj.size(); ++j) {
                Rat coord;
                for (size_t k = 0; k < disp.size(); ++k) coord += qm.proj[j][k] * disp[k];
                o += coord * Rat(img[(int)j]);
            }
            if (o.sign() < 0) img = -img;
            require(o.sign() != 0, "Internal", "facet does not leave its boundary face");
            auto it = c.weight.find(f);
            long w = it == c.weight.end() ? 1 : it->second;
            sum = sum + w * img;
        }
        if (!sum.is_zero()) return false;
    }
    return true;
}

std::map<LatticeVec, long> ray_census(const WeightedComplex& c) {
    require(c.weighted_dim == 1, "NotACurve", "ray_census needs a 1-dimensional complex");
    std::map<LatticeVec, long> census;
    for (int f : c.facet_indices()) {
        const Polyhedron& e = c.cells[(size_t)f];
        require(e.lineality().empty(), "UnsupportedLineality",
                "census of a full-line cell is ambiguous");
        if (e.rays().empty()) continue;
        require(e.rays().size() == 1, "Internal", "1-cell with several rays");
        LatticeVec d = primitive(e.rays()[0]);
        auto it = c.weight.find(f);
        census[d] += it == c.weight.end() ? 1 : it->second;
    }
    return census;
}

namespace {

// Parameter interval of a 1-cell on the oriented line base + t*dir.
// Intervals are [lo, hi] with open infinities flagged.
struct ParamInterval {
    Rat lo, hi;
    bool lo_inf = false, hi_inf = false;
};

// Extracts the interval of edge F on the line through `base` with primitive
// direction `dir`; nullopt when F is not contained in that line.
std::optional<ParamInterval> interval_on_line(const Polyhedron& f, const QPoint& base,
                                              const LatticeVec& dir) {
    int k = -1;
    for (int i = 0; i < dir.dim(); ++i)
        if (dir[i] != 0) { k = i; break; }
    auto param_of = [&](const QPoint& p) -> std::optional<Rat> {
        Rat t = (p[(size_t)k] - base[(size_t)k]) / Rat(dir[k]);
        for (size_t j = 0; j < p.size(); ++j)
            if (p[j] != base[j] + t * Rat(dir[(int)j])) return std::nullopt;
        return t;
    };
    ParamInterval iv;
    if (f.dim() == 1) {
        if (f.vertices().size() == 2) {
            auto t0 = param_of(f.vertices()[0]);
            auto t1 = param_of(f.vertices()[1]);
            if (!t0 || !t1) return std::nullopt;
            iv.lo = rat_min(*t0, *t1);
            iv.hi = rat_max(*t0, *t1);
            return iv;
        }
        if (f.vertices().size() == 1 && f.rays().size() == 1) {
            auto t0 = param_of(f.vertices()[0]);
            if (!t0) return std::nullopt;
            LatticeVec r = primitive(f.rays()[0]);
            if (r == dir) { iv.lo = *t0; iv.hi_inf = true; return iv; }
            if (r == -dir) { iv.hi = *t0; iv.lo_inf = true; return iv; }
            return std::nullopt;
        }
        return std::nullopt;
    }
    if (f.dim() == 0) {
        auto t0 = param_of(f.vertices()[0]);
        if (!t0) return std::nullopt;
        iv.lo = iv.hi = *t0;
        return iv;
    }
    return std::nullopt;
}

// Does the union of `pieces` cover `target` exactly as intervals?
bool intervals_cover(const ParamInterval& target, std::vector<ParamInterval> pieces) {
    std::sort(pieces.begin(), pieces.end(), [](const ParamInterval& a, const ParamInterval& b) {
        if (a.lo_inf != b.lo_inf) return a.lo_inf;
        return a.lo < b.lo;
    });
    bool cur_set = false, cur_inf = false;
    Rat cur;  // current covered prefix endpoint
    auto starts_before = [&](const ParamInterval& p) {
        if (p.lo_inf) return true;
        if (!cur_set) return target.lo_inf ? false : p.lo <= target.lo;
        return cur_inf ? false : p.lo <= cur;
    };
    for (const auto& p : pieces) {
        if (cur_inf) return true;
        if (!starts_before(p)) {
            if (!cur_set) continue;
            break;
        }
        if (p.hi_inf) { cur_inf = true; cur_set = true; continue; }
        if (!cur_set || cur < p.hi) { cur = p.hi; cur_set = true; }
    }
    if (target.hi_inf) return cur_inf;
    if (cur_inf) return true;
    return cur_set && cur >= target.hi;
}

bool curve_covered_by(const WeightedComplex& x, const WeightedComplex& y) {
    for (int f : x.facet_indices()) {
        const Polyhedron& cf = x.cells[(size_t)f];
        require(cf.lineality().empty(), "UnsupportedLineality", "support comparison");
        QPoint base;
        LatticeVec dir;
        if (cf.vertices().size() == 2) {
            base = cf.vertices()[0];
            QPoint d = cf.vertices()[1] - cf.vertices()[0];
            std::vector<LatticeVec> dl = cf.direction_lattice();
            dir = dl[0];
        } else {
            base = cf.vertices()[0];
            dir = primitive(cf.rays()[0]);
        }
        auto target = interval_on_line(cf, base, dir);
        require(target.has_value(), "Internal", "edge not on its own line");
        std::vector<ParamInterval> pieces;
        for (int g : y.facet_indices()) {
            auto iv = interval_on_line(y.cells[(size_t)g], base, dir);
            if (iv) pieces.push_back(*iv);
        }
        if (!intervals_cover(*target, std::move(pieces))) return false;
    }
    return true;
}

} // namespace

bool same_support(const WeightedComplex& a, const WeightedComplex& b) {
    if (a.ambient != b.ambient) return false;
    require(a.weighted_dim == 1 && b.weighted_dim == 1, "NotACurve",
            "same_support is implemented for 1-dimensional complexes");
    return curve_covered_by(a, b) && curve_covered_by(b, a);
}

} // namespace trop
