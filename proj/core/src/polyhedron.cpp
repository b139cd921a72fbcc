#include "trop/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace trop {

namespace {

bool qpoint_less(const QPoint& a, const QPoint& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

Rat qdot(const QPoint& a, const QPoint& b) {
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Scale a rational vector to a primitive integer vector (same direction).
QPoint primitive_scale(const QPoint& v) {
    mpz_class l = 1;
    for (const auto& x : v) l = lcm(l, x.den());
    mpz_class g = 0;
    std::vector<mpz_class> w;
    for (const auto& x : v) {
        mpz_class t = x.num() * (l / x.den());
        g = gcd(g, t);
        w.push_back(t);
    }
    QPoint out;
    if (g == 0) {
        for (size_t i = 0; i < v.size(); ++i) out.emplace_back(0);
        return out;
    }
    for (auto& t : w) out.push_back(Rat(mpz_class(t / g)));
    return out;
}

LatticeVec to_lattice(const QPoint& v) {
    LatticeVec r;
    for (const auto& x : v) r.c.push_back(x.to_long());
    return r;
}

struct DDRay {
    QPoint v;
    std::vector<bool> zero;  // zero-set over processed constraint indices
};

} // namespace

ConeGenerators dd_cone(int dim, const std::vector<QPoint>& rows_in) {
    std::vector<QPoint> rows = rows_in;
    for (auto& r : rows) r = primitive_scale(r);
    std::sort(rows.begin(), rows.end(), qpoint_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    // Drop all-zero rows.
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const QPoint& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](const Rat& x) { return x.is_zero(); });
                              }),
               rows.end());

    std::vector<QPoint> lin;
    for (int i = 0; i < dim; ++i) {
        QPoint e((size_t)dim, Rat(0));
        e[(size_t)i] = Rat(1);
        lin.push_back(e);
    }
    std::vector<DDRay> rays;
    size_t ncons = rows.size();

    for (size_t ci = 0; ci < ncons; ++ci) {
        const QPoint& a = rows[ci];
        // Lineality step.
        size_t piv = lin.size();
        for (size_t i = 0; i < lin.size(); ++i)
            if (!qdot(a, lin[i]).is_zero()) { piv = i; break; }
        if (piv != lin.size()) {
            QPoint l0 = lin[piv];
            Rat al0 = qdot(a, l0);
            if (al0.sign() < 0) {
                for (auto& x : l0) x = -x;
                al0 = -al0;
            }
            std::vector<QPoint> nl;
            for (size_t i = 0; i < lin.size(); ++i) {
                if (i == piv) continue;
                Rat f = qdot(a, lin[i]) / al0;
                QPoint w = lin[i];
                for (size_t j = 0; j < w.size(); ++j) w[j] -= f * l0[j];
                nl.push_back(primitive_scale(w));
            }
            lin = std::move(nl);
            for (auto& r : rays) {
                Rat f = qdot(a, r.v) / al0;
                if (!f.is_zero()) {
                    for (size_t j = 0; j < r.v.size(); ++j) r.v[j] -= f * l0[j];
                    r.v = primitive_scale(r.v);
                }
                r.zero.push_back(true);
            }
            DDRay nr;
            nr.v = primitive_scale(l0);
            nr.zero.assign(ci, true);  // lineality was orthogonal to all previous rows
            nr.zero.push_back(false);
            rays.push_back(std::move(nr));
            continue;
        }
        // Ray step.
        std::vector<size_t> pos, neg, zer;
        std::vector<Rat> val(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = qdot(a, rays[i].v);
            int s = val[i].sign();
            if (s > 0) pos.push_back(i);
            else if (s < 0) neg.push_back(i);
            else zer.push_back(i);
        }
        if (neg.empty()) {
            for (size_t i = 0; i < rays.size(); ++i) rays[i].zero.push_back(val[i].is_zero());
            continue;
        }
        std::vector<DDRay> next;
        for (size_t i : pos) {
            DDRay r = rays[i];
            r.zero.push_back(false);
            next.push_back(std::move(r));
        }
        for (size_t i : zer) {
            DDRay r = rays[i];
            r.zero.push_back(true);
            next.push_back(std::move(r));
        }
        for (size_t p : pos) {
            for (size_t n : neg) {
                // Combinatorial adjacency: no third ray's zero-set contains
                // the common zero-set of p and n.
                std::vector<bool> common(ci, false);
                for (size_t k = 0; k < ci; ++k)
                    common[k] = rays[p].zero[k] && rays[n].zero[k];
                bool adjacent = true;
                for (size_t t = 0; t < rays.size(); ++t) {
                    if (t == p || t == n) continue;
                    bool contains_all = true;
                    for (size_t k = 0; k < ci; ++k)
                        if (common[k] && !rays[t].zero[k]) { contains_all = false; break; }
                    if (contains_all) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                QPoint w(rays[p].v.size(), Rat(0));
                for (size_t j = 0; j < w.size(); ++j)
                    w[j] = val[p] * rays[n].v[j] - val[n] * rays[p].v[j];
                DDRay nr;
                nr.v = primitive_scale(w);
                nr.zero = common;
                nr.zero.push_back(true);
                next.push_back(std::move(nr));
            }
        }
        // Dedup identical vectors.
        std::sort(next.begin(), next.end(),
                  [](const DDRay& x, const DDRay& y) { return qpoint_less(x.v, y.v); });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const DDRay& x, const DDRay& y) { return x.v == y.v; }),
                   next.end());
        rays = std::move(next);
    }

    ConeGenerators out;
    for (auto& r : rays) out.rays.push_back(r.v);
    for (auto& l : lin) out.lineality.push_back(l);
    std::sort(out.rays.begin(), out.rays.end(), qpoint_less);
    std::sort(out.lineality.begin(), out.lineality.end(), qpoint_less);
    return out;
}

Halfspace::Halfspace(LatticeVec n, Rat b) : normal(std::move(n)), bound(std::move(b)) {
    require(!normal.is_zero(), "ZeroDirection", "halfspace with zero normal");
    long g = gcd_all(normal);
    if (g > 1) {
        for (auto& x : normal.c) x /= g;
        bound = bound / Rat(g);
    }
}

Polyhedron Polyhedron::empty(int ambient) {
    Polyhedron p;
    p.ambient_ = ambient;
    p.dim_ = -1;
    return p;
}

namespace {

// Homogenized H-rows for the cone {(x0,x) : x0 >= 0, b*x0 - a.x >= 0, ...}.
std::vector<QPoint> homog_rows(int ambient, const std::vector<Halfspace>& ineqs,
                               const std::vector<Halfspace>& eqs) {
    std::vector<QPoint> rows;
    QPoint x0row((size_t)(ambient + 1), Rat(0));
    x0row[0] = Rat(1);
    rows.push_back(x0row);
    auto add = [&](const Halfspace& h, int sgn) {
        QPoint r((size_t)(ambient + 1), Rat(0));
        r[0] = Rat(sgn) * h.bound;
        for (int j = 0; j < ambient; ++j) r[(size_t)(j + 1)] = Rat(-sgn * h.normal[j]);
        rows.push_back(std::move(r));
    };
    for (const auto& h : ineqs) add(h, +1);
    for (const auto& h : eqs) { add(h, +1); add(h, -1); }
    return rows;
}

struct VRep {
    std::vector<QPoint> verts;
    std::vector<LatticeVec> rays;
    std::vector<LatticeVec> lin;
};

VRep vrep_from_cone(int ambient, const ConeGenerators& cg) {
    VRep v;
    for (const auto& r : cg.rays) {
        if (r[0].sign() > 0) {
            QPoint p;
            for (int j = 1; j <= ambient; ++j) p.push_back(r[(size_t)j] / r[0]);
            v.verts.push_back(std::move(p));
        } else {
            QPoint p(r.begin() + 1, r.end());
            p = primitive_scale(p);
            if (std::any_of(p.begin(), p.end(), [](const Rat& x) { return !x.is_zero(); }))
                v.rays.push_back(to_lattice(p));
        }
    }
    for (const auto& l : cg.lineality) {
        QPoint p(l.begin() + 1, l.end());
        p = primitive_scale(p);
        if (std::any_of(p.begin(), p.end(), [](const Rat& x) { return !x.is_zero(); }))
            v.lin.push_back(to_lattice(p));
    }
    std::sort(v.verts.begin(), v.verts.end(), qpoint_less);
    std::sort(v.rays.begin(), v.rays.end());
    v.rays.erase(std::unique(v.rays.begin(), v.rays.end()), v.rays.end());
    std::sort(v.lin.begin(), v.lin.end());
    return v;
}

struct HRep {
    std::vector<Halfspace> facets;
    std::vector<Halfspace> eqs;
};

HRep hrep_from_generators(int ambient, const std::vector<QPoint>& verts,
                          const std::vector<LatticeVec>& rays,
                          const std::vector<LatticeVec>& lin) {
    std::vector<QPoint> rows;
    auto add_gen = [&](const QPoint& g, bool also_neg) {
        QPoint r;
        r.reserve(g.size());
        for (const auto& x : g) r.push_back(-x);
        rows.push_back(r);
        if (also_neg) {
            for (auto& x : r) x = -x;
            rows.push_back(r);
        }
    };
    for (const auto& v : verts) {
        QPoint g;
        g.emplace_back(1);
        g.insert(g.end(), v.begin(), v.end());
        add_gen(g, false);
    }
    for (const auto& r : rays) {
        QPoint g;
        g.emplace_back(0);
        for (long x : r.c) g.emplace_back(x);
        add_gen(g, false);
    }
    for (const auto& l : lin) {
        QPoint g;
        g.emplace_back(0);
        for (long x : l.c) g.emplace_back(x);
        add_gen(g, true);
    }
    ConeGenerators polar = dd_cone(ambient + 1, rows);

    HRep h;
    for (const auto& y : polar.rays) {
        QPoint a(y.begin() + 1, y.end());
        if (std::all_of(a.begin(), a.end(), [](const Rat& x) { return x.is_zero(); })) continue;
        QPoint ap = primitive_scale(a);
        // scale bound consistently with the normal rescale
        Rat scale;
        for (size_t j = 0; j < a.size(); ++j)
            if (!a[j].is_zero()) { scale = ap[j] / a[j]; break; }
        h.facets.emplace_back(to_lattice(ap), -y[0] * scale);
    }
    // Equations from the polar lineality, canonicalized by RREF.
    std::vector<std::vector<Rat>> eqrows;
    for (const auto& y : polar.lineality) {
        std::vector<Rat> row(y.begin() + 1, y.end());
        row.push_back(y[0]);  // a.x = -y0  -> store [a | y0], bound = -y0
        eqrows.push_back(std::move(row));
    }
    if (!eqrows.empty()) {
        rref(eqrows);
        for (const auto& row : eqrows) {
            QPoint a(row.begin(), row.end() - 1);
            if (std::all_of(a.begin(), a.end(), [](const Rat& x) { return x.is_zero(); })) continue;
            QPoint ap = primitive_scale(a);
            Rat scale;
            for (size_t j = 0; j < a.size(); ++j)
                if (!a[j].is_zero()) { scale = ap[j] / a[j]; break; }
            h.eqs.emplace_back(to_lattice(ap), -row.back() * scale);
        }
    }
    std::sort(h.facets.begin(), h.facets.end());
    h.facets.erase(std::unique(h.facets.begin(), h.facets.end()), h.facets.end());
    std::sort(h.eqs.begin(), h.eqs.end());
    return h;
}

int dim_from_vrep(const VRep& v) {
    if (v.verts.empty()) return -1;
    std::vector<std::vector<Rat>> dirs;
    for (size_t i = 1; i < v.verts.size(); ++i) {
        QPoint d = v.verts[i] - v.verts[0];
        dirs.emplace_back(d.begin(), d.end());
    }
    for (const auto& r : v.rays) {
        std::vector<Rat> d;
        for (long x : r.c) d.emplace_back(x);
        dirs.push_back(std::move(d));
    }
    for (const auto& l : v.lin) {
        std::vector<Rat> d;
        for (long x : l.c) d.emplace_back(x);
        dirs.push_back(std::move(d));
    }
    if (dirs.empty()) return 0;
    return rank_of(std::move(dirs));
}

} // namespace

Polyhedron Polyhedron::from_halfspaces(int ambient, std::vector<Halfspace> ineqs,
                                       std::vector<Halfspace> eqs) {
    ConeGenerators cg = dd_cone(ambient + 1, homog_rows(ambient, ineqs, eqs));
    VRep v = vrep_from_cone(ambient, cg);
    if (v.verts.empty()) return Polyhedron::empty(ambient);

    Polyhedron p;
    p.ambient_ = ambient;
    p.verts_ = v.verts;
    p.rays_ = v.rays;
    p.lin_ = v.lin;
    HRep h = hrep_from_generators(ambient, p.verts_, p.rays_, p.lin_);
    p.facets_ = h.facets;
    p.eqs_ = h.eqs;
    p.dim_ = dim_from_vrep(v);
    return p;
}

Polyhedron Polyhedron::from_generators(int ambient, std::vector<QPoint> vertices,
                                       std::vector<LatticeVec> rays,
                                       std::vector<LatticeVec> lineality) {
    if (vertices.empty()) return Polyhedron::empty(ambient);
    HRep h = hrep_from_generators(ambient, vertices, rays, lineality);
    // Re-derive the canonical V-representation from the H-side.
    ConeGenerators cg = dd_cone(ambient + 1, homog_rows(ambient, h.facets, h.eqs));
    VRep v = vrep_from_cone(ambient, cg);
    require(!v.verts.empty(), "Internal", "generator polyhedron lost its points");

    Polyhedron p;
    p.ambient_ = ambient;
    p.verts_ = v.verts;
    p.rays_ = v.rays;
    p.lin_ = v.lin;
    p.facets_ = h.facets;
    p.eqs_ = h.eqs;
    p.dim_ = dim_from_vrep(v);
    return p;
}

bool Polyhedron::contains(const QPoint& p) const {
    if (is_empty()) return false;
    require((int)p.size() == ambient_, "DimMismatch", "contains()");
    for (const auto& e : eqs_)
        if (dot(e.normal, p) != e.bound) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, p) > f.bound) return false;
    return true;
}

bool Polyhedron::contains_ray(const LatticeVec& r) const {
    if (is_empty()) return false;
    for (const auto& e : eqs_)
        if (dot(e.normal, r) != 0) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, r) > 0) return false;
    return true;
}

bool Polyhedron::subset_of(const Polyhedron& other) const {
    if (is_empty()) return true;
    for (const auto& v : verts_)
        if (!other.contains(v)) return false;
    for (const auto& r : rays_)
        if (!other.contains_ray(r)) return false;
    for (const auto& l : lin_)
        if (!other.contains_ray(l) || !other.contains_ray(-l)) return false;
    return true;
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
    require(ambient_ == other.ambient_, "DimMismatch", "intersect()");
    if (is_empty() || other.is_empty()) return Polyhedron::empty(ambient_);
    std::vector<Halfspace> ineqs = facets_;
    ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
    std::vector<Halfspace> eqs = eqs_;
    eqs.insert(eqs.end(), other.eqs_.begin(), other.eqs_.end());
    return from_halfspaces(ambient_, std::move(ineqs), std::move(eqs));
}

QPoint Polyhedron::relint_point() const {
    require(!is_empty(), "EmptyPolyhedron", "relint_point of empty polyhedron");
    QPoint p((size_t)ambient_, Rat(0));
    for (const auto& v : verts_) p = p + v;
    Rat inv(1, (long)verts_.size());
    p = inv * p;
    for (const auto& r : rays_) p = p + qpoint_of(r);
    return p;
}

std::vector<LatticeVec> Polyhedron::direction_lattice() const {
    if (is_empty()) return {};
    std::vector<LatticeVec> gens;
    for (size_t i = 1; i < verts_.size(); ++i) {
        QPoint d = primitive_scale(verts_[i] - verts_[0]);
        LatticeVec lv = to_lattice(d);
        if (!lv.is_zero()) gens.push_back(lv);
    }
    gens.insert(gens.end(), rays_.begin(), rays_.end());
    gens.insert(gens.end(), lin_.begin(), lin_.end());
    return saturated_lattice_basis(gens, ambient_);
}

std::vector<Polyhedron> Polyhedron::all_faces() const {
    std::vector<Polyhedron> out;
    if (is_empty()) return out;
    size_t nv = verts_.size(), nr = rays_.size();
    using Key = std::pair<std::vector<bool>, std::vector<bool>>;
    auto active_of = [&](const Halfspace& f) {
        Key k{std::vector<bool>(nv, false), std::vector<bool>(nr, false)};
        for (size_t i = 0; i < nv; ++i) k.first[i] = dot(f.normal, verts_[i]) == f.bound;
        for (size_t i = 0; i < nr; ++i) k.second[i] = dot(f.normal, rays_[i]) == 0;
        return k;
    };
    Key top{std::vector<bool>(nv, true), std::vector<bool>(nr, true)};
    std::set<Key> seen{top};
    std::vector<Key> work{top};
    std::vector<Key> facet_keys;
    facet_keys.reserve(facets_.size());
    for (const auto& f : facets_) facet_keys.push_back(active_of(f));
    while (!work.empty()) {
        Key cur = work.back();
        work.pop_back();
        for (const auto& fk : facet_keys) {
            Key nk = cur;
            for (size_t i = 0; i < nv; ++i) nk.first[i] = nk.first[i] && fk.first[i];
            for (size_t i = 0; i < nr; ++i) nk.second[i] = nk.second[i] && fk.second[i];
            if (std::none_of(nk.first.begin(), nk.first.end(), [](bool b) { return b; }))
                continue;  // empty face
            if (seen.insert(nk).second) work.push_back(nk);
        }
    }
    for (const auto& k : seen) {
        std::vector<QPoint> vs;
        std::vector<LatticeVec> rs;
        for (size_t i = 0; i < nv; ++i)
            if (k.first[i]) vs.push_back(verts_[i]);
        for (size_t i = 0; i < nr; ++i)
            if (k.second[i]) rs.push_back(rays_[i]);
        out.push_back(from_generators(ambient_, vs, rs, lin_));
    }
    return out;
}

std::vector<Polyhedron> Polyhedron::faces_of_dim(int k) const {
    std::vector<Polyhedron> out;
    for (auto& f : all_faces())
        if (f.dim() == k) out.push_back(f);
    return out;
}

bool operator==(const Polyhedron& a, const Polyhedron& b) {
    return a.ambient_ == b.ambient_ && a.dim_ == b.dim_ && a.exp_ == b.exp_ &&
           a.verts_ == b.verts_ && a.rays_ == b.rays_ && a.lin_ == b.lin_;
}

std::string Polyhedron::str() const {
    std::ostringstream os;
    if (is_empty()) return "{empty}";
    os << "{dim " << dim_ << "; verts";
    for (const auto& v : verts_) os << " " << qpoint_str(v);
    if (!rays_.empty()) {
        os << "; rays";
        for (const auto& r : rays_) os << " " << r.str();
    }
    if (!lin_.empty()) {
        os << "; lines";
        for (const auto& l : lin_) os << " " << l.str();
    }
    os << "}";
    if (exp_) os << "^exp";
    return os.str();
}

Polyhedron exp_map(const Polyhedron& f) {
    require(!f.exp_, "AlreadyExp", "exp_map applied twice");
    Polyhedron g = f;
    g.exp_ = true;
    return g;
}

Polyhedron log_map(const Polyhedron& f) {
    if (f.exp_) {
        Polyhedron g = f;
        g.exp_ = false;
        return g;
    }
    for (const auto& h : f.facets())
        require(h.bound.sign() > 0, "NonPositiveBound",
                "log_map needs strictly positive bounds; got " + h.bound.str());
    for (const auto& h : f.equations())
        require(h.bound.sign() > 0, "NonPositiveBound",
                "log_map needs strictly positive bounds; got " + h.bound.str());
    fail("SymbolicOnly", "log_map of a plain polyhedron is irrational; only exp-flagged "
                         "polyhedra can be pulled back exactly");
}

double bound_value(const Polyhedron& f, size_t facet_index) {
    const Halfspace& h = f.facets().at(facet_index);
    double b = h.bound.to_double();
    return f.exp_scale() ? std::exp(b) : b;
}

bool cone_contains(int dim, const std::vector<LatticeVec>& gen_rays,
                   const std::vector<LatticeVec>& gen_lines, const LatticeVec& v) {
    std::vector<QPoint> rows;
    for (const auto& r : gen_rays) {
        QPoint q = qpoint_of(r);
        for (auto& x : q) x = -x;
        rows.push_back(q);
    }
    for (const auto& l : gen_lines) {
        QPoint q = qpoint_of(l);
        for (auto& x : q) x = -x;
        rows.push_back(q);
        for (auto& x : q) x = -x;
        rows.push_back(q);
    }
    ConeGenerators polar = dd_cone(dim, rows);
    for (const auto& y : polar.rays)
        if (qdot(y, qpoint_of(v)).sign() > 0) return false;
    for (const auto& y : polar.lineality)
        if (!qdot(y, qpoint_of(v)).is_zero()) return false;
    return true;
}

Polyhedron support_face(const Polyhedron& p, const LatticeVec& d) {
    require(!p.is_empty(), "EmptyPolyhedron", "support_face");
    for (const auto& r : p.rays())
        if (dot(d, r) > 0) return Polyhedron::empty(p.ambient_dim());
    for (const auto& l : p.lineality())
        if (dot(d, l) != 0) return Polyhedron::empty(p.ambient_dim());
    Rat best;
    bool first = true;
    for (const auto& v : p.vertices()) {
        Rat s = dot(d, v);
        if (first || s > best) { best = s; first = false; }
    }
    std::vector<QPoint> vs;
    for (const auto& v : p.vertices())
        if (dot(d, v) == best) vs.push_back(v);
    std::vector<LatticeVec> rs;
    for (const auto& r : p.rays())
        if (dot(d, r) == 0) rs.push_back(r);
    return Polyhedron::from_generators(p.ambient_dim(), vs, rs, p.lineality());
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
    require(p.ambient_dim() == q.ambient_dim(), "DimMismatch", "minkowski_sum");
    require(!p.is_empty() && !q.is_empty(), "EmptyPolyhedron", "minkowski_sum of empty input");
    int n = p.ambient_dim();

    auto edge_dirs = [&](const Polyhedron& a) {
        std::vector<LatticeVec> dirs = a.rays();
        for (const auto& l : a.lineality()) dirs.push_back(l);
        for (const auto& f : a.faces_of_dim(1)) {
            if (f.vertices().size() == 2) {
                QPoint d = f.vertices()[1] - f.vertices()[0];
                dirs.push_back(to_lattice(primitive_scale(d)));
            }
        }
        return dirs;
    };

    std::vector<LatticeVec> candidates;
    auto add_cand = [&](const LatticeVec& v) {
        if (!v.is_zero()) candidates.push_back(primitive(v));
    };
    for (const auto& f : p.facets()) add_cand(f.normal);
    for (const auto& f : q.facets()) add_cand(f.normal);
    for (const auto& e : p.equations()) { add_cand(e.normal); add_cand(-e.normal); }
    for (const auto& e : q.equations()) { add_cand(e.normal); add_cand(-e.normal); }
    if (n == 3) {
        for (const auto& dp : edge_dirs(p)) {
            for (const auto& dq : edge_dirs(q)) {
                LatticeVec c(dp[1] * dq[2] - dp[2] * dq[1], dp[2] * dq[0] - dp[0] * dq[2],
                             dp[0] * dq[1] - dp[1] * dq[0]);
                if (!c.is_zero()) { add_cand(c); add_cand(-c); }
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto support = [&](const Polyhedron& a, const LatticeVec& d) -> std::optional<Rat> {
        for (const auto& r : a.rays())
            if (dot(d, r) > 0) return std::nullopt;
        for (const auto& l : a.lineality())
            if (dot(d, l) != 0) return std::nullopt;
        Rat best;
        bool first = true;
        for (const auto& v : a.vertices()) {
            Rat s = dot(d, v);
            if (first || s > best) { best = s; first = false; }
        }
        return best;
    };

    std::vector<Halfspace> ineqs;
    for (const auto& d : candidates) {
        auto hp = support(p, d);
        auto hq = support(q, d);
        if (hp && hq) ineqs.emplace_back(d, *hp + *hq);
    }
    std::vector<LatticeVec> rays = p.rays();
    rays.insert(rays.end(), q.rays().begin(), q.rays().end());
    std::vector<LatticeVec> lins = p.lineality();
    lins.insert(lins.end(), q.lineality().begin(), q.lineality().end());

    Polyhedron sum = Polyhedron::from_halfspaces(n, std::move(ineqs));
    // Guard against an incomplete candidate set: the H-build must reproduce
    // exactly the recession behaviour and contain all vertex sums.
    for (const auto& vp : p.vertices())
        for (const auto& vq : q.vertices())
            require(sum.contains(vp + vq), "Internal", "minkowski candidate set incomplete");
    for (const auto& r : rays)
        require(sum.contains_ray(r), "Internal", "minkowski recession mismatch");
    for (const auto& w : sum.vertices()) {
        bool is_sum = false;
        for (const auto& vp : p.vertices()) {
            for (const auto& vq : q.vertices())
                if (vp + vq == w) { is_sum = true; break; }
            if (is_sum) break;
        }
        require(is_sum, "Internal", "minkowski produced a non-sum vertex");
    }
    return sum;
}

} // namespace trop
