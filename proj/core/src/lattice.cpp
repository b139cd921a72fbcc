#include "trop/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trop {

bool LatticeVec::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
}

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b) {
    require(a.dim() == b.dim(), "DimMismatch", "lattice vector add");
    LatticeVec r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] += b[i];
    return r;
}

LatticeVec operator-(const LatticeVec& a, const LatticeVec& b) {
    require(a.dim() == b.dim(), "DimMismatch", "lattice vector sub");
    LatticeVec r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] -= b[i];
    return r;
}

LatticeVec operator*(long s, const LatticeVec& a) {
    LatticeVec r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

std::string LatticeVec::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < dim(); ++i) os << (i ? "," : "") << c[(size_t)i];
    os << ")";
    return os.str();
}

long dot(const LatticeVec& a, const LatticeVec& b) {
    require(a.dim() == b.dim(), "DimMismatch", "lattice dot");
    long s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const LatticeVec& a, const QPoint& x) {
    require(a.dim() == (int)x.size(), "DimMismatch", "lattice/point dot");
    Rat s;
    for (int i = 0; i < a.dim(); ++i) s += Rat(a[i]) * x[(size_t)i];
    return s;
}

long gcd_all(const LatticeVec& v) {
    long g = 0;
    for (long x : v.c) g = std::gcd(g, std::abs(x));
    return g;
}

LatticeVec primitive(const LatticeVec& v) {
    long g = gcd_all(v);
    require(g != 0, "ZeroDirection", "primitive() of the zero vector");
    LatticeVec r = v;
    for (auto& x : r.c) x /= g;
    return r;
}

long lattice_index(const LatticeVec& e, const LatticeVec& f) {
    LatticeVec pe = primitive(e);
    LatticeVec pf = primitive(f);
    if (pe.dim() == 2) pe.c.push_back(0);
    require(pe.dim() == 3 && pf.dim() == 3, "DimMismatch", "lattice_index wants dim 2/3 inputs");
    long ge = std::gcd(std::abs(pe[0]), std::abs(pe[1]));
    long gf = std::gcd(std::abs(pf[0]), std::abs(pf[1]));
    require(ge != 0 && gf != 0, "NotLiftDirection", "vertical direction has no horizontal shadow");
    require(pe[0] * pf[1] - pe[1] * pf[0] == 0, "NotLiftDirection",
            "directions do not project to parallel lines");
    require(gf % ge == 0, "NotLiftDirection", "shadow lattices are not nested");
    return gf / ge;
}

QPoint qpoint(std::initializer_list<Rat> xs) { return QPoint(xs); }

QPoint qpoint_of(const LatticeVec& v) {
    QPoint p;
    p.reserve((size_t)v.dim());
    for (long x : v.c) p.emplace_back(x);
    return p;
}

QPoint operator+(const QPoint& a, const QPoint& b) {
    require(a.size() == b.size(), "DimMismatch", "point add");
    QPoint r = a;
    for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

QPoint operator-(const QPoint& a, const QPoint& b) {
    require(a.size() == b.size(), "DimMismatch", "point sub");
    QPoint r = a;
    for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

QPoint operator*(const Rat& s, const QPoint& a) {
    QPoint r = a;
    for (auto& x : r) x *= s;
    return r;
}

std::string qpoint_str(const QPoint& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].str();
    os << ")";
    return os.str();
}

int rref(std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat inv = Rat(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return (int)r;
}

int rank_of(std::vector<std::vector<Rat>> m) { return rref(m); }

bool same_rowspace(std::vector<std::vector<Rat>> a, std::vector<std::vector<Rat>> b) {
    if (a.empty() && b.empty()) return true;
    int ra = rref(a), rb = rref(b);
    if (ra != rb) return false;
    std::vector<std::vector<Rat>> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank_of(std::move(both)) == ra;
}

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat to_zmat(const std::vector<LatticeVec>& rows, int ncols) {
    ZMat a;
    for (const auto& r : rows) {
        require(r.dim() == ncols, "DimMismatch", "matrix row width");
        std::vector<mpz_class> row;
        for (long x : r.c) row.emplace_back(x);
        a.push_back(std::move(row));
    }
    return a;
}

LatticeVec to_lvec(const std::vector<mpz_class>& row) {
    LatticeVec v;
    for (const auto& x : row) {
        require(x.fits_slong_p(), "Overflow", "lattice entry exceeds long");
        v.c.push_back(x.get_si());
    }
    return v;
}

// Column HNF with transform: A -> A*V, V unimodular. Afterwards the nonzero
// columns of A are "echelonized" left-to-right. Returns V as column vectors.
void column_reduce(ZMat& a, ZMat& v) {
    if (a.empty()) return;
    size_t rows = a.size(), cols = a[0].size();
    size_t lead = 0;
    for (size_t r = 0; r < rows && lead < cols; ++r) {
        // Euclidean elimination across columns lead..cols-1 on row r.
        while (true) {
            size_t nz = cols;
            for (size_t c = lead; c < cols; ++c)
                if (a[r][c] != 0) { nz = c; break; }
            if (nz == cols) break;  // row r zero on the tail
            if (nz != lead) {
                for (size_t i = 0; i < rows; ++i) std::swap(a[i][nz], a[i][lead]);
                for (auto& row : v) std::swap(row[nz], row[lead]);
            }
            bool done = true;
            for (size_t c = lead + 1; c < cols; ++c) {
                if (a[r][c] == 0) continue;
                mpz_class q = a[r][c] / a[r][lead];
                if (a[r][c] % a[r][lead] != 0) done = false;
                if (q != 0) {
                    for (size_t i = 0; i < rows; ++i) a[i][c] -= q * a[i][lead];
                    for (auto& row : v) row[c] -= q * row[lead];
                }
                if (a[r][c] != 0) {
                    // swap smaller remainder into lead and repeat
                    for (size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][lead]);
                    for (auto& row : v) std::swap(row[c], row[lead]);
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
        if (a[r][lead] != 0) ++lead;
    }
}

} // namespace

std::vector<LatticeVec> integer_kernel(const std::vector<LatticeVec>& rows, int ncols) {
    if (rows.empty()) {
        std::vector<LatticeVec> basis;
        for (int i = 0; i < ncols; ++i) {
            LatticeVec e(std::vector<long>((size_t)ncols, 0));
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    ZMat a = to_zmat(rows, ncols);
    ZMat v((size_t)ncols, std::vector<mpz_class>((size_t)ncols, 0));
    for (int i = 0; i < ncols; ++i) v[(size_t)i][(size_t)i] = 1;
    column_reduce(a, v);
    std::vector<LatticeVec> basis;
    for (int c = 0; c < ncols; ++c) {
        bool zero = true;
        for (const auto& row : a)
            if (row[(size_t)c] != 0) { zero = false; break; }
        if (!zero) continue;
        std::vector<mpz_class> col;
        for (int i = 0; i < ncols; ++i) col.push_back(v[(size_t)i][(size_t)c]);
        basis.push_back(to_lvec(col));
    }
    return basis;
}

std::vector<LatticeVec> saturated_lattice_basis(const std::vector<LatticeVec>& gens, int dim) {
    return integer_kernel(integer_kernel(gens, dim), dim);
}

long full_lattice_index(const std::vector<LatticeVec>& gens, int dim) {
    ZMat a = to_zmat(gens, dim);
    ZMat v((size_t)dim, std::vector<mpz_class>((size_t)dim, 0));
    for (int i = 0; i < dim; ++i) v[(size_t)i][(size_t)i] = 1;
    // Transpose so rows become columns; column-reduce to triangular form.
    ZMat at((size_t)dim, std::vector<mpz_class>(a.size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < dim; ++j) at[(size_t)j][i] = a[i][(size_t)j];
    ZMat w(at[0].size(), std::vector<mpz_class>(at[0].size(), 0));
    for (size_t i = 0; i < w.size(); ++i) w[i][i] = 1;
    column_reduce(at, w);
    mpz_class det = 1;
    for (int i = 0; i < dim; ++i) {
        require(at[(size_t)i][(size_t)i] != 0, "NotFullRank", "lattice index of non-full-rank set");
        det *= at[(size_t)i][(size_t)i];
    }
    mpz_class ad = abs(det);
    require(ad.fits_slong_p(), "Overflow", "lattice index exceeds long");
    return ad.get_si();
}

LatticeVec QuotientMap::apply(const LatticeVec& v) const {
    LatticeVec out;
    for (const auto& row : proj) {
        Rat s;
        for (size_t j = 0; j < row.size(); ++j) s += row[j] * Rat(v[(int)j]);
        out.c.push_back(s.to_long());
    }
    return out;
}

QuotientMap quotient_by(const std::vector<LatticeVec>& sub, int dim) {
    QuotientMap qm;
    qm.sub_basis = saturated_lattice_basis(sub, dim);
    int k = (int)qm.sub_basis.size();
    if (k == 0) {
        for (int i = 0; i < dim; ++i) {
            std::vector<Rat> row((size_t)dim, Rat(0));
            row[(size_t)i] = Rat(1);
            qm.proj.push_back(row);
        }
        return qm;
    }
    // Column-HNF of the saturated basis B gives B*V = [T|0] with T unimodular;
    // the last dim-k rows of V^{-1} give quotient coordinates.
    ZMat b = to_zmat(qm.sub_basis, dim);
    ZMat v((size_t)dim, std::vector<mpz_class>((size_t)dim, 0));
    for (int i = 0; i < dim; ++i) v[(size_t)i][(size_t)i] = 1;
    column_reduce(b, v);
    // Invert V exactly over Q via rref on [V | I].
    std::vector<std::vector<Rat>> aug((size_t)dim, std::vector<Rat>((size_t)(2 * dim), Rat(0)));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) aug[(size_t)i][(size_t)j] = Rat(v[(size_t)i][(size_t)j]);
        aug[(size_t)i][(size_t)(dim + i)] = Rat(1);
    }
    int r = rref(aug);
    require(r == dim, "NotFullRank", "quotient basis inversion");
    for (int i = k; i < dim; ++i) {
        std::vector<Rat> row;
        for (int j = 0; j < dim; ++j) row.push_back(aug[(size_t)i][(size_t)(dim + j)]);
        qm.proj.push_back(row);
    }
    return qm;
}

} // namespace trop
