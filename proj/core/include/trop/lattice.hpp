#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trop/rat.hpp"

namespace trop {

// Integer lattice vector (exponents, directions, normals). Dimension is
// carried by the coordinate count; the constructions here live in dim 2..4.
struct LatticeVec {
    std::vector<long> c;

    LatticeVec() = default;
    explicit LatticeVec(std::vector<long> coords) : c(std::move(coords)) {}
    LatticeVec(long x, long y) : c{x, y} {}
    LatticeVec(long x, long y, long z) : c{x, y, z} {}

    int dim() const { return (int)c.size(); }
    long operator[](int i) const { return c[(size_t)i]; }
    long& operator[](int i) { return c[(size_t)i]; }
    bool is_zero() const;

    friend LatticeVec operator+(const LatticeVec& a, const LatticeVec& b);
    friend LatticeVec operator-(const LatticeVec& a, const LatticeVec& b);
    friend LatticeVec operator*(long s, const LatticeVec& a);
    LatticeVec operator-() const { return -1 * (*this); }

    friend bool operator==(const LatticeVec& a, const LatticeVec& b) { return a.c == b.c; }
    friend bool operator<(const LatticeVec& a, const LatticeVec& b) { return a.c < b.c; }

    std::string str() const;
};

long dot(const LatticeVec& a, const LatticeVec& b);
Rat dot(const LatticeVec& a, const std::vector<Rat>& x);

long gcd_all(const LatticeVec& v);

// v / gcd(entries); errors with "ZeroDirection" on the zero vector.
LatticeVec primitive(const LatticeVec& v);

// Index [Lambda_e : Lambda_f] of the rank-2 sublattices of Z^3 spanned by
// {primitive(dir), (0,0,1)}. Requires the horizontal projections to be
// parallel and Lambda_f a sublattice of Lambda_e ("NotLiftDirection" else).
long lattice_index(const LatticeVec& e, const LatticeVec& f);

// Rational point; used for vertices and evaluation arguments.
using QPoint = std::vector<Rat>;

QPoint qpoint(std::initializer_list<Rat> xs);
QPoint qpoint_of(const LatticeVec& v);
QPoint operator+(const QPoint& a, const QPoint& b);
QPoint operator-(const QPoint& a, const QPoint& b);
QPoint operator*(const Rat& s, const QPoint& a);
std::string qpoint_str(const QPoint& p);

// Exact linear algebra over Q: reduced row echelon form in place; returns rank.
int rref(std::vector<std::vector<Rat>>& m);
int rank_of(std::vector<std::vector<Rat>> m);
// Row spaces equal as subspaces of Q^n.
bool same_rowspace(std::vector<std::vector<Rat>> a, std::vector<std::vector<Rat>> b);

// Integer kernel of an integer matrix (saturated lattice basis of {x : Ax=0}).
std::vector<LatticeVec> integer_kernel(const std::vector<LatticeVec>& rows, int ncols);

// Basis of the saturation of the lattice spanned by the given vectors.
std::vector<LatticeVec> saturated_lattice_basis(const std::vector<LatticeVec>& gens, int dim);

// Index [Z^dim : L] for a full-rank integer lattice L given by generators.
long full_lattice_index(const std::vector<LatticeVec>& gens, int dim);

// Coordinates of v in the quotient Z^dim / sat(span(sub)). Basis is chosen
// deterministically; the quotient has rank dim - rank(sub).
struct QuotientMap {
    std::vector<LatticeVec> sub_basis;   // saturated basis of the sublattice
    std::vector<std::vector<Rat>> proj;  // (dim - k) x dim rational projection
    LatticeVec apply(const LatticeVec& v) const;
};
QuotientMap quotient_by(const std::vector<LatticeVec>& sub, int dim);

} // namespace trop
