#pragma once

#include <map>
#include <string>

#include "trop/lattice.hpp"

namespace trop {

// Max-plus polynomial: finite support of exponents with rational coefficients.
// Convention used throughout: tropical sum = max, tropical product = +, so
// eval(P, x) = max_i (a_i + <i, x>).
struct TropPoly {
    int dim = 0;
    std::map<LatticeVec, Rat> terms;

    TropPoly() = default;
    TropPoly(int d, std::map<LatticeVec, Rat> t);

    size_t support_size() const { return terms.size(); }
    void set(const LatticeVec& e, const Rat& c);

    // Multiplication by the tropical constant lambda: adds lambda to every
    // coefficient ("lambda * P" in max-plus).
    TropPoly scaled(const Rat& lambda) const;

    friend bool operator==(const TropPoly& a, const TropPoly& b) {
        return a.dim == b.dim && a.terms == b.terms;
    }
};

Rat eval(const TropPoly& p, const QPoint& x);

// Text form mirroring the usual shorthand: "x+y+0" has three terms with
// coefficient 0; explicit coefficients are written "a*x^i*y^j" with rational
// a, negative coefficients parenthesized: "y+(-1)".
TropPoly parse_troppoly(const std::string& text, int dim_hint = 0);
std::string format_troppoly(const TropPoly& p);

// h = "f/g" with max-plus semantics: h(x) = f(x) - g(x).
struct TropRational {
    TropPoly num;
    TropPoly den;

    TropRational() = default;
    TropRational(TropPoly f, TropPoly g);

    int dim() const { return num.dim; }
    TropRational scaled(const Rat& lambda) const { return {num.scaled(lambda), den}; }
};

Rat eval(const TropRational& h, const QPoint& x);

} // namespace trop
