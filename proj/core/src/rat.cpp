#include "trop/rat.hpp"

#include <ostream>

namespace trop {

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::parse(const std::string& s) {
    require(!s.empty(), "ParseError", "empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class z(s);
            return Rat(mpq_class(z));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        require(d != 0, "ZeroDenominator", "rational with zero denominator: " + s);
        mpq_class q(n, d);
        q.canonicalize();
        return Rat(q);
    } catch (const std::invalid_argument&) {
        fail("ParseError", "bad rational literal: " + s);
    }
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
Rat rat_abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

Rat rat_floor(const Rat& a) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    return Rat(q);
}

} // namespace trop
