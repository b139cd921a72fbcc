#include "trop/troppoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace trop {

TropPoly::TropPoly(int d, std::map<LatticeVec, Rat> t) : dim(d), terms(std::move(t)) {
    require(!terms.empty(), "EmptySupport", "tropical polynomial needs at least one term");
    for (const auto& [e, c] : terms)
        require(e.dim() == dim, "DimMismatch", "exponent dimension");
}

void TropPoly::set(const LatticeVec& e, const Rat& c) {
    require(e.dim() == dim, "DimMismatch", "exponent dimension");
    terms[e] = c;
}

TropPoly TropPoly::scaled(const Rat& lambda) const {
    TropPoly q = *this;
    for (auto& [e, c] : q.terms) c += lambda;
    return q;
}

Rat eval(const TropPoly& p, const QPoint& x) {
    require((int)x.size() == p.dim, "DimMismatch", "eval point dimension");
    bool first = true;
    Rat best;
    for (const auto& [e, c] : p.terms) {
        Rat v = c + dot(e, x);
        if (first || v > best) { best = v; first = false; }
    }
    return best;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    Rat parse_number() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '/')) ++i;
        require(i > start, "ParseError", "expected a number at '" + s.substr(start) + "'");
        return Rat::parse(s.substr(start, i - start));
    }

    long parse_int() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        require(i > start, "ParseError", "expected an integer exponent");
        return std::stol(s.substr(start, i - start));
    }

    // term := coefficient? monomial? (at least one of them)
    void parse_term(std::map<char, long>& expo, Rat& coef) {
        coef = Rat(0);
        bool have_coef = false, have_mono = false;
        while (true) {
            char c = peek();
            if (c == '(') {
                eat('(');
                coef = parse_number();
                require(eat(')'), "ParseError", "missing ')' in coefficient");
                have_coef = true;
            } else if (c == '-' || std::isdigit((unsigned char)c)) {
                coef = parse_number();
                have_coef = true;
            } else if (c == 'x' || c == 'y' || c == 'z') {
                ++i;
                long e = 1;
                if (eat('^')) e = parse_int();
                expo[c] += e;
                have_mono = true;
            } else {
                break;
            }
            if (!eat('*')) {
                char n = peek();
                // allow juxtaposition like "x^2y"
                if (n != 'x' && n != 'y' && n != 'z') break;
            }
        }
        require(have_coef || have_mono, "ParseError", "empty term");
    }
};

} // namespace

TropPoly parse_troppoly(const std::string& text, int dim_hint) {
    Parser p(text);
    struct RawTerm {
        std::map<char, long> expo;
        Rat coef;
    };
    std::vector<RawTerm> raw;
    int maxvar = 0;
    while (true) {
        RawTerm t;
        p.parse_term(t.expo, t.coef);
        for (const auto& [v, e] : t.expo) {
            (void)e;
            maxvar = std::max(maxvar, v - 'x' + 1);
        }
        raw.push_back(std::move(t));
        if (!p.eat('+')) break;
    }
    p.skip_ws();
    require(p.i == p.s.size(), "ParseError",
            "trailing input in tropical polynomial: '" + text.substr(p.i) + "'");
    int dim = std::max(dim_hint, std::max(maxvar, 1));
    std::map<LatticeVec, Rat> terms;
    for (const auto& t : raw) {
        LatticeVec e(std::vector<long>((size_t)dim, 0));
        for (const auto& [v, k] : t.expo) e[v - 'x'] = k;
        auto it = terms.find(e);
        if (it == terms.end()) terms[e] = t.coef;
        else it->second = rat_max(it->second, t.coef);  // tropical sum of equal monomials
    }
    return TropPoly(dim, std::move(terms));
}

std::string format_troppoly(const TropPoly& p) {
    static const char* vars = "xyz";
    std::vector<std::string> parts;
    for (const auto& [e, c] : p.terms) {
        std::ostringstream t;
        bool mono = false;
        std::ostringstream m;
        for (int j = 0; j < p.dim; ++j) {
            if (e[j] == 0) continue;
            if (mono) m << "*";
            m << vars[j];
            if (e[j] != 1) m << "^" << e[j];
            mono = true;
        }
        if (!mono) {
            if (c.sign() < 0) t << "(" << c.str() << ")";
            else t << c.str();
        } else if (c.is_zero()) {
            t << m.str();
        } else if (c.sign() < 0) {
            t << "(" << c.str() << ")*" << m.str();
        } else {
            t << c.str() << "*" << m.str();
        }
        parts.push_back(t.str());
    }
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "+" : "") << parts[i];
    return os.str();
}

TropRational::TropRational(TropPoly f, TropPoly g) : num(std::move(f)), den(std::move(g)) {
    require(num.dim == den.dim, "DimMismatch", "tropical rational function");
}

Rat eval(const TropRational& h, const QPoint& x) { return eval(h.num, x) - eval(h.den, x); }

} // namespace trop
