#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subdivbox/rational.hpp"

namespace subdivbox {

using Exponents = std::vector<int>;

// Graded lexicographic order: total degree first, then lex with z1 > z2 > ...
// Works for signed (Laurent) exponents; the map's last element is the leading term.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = 0, db = 0;
        for (int v : a) da += v;
        for (int v : b) db += v;
        if (da != db) return da < db;
        return a < b;  // lexicographic, z1 most significant
    }
};

class LaurentPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit LaurentPoly(int dim = 1);
    static LaurentPoly constant(int dim, const Rational& c);
    static LaurentPoly monomial(int dim, const Exponents& e, const Rational& c = 1);

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Exponents& e) const;
    void set_coeff(const Exponents& e, const Rational& c);
    void add_term(const Exponents& e, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    Rational evaluate(const std::vector<Rational>& point) const;
    Rational at_one() const;  // value at (1,...,1)

    LaurentPoly derivative(int var) const;
    LaurentPoly derivative(const Exponents& multi) const;

    LaurentPoly substitute_power(int m) const;  // z -> z^m, m >= 1
    LaurentPoly shifted(const Exponents& e) const;  // multiply by z^e

    // Bounding box of the support; nullopt for the zero polynomial.
    std::optional<std::pair<Exponents, Exponents>> support_box() const;
    // max over terms of the coordinate-sum after shifting the support to >= 0
    // (0 for the zero polynomial).
    long normalized_total_degree() const;

    std::string to_string() const;

private:
    int dim_;
    TermMap terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const Rational& c, LaurentPoly a);

LaurentPoly pow(const LaurentPoly& p, int n);  // n >= 0

inline LaurentPoly substitute_squares(const LaurentPoly& p) { return p.substitute_power(2); }
inline LaurentPoly monomial_shift(const LaurentPoly& p, const Exponents& alpha) { return p.shifted(alpha); }

// (z^{-m} * p, m) with m the componentwise minimal exponent; throws on the
// zero polynomial, whose support has no minimum.
std::pair<LaurentPoly, Exponents> normalize_support(const LaurentPoly& p);

std::string exponent_to_string(const Exponents& e);  // "z1^2*z2" style factor

}  // namespace subdivbox
