#include "subdivbox/laurent.hpp"

#include <sstream>

namespace subdivbox {

LaurentPoly::LaurentPoly(int dim) : dim_(dim) {
    if (dim < 1 || dim > 8) throw std::invalid_argument("dimension must be in 1..8");
}

LaurentPoly LaurentPoly::constant(int dim, const Rational& c) {
    LaurentPoly p(dim);
    if (c != 0) p.terms_[Exponents(dim, 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::monomial(int dim, const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != dim) throw std::invalid_argument("exponent arity mismatch");
    LaurentPoly p(dim);
    if (c != 0) p.terms_[e] = c;
    return p;
}

Rational LaurentPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

// mpq_class two-argument construction does not reduce fractions, and GMP
// comparisons are only reliable on canonical values, so coefficients are
// canonicalized on the way in.
void LaurentPoly::set_coeff(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != dim_) throw std::invalid_argument("exponent arity mismatch");
    if (c == 0) {
        terms_.erase(e);
    } else {
        Rational v = c;
        v.canonicalize();
        terms_[e] = std::move(v);
    }
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != dim_) throw std::invalid_argument("exponent arity mismatch");
    if (c == 0) return;
    Rational v = c;
    v.canonicalize();
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = std::move(v);
    } else {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    LaurentPoly out(dim_);
    Exponents e(dim_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < dim_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    terms_ = std::move(out.terms_);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    Rational f = c;
    f.canonicalize();
    for (auto& [e, v] : terms_) v *= f;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& [e, v] : p.terms_) v = -v;
    return p;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != dim_) throw std::invalid_argument("point arity mismatch");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < dim_; ++i) t *= rat_pow(point[i], e[i]);
        acc += t;
    }
    return acc;
}

Rational LaurentPoly::at_one() const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
}

LaurentPoly LaurentPoly::derivative(int var) const {
    if (var < 0 || var >= dim_) throw std::invalid_argument("variable index out of range");
    LaurentPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        out.add_term(d, c * e[var]);
    }
    return out;
}

LaurentPoly LaurentPoly::derivative(const Exponents& multi) const {
    if (static_cast<int>(multi.size()) != dim_) throw std::invalid_argument("multi-index arity mismatch");
    LaurentPoly out = *this;
    for (int i = 0; i < dim_; ++i) {
        if (multi[i] < 0) throw std::invalid_argument("derivative order must be nonnegative");
        for (int k = 0; k < multi[i]; ++k) out = out.derivative(i);
    }
    return out;
}

LaurentPoly LaurentPoly::substitute_power(int m) const {
    if (m < 1) throw std::invalid_argument("substitution power must be >= 1");
    LaurentPoly out(dim_);
    Exponents e(dim_);
    for (const auto& [ea, c] : terms_) {
        for (int i = 0; i < dim_; ++i) e[i] = ea[i] * m;
        out.terms_[e] = c;
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& s) const {
    if (static_cast<int>(s.size()) != dim_) throw std::invalid_argument("shift arity mismatch");
    LaurentPoly out(dim_);
    Exponents e(dim_);
    for (const auto& [ea, c] : terms_) {
        for (int i = 0; i < dim_; ++i) e[i] = ea[i] + s[i];
        out.terms_[e] = c;
    }
    return out;
}

std::optional<std::pair<Exponents, Exponents>> LaurentPoly::support_box() const {
    if (terms_.empty()) return std::nullopt;
    Exponents lo = terms_.begin()->first, hi = lo;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < dim_; ++i) {
            if (e[i] < lo[i]) lo[i] = e[i];
            if (e[i] > hi[i]) hi[i] = e[i];
        }
    return std::make_pair(lo, hi);
}

std::pair<LaurentPoly, Exponents> normalize_support(const LaurentPoly& p) {
    auto box = p.support_box();
    if (!box) throw std::invalid_argument("cannot normalize the zero polynomial");
    const Exponents& m = box->first;
    Exponents neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
    return {p.shifted(neg), m};
}

long LaurentPoly::normalized_total_degree() const {
    auto box = support_box();
    if (!box) return 0;
    long best = 0;
    for (const auto& [e, c] : terms_) {
        long s = 0;
        for (int i = 0; i < dim_; ++i) s += e[i] - box->first[i];
        if (s > best) best = s;
    }
    return best;
}

std::string exponent_to_string(const Exponents& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << "z" << (i + 1);
        if (e[i] != 1) os << "^" << e[i];
        first = false;
    }
    return first ? "1" : os.str();
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = rat_abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono = exponent_to_string(e);
        if (mono == "1")
            os << rat_to_string(a);
        else if (a == 1)
            os << mono;
        else
            os << rat_to_string(a) << "*" << mono;
    }
    return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

LaurentPoly pow(const LaurentPoly& p, int n) {
    if (n < 0) throw std::invalid_argument("negative polynomial power");
    LaurentPoly acc = LaurentPoly::constant(p.dim(), 1);
    for (int i = 0; i < n; ++i) acc *= p;
    return acc;
}

}  // namespace subdivbox
