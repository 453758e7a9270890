#include "subdivbox/polydiv.hpp"

namespace subdivbox {

namespace {

void require_polynomial(const LaurentPoly& p, const char* what) {
    for (const auto& [e, c] : p.terms())
        for (int v : e)
            if (v < 0)
                throw std::invalid_argument(std::string(what) +
                                            " has negative exponents; normalize_support first");
}

}  // namespace

DivisionResult multivariate_divide(const LaurentPoly& dividend,
                                   const std::vector<LaurentPoly>& divisors) {
    const int d = dividend.dim();
    if (divisors.empty()) throw std::invalid_argument("need at least one divisor");
    require_polynomial(dividend, "dividend");
    for (const auto& g : divisors) {
        if (g.dim() != d) throw std::invalid_argument("divisor dimension mismatch");
        if (g.is_zero()) throw std::invalid_argument("zero divisor");
        require_polynomial(g, "divisor");
    }

    DivisionResult res{std::vector<LaurentPoly>(divisors.size(), LaurentPoly(d)), LaurentPoly(d)};
    LaurentPoly work = dividend;
    while (!work.is_zero()) {
        // graded-lex leading term = last element of the ordered term map
        auto lead = std::prev(work.terms().end());
        const Exponents& le = lead->first;
        const Rational lc = lead->second;
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            auto glead = std::prev(divisors[i].terms().end());
            const Exponents& ge = glead->first;
            bool divides = true;
            for (int v = 0; v < d; ++v)
                if (le[v] < ge[v]) {
                    divides = false;
                    break;
                }
            if (!divides) continue;
            Exponents q(d);
            for (int v = 0; v < d; ++v) q[v] = le[v] - ge[v];
            Rational qc = lc / glead->second;
            res.quotients[i].add_term(q, qc);
            work -= LaurentPoly::monomial(d, q, qc) * divisors[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder.add_term(le, lc);
            work.set_coeff(le, 0);
        }
    }
    return res;
}

}  // namespace subdivbox
