#include "subdivbox/boxspline.hpp"

#include <map>
#include <sstream>

namespace subdivbox {

namespace {

int column_weight(const Exponents& col) {
    int w = 0;
    for (int v : col) {
        if (v != 0 && v != 1) throw std::invalid_argument("direction entries must be 0 or 1");
        w += v;
    }
    return w;
}

std::string column_name(const Exponents& col) {
    std::string s = "e";
    for (std::size_t i = 0; i < col.size(); ++i)
        if (col[i]) s += std::to_string(i + 1);
    return s;
}

}  // namespace

LaurentPoly generator_q(const std::vector<Exponents>& theta, Variant variant) {
    if (theta.empty()) throw std::invalid_argument("empty direction set");
    const int d = static_cast<int>(theta[0].size());
    LaurentPoly acc = LaurentPoly::constant(d, 1);
    for (const auto& col : theta) {
        if (static_cast<int>(col.size()) != d) throw std::invalid_argument("column arity mismatch");
        int w = column_weight(col);
        if (w == 0) throw std::invalid_argument("zero column");
        LaurentPoly factor(d);
        if (variant == Variant::standard) {
            factor.add_term(Exponents(d, 0), Rational(1, 2));
            factor.add_term(col, Rational(1, 2));
        } else {
            if (w == 1) {
                factor.add_term(Exponents(d, 0), Rational(1, 2));
                factor.add_term(col, Rational(1, 2));
            } else if (w == 2) {
                // r~_{e_j+e_k} = (z_j + z_k)/2
                for (std::size_t i = 0; i < col.size(); ++i)
                    if (col[i]) {
                        Exponents e(d, 0);
                        e[i] = 1;
                        factor.add_term(e, Rational(1, 2));
                    }
            } else {
                throw std::invalid_argument("modified generator needs columns of weight <= 2");
            }
        }
        acc *= factor;
    }
    return acc;
}

LaurentPoly box_symbol(int a, int b, int g, int dl, Variant variant, bool normalized) {
    if (a < 0 || b < 0 || g < 0 || dl < 0) throw std::invalid_argument("negative box-spline index");
    if (variant == Variant::modified && dl > 0)
        throw std::invalid_argument("four-directional symbols have no modified variant");
    LaurentPoly f1(2), f2(2), f3(2), f4(2);
    f1.add_term({0, 0}, Rational(1, 2));
    f1.add_term({1, 0}, Rational(1, 2));
    f2.add_term({0, 0}, Rational(1, 2));
    f2.add_term({0, 1}, Rational(1, 2));
    if (variant == Variant::standard) {
        f3.add_term({0, 0}, Rational(1, 2));
        f3.add_term({1, 1}, Rational(1, 2));
    } else {
        f3.add_term({1, 0}, Rational(1, 2));
        f3.add_term({0, 1}, Rational(1, 2));
    }
    f4.add_term({0, 0}, Rational(1, 2));
    f4.add_term({1, -1}, Rational(1, 2));
    LaurentPoly p = pow(f1, a) * pow(f2, b) * pow(f3, g) * pow(f4, dl);
    if (!normalized) p *= Rational(4);
    return p;
}

LaurentPoly box_symbol_shifted4(int a, int b, int g, int dl) {
    return box_symbol(a, b, g, dl).shifted({0, dl});
}

std::string GeneratorLabel::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::box3:
        case Kind::box3_tilde:
        case Kind::box4: {
            os << (kind == Kind::box3_tilde ? "B~#(" : "B#(");
            for (std::size_t i = 0; i < box_index.size(); ++i) os << (i ? "," : "") << box_index[i];
            os << ")";
            break;
        }
        case Kind::q_theta:
        case Kind::q_tilde: {
            const char* head = kind == Kind::q_tilde ? "q~(" : "q(";
            for (std::size_t f = 0; f < thetas.size(); ++f) {
                if (f) os << "*";
                os << head;
                for (std::size_t i = 0; i < thetas[f].size(); ++i)
                    os << (i ? "," : "") << column_name(thetas[f][i]);
                os << ")";
            }
            break;
        }
    }
    return os.str();
}

GeneratorSet generator_set_Ik(int k, Variant variant) {
    if (k < 1) throw std::invalid_argument("order must be >= 1");
    GeneratorSet set;
    set.order = k;
    set.dim = 2;
    set.variant = variant;
    std::map<std::vector<int>, bool> seen;
    auto push = [&](int a, int b, int g) {
        std::vector<int> key{a, b, g};
        if (seen.count(key)) return;
        seen[key] = true;
        Generator gen;
        gen.label.kind = variant == Variant::standard ? GeneratorLabel::Kind::box3
                                                      : GeneratorLabel::Kind::box3_tilde;
        gen.label.box_index = key;
        gen.symbol = box_symbol(a, b, g, 0, variant);
        set.members.push_back(std::move(gen));
    };
    for (int a = 0; a <= k / 2; ++a) {
        int b = k - a;
        push(b, b, a);
        push(b, a, b);
        push(a, b, b);
    }
    return set;
}

GeneratorSet generator_set_products(int d, int k, Variant variant) {
    if (k < 1) throw std::invalid_argument("order must be >= 1");
    DirectionMatrix X = direction_matrix(d, Sections::first_two);
    std::vector<std::vector<Exponents>> bases;
    for (const auto& sub : unimodular_submatrices(X))
        if (sub.det == 1 || sub.det == -1) bases.push_back(sub.columns);

    GeneratorSet set;
    set.order = k;
    set.dim = d;
    set.variant = variant;
    std::map<std::string, bool> seen;
    // multisets of k base generators, non-decreasing index order
    std::vector<int> choice(k, 0);
    while (true) {
        Generator gen;
        gen.label.kind = variant == Variant::standard ? GeneratorLabel::Kind::q_theta
                                                      : GeneratorLabel::Kind::q_tilde;
        LaurentPoly prod = LaurentPoly::constant(d, 1);
        for (int c : choice) {
            gen.label.thetas.push_back(bases[c]);
            prod *= generator_q(bases[c], variant);
        }
        gen.symbol = std::move(prod);
        std::string key = gen.symbol.to_string();
        if (!seen.count(key)) {
            seen[key] = true;
            set.members.push_back(std::move(gen));
        }
        int i = k - 1;
        while (i >= 0 && choice[i] == static_cast<int>(bases.size()) - 1) --i;
        if (i < 0) break;
        ++choice[i];
        for (int j = i + 1; j < k; ++j) choice[j] = choice[i];
    }
    return set;
}

GeneratorSet generator_set(int d, int k, Variant variant) {
    if (d == 2) return generator_set_Ik(k, variant);
    return generator_set_products(d, k, variant);
}

int max_sumrule_order(int a, int b, int g, int dl) {
    return a + b + g + dl - std::max({a, b, g + dl});
}

int smoothness_kappa(int a, int b, int g, int dl) {
    return a + b + g + dl - std::max({a, b, g, dl});
}

bool kappa_exceeds_order(int a, int b, int g, int dl) {
    return g + dl > std::max(a, b) && std::min(g, dl) > 0;
}

std::vector<FourDirTerm> expand_4dir_to_3dir(int a, int b, int g, int dl) {
    std::vector<FourDirTerm> out;
    for (int l = 0; l <= dl; ++l) {
        FourDirTerm t;
        t.monomial = {0, -dl};
        t.coeff = Rational(binomial(dl, l)) * pow2q(l) * ((dl - l) % 2 ? -1 : 1);
        t.a3 = a + l;
        t.b3 = b + l;
        t.g3 = g + dl - l;
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

// D^n of u^A * v^G at a point, u = (1+z)/2 and v = either (z-1)/2 or z/2:
// sum_i n!/2^n * C(A, n-i) u^{A-(n-i)} * C(G, i) v^{G-i}.
Rational derivative_factor(int A, int G, int n, const Rational& u, const Rational& v) {
    Rational acc = 0;
    Rational scale = Rational(factorial(n)) / pow2q(n);
    for (int i = 0; i <= n; ++i) {
        BigInt c1 = n - i <= A ? binomial(A, n - i) : BigInt(0);
        BigInt c2 = i <= G ? binomial(G, i) : BigInt(0);
        if (c1 == 0 || c2 == 0) continue;
        acc += scale * Rational(c1) * rat_pow(u, A - (n - i)) * Rational(c2) * rat_pow(v, G - i);
    }
    return acc;
}

}  // namespace

Rational box_derivative_formula(int a, int b, int g, int n, int m, Variant variant,
                                const std::vector<Rational>& point) {
    if (point.size() != 2) throw std::invalid_argument("bivariate point expected");
    if (a < 0 || b < 0 || g < 0 || n < 0 || m < 0) throw std::invalid_argument("negative index");
    const Rational z1 = point[0], z2 = point[1];
    Rational u1 = (1 + z1) / 2, u2 = (1 + z2) / 2;
    Rational acc = 0;
    for (int l = 0; l <= g; ++l) {
        Rational f1, f2;
        if (variant == Variant::standard) {
            // split (1+z1 z2)/2 = u1 u2 + v1 v2 with v = (z-1)/2
            f1 = derivative_factor(a + l, g - l, n, u1, (z1 - 1) / 2);
            f2 = derivative_factor(b + l, g - l, m, u2, (z2 - 1) / 2);
        } else {
            // split (z1+z2)/2 = z1/2 + z2/2
            f1 = derivative_factor(a, l, n, u1, z1 / 2);
            f2 = derivative_factor(b, g - l, m, u2, z2 / 2);
        }
        acc += Rational(binomial(g, l)) * f1 * f2;
    }
    return acc;
}

}  // namespace subdivbox
