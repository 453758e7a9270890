#pragma once

#include <string>
#include <vector>

#include "subdivbox/directions.hpp"
#include "subdivbox/laurent.hpp"

namespace subdivbox {

enum class Variant { standard, modified };

// q_Theta = prod_theta (1+z^theta)/2 over the d columns of Theta.
// Modified: r~_{e_k} = (1+z_k)/2, r~_{e_j+e_k} = (z_j+z_k)/2; columns of
// weight > 2 are rejected for the modified variant (r~ is defined only on
// the first two sections).
LaurentPoly generator_q(const std::vector<Exponents>& theta, Variant variant);

// Bivariate box-spline symbols, normalized to value 1 at z = (1,1):
//   standard: ((1+z1)/2)^a ((1+z2)/2)^b ((1+z1 z2)/2)^g ((1+z1/z2)/2)^dl
//   modified (dl = 0 only): third factor ((z1+z2)/2)^g
// normalized=false multiplies by 2^d = 4, giving the refinement mask.
LaurentPoly box_symbol(int a, int b, int g, int dl = 0, Variant variant = Variant::standard,
                       bool normalized = true);

// z2^dl * box_symbol(a,b,g,dl): the polynomial representative with fourth
// factor ((z1+z2)/2)^dl used for ideal-membership arguments.
LaurentPoly box_symbol_shifted4(int a, int b, int g, int dl);

struct GeneratorLabel {
    enum class Kind { q_theta, q_tilde, box3, box3_tilde, box4 } kind;
    std::vector<std::vector<Exponents>> thetas;  // q kinds: one Theta per product factor
    std::vector<int> box_index;                  // box kinds: (a,b,g[,dl])
    std::string to_string() const;
};

struct Generator {
    GeneratorLabel label;
    LaurentPoly symbol;  // normalized: value 1 at z = 1
};

struct GeneratorSet {
    int order = 1;
    int dim = 2;
    Variant variant = Variant::standard;
    std::vector<Generator> members;
};

// The bivariate list I_k = { B#_{b,b,a}, B#_{b,a,b}, B#_{a,b,b} : a = 0..floor(k/2), b = k-a },
// deduplicated, in that listing order (a ascending, slots in the order shown).
GeneratorSet generator_set_Ik(int k, Variant variant = Variant::standard);

// Generators of I^k for general d: k-fold products of q_Theta over all
// unimodular (det = +-1) d-column submatrices Theta of (X^(1)|X^(2)),
// deduplicated by symbol. k = 1 is the plain unimodular family.
GeneratorSet generator_set_products(int d, int k, Variant variant = Variant::standard);

// Dispatch: d == 2 uses I_k, otherwise k-fold q_Theta products.
GeneratorSet generator_set(int d, int k, Variant variant = Variant::standard);

// Closed forms. Order: a+b+g+dl - max{a, b, g+dl} (dl = 0 reduces to
// a+b+g - max). Smoothness: kappa = a+b+g+dl - max{a,b,g,dl}.
int max_sumrule_order(int a, int b, int g, int dl = 0);
int smoothness_kappa(int a, int b, int g, int dl = 0);
// kappa > k iff g+dl > max{a,b} and min{g,dl} > 0.
bool kappa_exceeds_order(int a, int b, int g, int dl = 0);

struct FourDirTerm {
    Exponents monomial;   // z-shift factor, e.g. (0, -dl)
    Rational coeff;       // signed rational weight
    int a3, b3, g3;       // three-directional indices
};

// B#_{a,b,g,dl} = sum_l 2^l (-1)^{dl-l} C(dl,l) z2^{-dl} B#_{a+l, b+l, g+dl-l}.
std::vector<FourDirTerm> expand_4dir_to_3dir(int a, int b, int g, int dl);

// Closed-form derivative sums for D^{(n,m)} of the (normalized) bivariate
// symbols, evaluated exactly at a point; agrees with derivative() everywhere.
Rational box_derivative_formula(int a, int b, int g, int n, int m, Variant variant,
                                const std::vector<Rational>& point);

}  // namespace subdivbox
