#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subdivbox/boxspline.hpp"
#include "subdivbox/catalog.hpp"
#include "subdivbox/convergence.hpp"

using namespace subdivbox;

namespace {

LaurentPoly biv(std::initializer_list<std::pair<Exponents, Rational>> terms) {
    LaurentPoly p(2);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

// The four difference-scheme entries for the generating-function combination,
// as produced by column-wise division in the fixed divisor order.
MatrixLaurent gp_difference_matrix() {
    MatrixLaurent B(2, 2, 2);
    B.at(0, 0) = biv({{{0, 0}, {1, 2}},
                      {{0, 1}, 1},
                      {{0, 2}, {1, 4}},
                      {{0, 3}, {-1, 4}},
                      {{1, 2}, {1, 4}},
                      {{1, 3}, {1, 4}}});
    B.at(0, 1) = biv({{{0, 2}, {-1, 4}}, {{0, 4}, {1, 4}}});
    B.at(1, 0) = biv({{{0, 0}, {1, 4}}, {{0, 1}, {-1, 4}}, {{1, 0}, {-1, 4}}, {{1, 1}, {1, 4}}});
    B.at(1, 1) = biv({{{0, 0}, {3, 4}}, {{1, 0}, {1, 2}}, {{0, 2}, {1, 4}}, {{1, 1}, {1, 2}}});
    return B;
}

bool matrices_equal(const MatrixLaurent& X, const MatrixLaurent& Y) {
    if (X.rows() != Y.rows() || X.cols() != Y.cols()) return false;
    for (int i = 0; i < X.rows(); ++i)
        for (int j = 0; j < X.cols(); ++j)
            if (!(X.at(i, j) == Y.at(i, j))) return false;
    return true;
}

}  // namespace

TEST_CASE("difference scheme of the generating-function combination") {
    Mask gp = get_scheme("gp-combination").mask;
    MatrixLaurent B = difference_scheme(gp);
    CHECK(matrices_equal(B, gp_difference_matrix()));

    // The construction only depends on the normalized symbol.
    MatrixLaurent Bs = difference_scheme(Mask(gp.symbol().shifted({2, -1})));
    CHECK(matrices_equal(Bs, B));

    // Column identity: a(z)(1 - z_j) = sum_i (1 - z_i^2) B_ij.
    LaurentPoly one = LaurentPoly::constant(2, 1);
    LaurentPoly z1 = LaurentPoly::monomial(2, {1, 0});
    LaurentPoly z2 = LaurentPoly::monomial(2, {0, 1});
    LaurentPoly s1 = one - z1 * z1, s2 = one - z2 * z2;
    CHECK(gp.symbol() * (one - z1) == s1 * B.at(0, 0) + s2 * B.at(1, 0));
    CHECK(gp.symbol() * (one - z2) == s1 * B.at(0, 1) + s2 * B.at(1, 1));
}

TEST_CASE("difference scheme rejects masks violating Z_1") {
    LaurentPoly p(1);
    p.add_term({0}, 2);
    p.add_term({2}, 2);
    try {
        difference_scheme(Mask(p));
        FAIL("expected NonzeroRemainder");
    } catch (const NonzeroRemainder& e) {
        LaurentPoly rem(1);
        rem.add_term({0}, 4);
        rem.add_term({1}, -4);
        CHECK(e.remainder == rem);
    }
    CHECK_THROWS_AS(difference_scheme(Mask(LaurentPoly::constant(2, 4))), NonzeroRemainder);
    CHECK_THROWS_AS(difference_scheme(Mask(LaurentPoly(2))), std::invalid_argument);
}

TEST_CASE("iterated symbols follow the coarse-to-fine product") {
    MatrixLaurent B = gp_difference_matrix();
    CHECK(matrices_equal(iterated_symbol(B, 1), B));
    MatrixLaurent manual(2, 2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                manual.at(i, j) += B.at(i, k).substitute_power(2) * B.at(k, j);
    CHECK(matrices_equal(iterated_symbol(B, 2), manual));
    CHECK_THROWS_AS(iterated_symbol(B, 0), std::invalid_argument);
}

TEST_CASE("frozen norms and certificate for the generating-function combination") {
    Mask gp = get_scheme("gp-combination").mask;
    MatrixLaurent B = difference_scheme(gp);
    const std::vector<Rational> expect = {Rational(3, 2), Rational(3, 2), Rational(21, 16),
                                          Rational(69, 64), Rational(219, 256)};
    for (int r = 1; r <= 5; ++r) CHECK(operator_norm_inf(B, r) == expect[r - 1]);

    auto cert = certify_convergence(gp, 8);
    CHECK(cert.certified);
    CHECK(cert.r == 5);
    CHECK(cert.norm == Rational(219, 256));
    CHECK(cert.best_r == 5);
    CHECK(cert.best_norm == Rational(219, 256));
    CHECK(cert.norms == expect);

    auto shallow = certify_convergence(gp, 3);
    CHECK(!shallow.certified);
    CHECK(shallow.r == 3);
    CHECK(shallow.best_norm == Rational(21, 16));
    CHECK(shallow.norms == std::vector<Rational>(expect.begin(), expect.begin() + 3));
}

TEST_CASE("frozen norms for a hand-entered difference matrix") {
    MatrixLaurent B(2, 2, 2);
    B.at(0, 0) = biv({{{1, 3}, {1, 4}},
                      {{0, 3}, {-1, 4}},
                      {{1, 2}, {1, 4}},
                      {{0, 2}, {1, 4}},
                      {{0, 1}, 1},
                      {{0, 0}, {1, 2}}});
    B.at(1, 0) = biv({{{1, 1}, {1, 4}}, {{1, 0}, {-1, 4}}, {{0, 1}, {-1, 4}}, {{0, 0}, {1, 4}}});
    B.at(1, 1) = biv({{{2, 2}, {1, 4}}, {{1, 1}, {1, 2}}, {{1, 0}, {1, 2}}, {{0, 0}, {3, 4}}});

    // Same mask, different valid matrix: both columns reproduce a(z)(1-z_j).
    Mask gp = get_scheme("gp-combination").mask;
    LaurentPoly one = LaurentPoly::constant(2, 1);
    LaurentPoly z1 = LaurentPoly::monomial(2, {1, 0});
    LaurentPoly z2 = LaurentPoly::monomial(2, {0, 1});
    CHECK(gp.symbol() * (one - z1) == (one - z1 * z1) * B.at(0, 0) + (one - z2 * z2) * B.at(1, 0));
    CHECK(gp.symbol() * (one - z2) == (one - z1 * z1) * B.at(0, 1) + (one - z2 * z2) * B.at(1, 1));

    const std::vector<Rational> expect = {Rational(3, 2), Rational(3, 2), Rational(21, 16),
                                          Rational(139, 128), Rational(489, 512)};
    for (int r = 1; r <= 5; ++r) CHECK(operator_norm_inf(B, r) == expect[r - 1]);
}

TEST_CASE("box-spline masks where the contraction test stalls") {
    Mask m110(box_symbol(1, 1, 0, 0, Variant::standard, false));
    MatrixLaurent B = difference_scheme(m110);
    for (int r = 1; r <= 5; ++r) CHECK(operator_norm_inf(B, r) == 1);
    auto cert = certify_convergence(m110, 5);
    CHECK(!cert.certified);
    CHECK(cert.best_norm == 1);

    Mask m012(box_symbol(0, 1, 2, 0, Variant::standard, false));
    MatrixLaurent C = difference_scheme(m012);
    const std::vector<Rational> expect = {2, Rational(5, 2), Rational(11, 4), Rational(23, 8),
                                          Rational(47, 16)};
    for (int r = 1; r <= 5; ++r) CHECK(operator_norm_inf(C, r) == expect[r - 1]);
    CHECK(!certify_convergence(m012, 5).certified);
}

TEST_CASE("univariate hat scheme certifies immediately") {
    Mask hat = get_scheme("bspline-2").mask;
    MatrixLaurent B = difference_scheme(hat);
    LaurentPoly half(1);
    half.add_term({0}, Rational(1, 2));
    half.add_term({1}, Rational(1, 2));
    CHECK(B.at(0, 0) == half);
    CHECK(operator_norm_inf(B, 1) == Rational(1, 2));
    CHECK(operator_norm_inf(B, 2) == Rational(1, 4));
    auto cert = certify_convergence(hat, 4);
    CHECK(cert.certified);
    CHECK(cert.r == 1);
    CHECK(cert.norm == Rational(1, 2));
}

TEST_CASE("refinement of delta data") {
    Mask hat = get_scheme("bspline-2").mask;
    DataGrid d3 = subdivide(hat, delta_grid(1), 3);
    CHECK(d3.level == 3);
    CHECK(d3.values.size() == 15);
    for (int i = 0; i <= 14; ++i) {
        Rational t = Rational(i + 1) / 8;
        Rational expected = t <= 1 ? t : 2 - t;  // hat function B_2 at (i+1)/8
        CHECK(d3.values.at({i}) == expected);
    }

    Mask chart(box_symbol(1, 1, 0, 0, Variant::standard, false));
    DataGrid g2 = subdivide(chart, delta_grid(2), 2);
    CHECK(g2.values.size() == 16);
    for (const auto& [e, v] : g2.values) {
        CHECK(v == 1);
        CHECK((0 <= e[0] && e[0] <= 3 && 0 <= e[1] && e[1] <= 3));
    }
}

TEST_CASE("refinement composes and validates input") {
    Mask gp = get_scheme("gp-combination").mask;
    DataGrid d0;
    d0.dim = 2;
    d0.values[{0, 0}] = 1;
    d0.values[{1, 0}] = 2;
    d0.values[{-1, 2}] = Rational(-3, 7);
    DataGrid two = subdivide(gp, d0, 2);
    DataGrid stepwise = subdivide(gp, subdivide(gp, d0, 1), 1);
    CHECK(two.level == stepwise.level);
    CHECK(two.values == stepwise.values);
    CHECK(subdivide(gp, d0, 0).values == d0.values);
    CHECK_THROWS_AS(subdivide(gp, d0, -1), std::invalid_argument);
    CHECK_THROWS_AS(subdivide(gp, delta_grid(1), 1), std::invalid_argument);
}
