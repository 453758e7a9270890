#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subdivbox/catalog.hpp"
#include "subdivbox/decompose.hpp"

using namespace subdivbox;

namespace {

LaurentPoly biv(std::initializer_list<std::pair<Exponents, Rational>> terms) {
    LaurentPoly p(2);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

DecompositionTerm box3_term(int a, int b, int g, LaurentPoly cofactor) {
    DecompositionTerm t;
    t.label.kind = GeneratorLabel::Kind::box3;
    t.label.box_index = {a, b, g};
    t.generator = box_symbol(a, b, g);
    t.cofactor = std::move(cofactor);
    return t;
}

}  // namespace

TEST_CASE("a pure box-spline mask needs exactly its own generator") {
    Mask m(box_symbol(2, 2, 0, 0, Variant::standard, false));
    Decomposition dec = decompose_auto(m, 2, generator_set_Ik(2));
    REQUIRE(dec.terms.size() == 1);
    CHECK(dec.terms[0].label.box_index == std::vector<int>{2, 2, 0});
    CHECK(dec.terms[0].cofactor == LaurentPoly::constant(2, 1));
    CHECK(dec.lambda_sum == 1);
    CHECK(verify_decomposition(m, dec).valid);
    // The same system is already solvable with no slack at all.
    Decomposition tight = decompose(m, 2, generator_set_Ik(2), 0);
    REQUIRE(tight.terms.size() == 1);
    CHECK(tight.terms[0].cofactor == dec.terms[0].cofactor);
}

TEST_CASE("solver output for the named order-4 schemes verifies exactly") {
    for (const char* name : {"interp4pt2d", "butterfly"}) {
        Mask m = get_scheme(name).mask;
        Decomposition dec = decompose_auto(m, 4, generator_set_Ik(4));
        CHECK(!dec.terms.empty());
        CHECK(dec.lambda_sum == 1);
        CHECK(verify_decomposition(m, dec).valid);
        for (const auto& t : dec.terms) CHECK(t.label.kind == GeneratorLabel::Kind::box3);
    }
}

TEST_CASE("hand-built decomposition of interp4pt2d verifies") {
    // a = 4 { -4 B#(4,4,0) - ((z1^2+z2^2)/2) B#(2,2,2) + 6 ((1+z1+z2)/3) B#(3,3,1) }
    Mask m = get_scheme("interp4pt2d").mask;
    Decomposition dec{m, 4};
    dec.terms.push_back(box3_term(4, 4, 0, biv({{{0, 0}, -4}})));
    dec.terms.push_back(box3_term(2, 2, 2, biv({{{2, 0}, {-1, 2}}, {{0, 2}, {-1, 2}}})));
    dec.terms.push_back(box3_term(3, 3, 1, biv({{{0, 0}, 2}, {{1, 0}, 2}, {{0, 1}, 2}})));
    for (const auto& t : dec.terms) dec.lambda_sum += t.cofactor.at_one();
    CHECK(dec.lambda_sum == 1);
    CHECK(verify_decomposition(m, dec).valid);

    Decomposition norm = normalize_affine(std::move(dec));
    REQUIRE(norm.normalized.has_value());
    CHECK(!norm.normalization_partial);
    const auto& nt = *norm.normalized;
    REQUIRE(nt.size() == 3);
    CHECK(nt[0].lambda == -4);
    CHECK(nt[1].lambda == -1);
    CHECK(nt[2].lambda == 6);
    for (std::size_t i = 0; i < nt.size(); ++i) {
        CHECK(!nt[i].raw);
        CHECK(nt[i].form.at_one() == 1);
        CHECK(nt[i].lambda * nt[i].form == norm.terms[i].cofactor);
    }
}

TEST_CASE("hand-built decomposition of the butterfly verifies") {
    // a = 4 { 7 z1 z2 B#(2,2,2) - 2 z1 B#(1,3,3) - 2 z2 B#(3,1,3) - 2 z1 z2 B#(3,3,1) }
    Mask m = get_scheme("butterfly").mask;
    Decomposition dec{m, 4};
    dec.terms.push_back(box3_term(2, 2, 2, biv({{{1, 1}, 7}})));
    dec.terms.push_back(box3_term(1, 3, 3, biv({{{1, 0}, -2}})));
    dec.terms.push_back(box3_term(3, 1, 3, biv({{{0, 1}, -2}})));
    dec.terms.push_back(box3_term(3, 3, 1, biv({{{1, 1}, -2}})));
    for (const auto& t : dec.terms) dec.lambda_sum += t.cofactor.at_one();
    CHECK(dec.lambda_sum == 1);
    CHECK(verify_decomposition(m, dec).valid);
}

TEST_CASE("modified-variant decomposition") {
    Mask m(box_symbol(1, 0, 1, 0, Variant::modified, false));
    Decomposition dec = decompose_auto(m, 1, generator_set_Ik(1, Variant::modified));
    CHECK(dec.variant == Variant::modified);
    CHECK(dec.lambda_sum == 1);
    CHECK(verify_decomposition(m, dec).valid);
    for (const auto& t : dec.terms) CHECK(t.label.kind == GeneratorLabel::Kind::box3_tilde);
}

TEST_CASE("solution lies within the first escalation slack for small masks") {
    Mask gp = get_scheme("gp-combination").mask;
    Decomposition dec = decompose_auto(gp, 1, generator_set_Ik(1));
    CHECK(verify_decomposition(gp, dec).valid);
    CHECK(dec.lambda_sum == 1);
}

TEST_CASE("precondition failures") {
    Mask gp = get_scheme("gp-combination").mask;
    CHECK_THROWS_AS(decompose_auto(gp, 2, generator_set_Ik(2)), PreconditionError);

    Mask butterfly = get_scheme("butterfly").mask;
    CHECK_THROWS_AS(decompose_auto(butterfly, 4, generator_set_Ik(3)), PreconditionError);

    Mask hat = get_scheme("bspline-2").mask;  // univariate vs bivariate generators
    CHECK_THROWS_AS(decompose_auto(hat, 1, generator_set_Ik(1)), PreconditionError);

    Mask flat(LaurentPoly::constant(2, 4));  // a(1) = 4 but a(-1,-1) = 4 != 0
    CHECK_THROWS_AS(decompose_auto(flat, 1, generator_set_Ik(1)), PreconditionError);

    CHECK_THROWS_AS(decompose(get_scheme("zwart-powell").mask, 2, generator_set_Ik(2), -1),
                    PreconditionError);
}

TEST_CASE("verification catches corrupted cofactors") {
    Mask m(box_symbol(2, 2, 0, 0, Variant::standard, false));
    Decomposition dec = decompose_auto(m, 2, generator_set_Ik(2));
    dec.terms[0].cofactor.add_term({0, 0}, 1);
    auto ver = verify_decomposition(m, dec);
    CHECK(!ver.valid);
    CHECK(ver.residual == Rational(-4) * box_symbol(2, 2, 0));
}

TEST_CASE("raw terms in affine normalization") {
    Mask m(box_symbol(1, 1, 0, 0, Variant::standard, false));
    Decomposition dec{m, 1};
    dec.terms.push_back(box3_term(1, 1, 0, biv({{{0, 0}, 1}})));
    dec.terms.push_back(box3_term(1, 0, 1, biv({{{0, 0}, 1}, {{1, 0}, -1}})));  // lambda = 0
    Decomposition norm = normalize_affine(std::move(dec));
    REQUIRE(norm.normalized.has_value());
    CHECK(norm.normalization_partial);
    CHECK(!(*norm.normalized)[0].raw);
    CHECK((*norm.normalized)[1].raw);
    CHECK((*norm.normalized)[1].form == biv({{{0, 0}, 1}, {{1, 0}, -1}}));
}
