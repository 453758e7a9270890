#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "subdivbox/directions.hpp"

using namespace subdivbox;

TEST_CASE("column layout: weight ascending, lex index sets within a weight") {
    auto X2 = direction_matrix(2, Sections::all);
    CHECK(X2.columns == std::vector<Exponents>{{1, 0}, {0, 1}, {1, 1}});

    auto X3 = direction_matrix(3, Sections::all);
    CHECK(X3.columns == std::vector<Exponents>{{1, 0, 0},
                                               {0, 1, 0},
                                               {0, 0, 1},
                                               {1, 1, 0},
                                               {1, 0, 1},
                                               {0, 1, 1},
                                               {1, 1, 1}});

    auto X3f = direction_matrix(3, Sections::first_two);
    CHECK(X3f.columns.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(X3f.columns[i] == X3.columns[i]);

    // In two variables both section choices coincide.
    CHECK(direction_matrix(2, Sections::first_two).columns == X2.columns);
    CHECK(direction_matrix(1, Sections::all).columns == std::vector<Exponents>{{1}});
    CHECK_THROWS_AS(direction_matrix(0, Sections::all), std::invalid_argument);
}

TEST_CASE("exact determinants") {
    CHECK(column_determinant({{1, 0}, {0, 1}}) == 1);
    CHECK(column_determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(column_determinant({{1, 1}, {1, 1}}) == 0);
    CHECK(column_determinant({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}) == -2);
    CHECK(column_determinant({{2, 0}, {0, 3}}) == 6);
    CHECK_THROWS_AS(column_determinant({{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(column_determinant({}), std::invalid_argument);
}

TEST_CASE("d = 2: every pair of distinct directions is unimodular") {
    auto subs = unimodular_submatrices(direction_matrix(2, Sections::all));
    CHECK(subs.size() == 3);
    for (const auto& s : subs) {
        CHECK(s.odd);
        CHECK((s.det == 1 || s.det == -1));
    }
}

TEST_CASE("d = 3, all sections: 28 odd selections of 35, frozen even list") {
    auto subs = unimodular_submatrices(direction_matrix(3, Sections::all));
    CHECK(subs.size() == 35);
    std::set<std::vector<int>> evens;
    int odd = 0;
    for (const auto& s : subs) {
        CHECK(s.odd == (mpz_odd_p(s.det.get_mpz_t()) != 0));
        if (s.odd)
            ++odd;
        else
            evens.insert(s.indices);
    }
    CHECK(odd == 28);
    CHECK(evens == std::set<std::vector<int>>{{0, 1, 3},
                                              {0, 2, 4},
                                              {0, 5, 6},
                                              {1, 2, 5},
                                              {1, 4, 6},
                                              {2, 3, 6},
                                              {3, 4, 5}});
    for (const auto& s : subs)
        if (s.indices == std::vector<int>{3, 4, 5}) CHECK(s.det == -2);
}

TEST_CASE("d = 3, first two sections: 16 odd of 20, all odd are unimodular") {
    auto subs = unimodular_submatrices(direction_matrix(3, Sections::first_two));
    CHECK(subs.size() == 20);
    int odd = 0;
    for (const auto& s : subs)
        if (s.odd) {
            ++odd;
            CHECK((s.det == 1 || s.det == -1));
        }
    CHECK(odd == 16);
}

TEST_CASE("first two sections, d <= 5: every determinant is 0, +-1, or even") {
    // Columns of weight <= 2 form a graph incidence structure, so no odd
    // determinant other than +-1 can occur; checked exhaustively.
    for (int d = 1; d <= 5; ++d) {
        auto subs = unimodular_submatrices(direction_matrix(d, Sections::first_two));
        for (const auto& s : subs)
            if (s.odd) CHECK((s.det == 1 || s.det == -1));
    }
}
