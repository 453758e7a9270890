#pragma once

#include <vector>

#include "subdivbox/laurent.hpp"

namespace subdivbox {

// Columns drawn from E' = {0,1}^d \ {0}, grouped by weight (number of ones)
// ascending, within a weight by lexicographic order of the index sets.
struct DirectionMatrix {
    int dim = 0;
    std::vector<Exponents> columns;
};

enum class Sections { first_two, all };

DirectionMatrix direction_matrix(int d, Sections sections);

// Exact determinant of the d x d matrix whose columns are the given vectors.
BigInt column_determinant(const std::vector<Exponents>& cols);

struct Submatrix {
    std::vector<int> indices;  // 0-based positions into the source column list
    std::vector<Exponents> columns;
    BigInt det;
    bool odd = false;  // det ≡ 1 (mod 2)
};

// All C(m, d) choices of d columns, lexicographic on chosen indices,
// each with its exact determinant and parity.
std::vector<Submatrix> unimodular_submatrices(const DirectionMatrix& X);

}  // namespace subdivbox
