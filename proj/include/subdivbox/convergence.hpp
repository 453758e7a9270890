#pragma once

#include <map>
#include <optional>

#include "subdivbox/mask.hpp"

namespace subdivbox {

// Nonzero remainder in the difference-scheme division: Z_1 is violated.
struct NonzeroRemainder : std::runtime_error {
    NonzeroRemainder(std::string what, LaurentPoly rem)
        : std::runtime_error(std::move(what)), remainder(std::move(rem)) {}
    LaurentPoly remainder;
};

class MatrixLaurent {
public:
    MatrixLaurent(int dim, int rows, int cols)
        : dim_(dim), rows_(rows), cols_(cols), entries_(rows * cols, LaurentPoly(dim)) {}

    int dim() const { return dim_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentPoly& at(int i, int j) { return entries_[i * cols_ + j]; }
    const LaurentPoly& at(int i, int j) const { return entries_[i * cols_ + j]; }

private:
    int dim_, rows_, cols_;
    std::vector<LaurentPoly> entries_;
};

// B with a(z)(1 - z_j) = sum_i (1 - z_i^2) B_ij(z), column by column via
// multivariate division by {1 - z_1^2, ..., 1 - z_d^2} in that fixed order
// (graded-lex term order). The support of a is normalized first; the result
// depends only on the normalized symbol. Throws NonzeroRemainder when some
// division leaves a remainder (equivalently, a does not vanish on Z').
MatrixLaurent difference_scheme(const Mask& a);

// B^{[r]}(z) = B(z^{2^{r-1}}) ... B(z^2) B(z)  (row-vector data convention).
MatrixLaurent iterated_symbol(const MatrixLaurent& B, int r);

// Exact ell_inf -> ell_inf norm of S_B^r: max over residues e in {0..2^r-1}^d
// and columns j of sum_i sum_beta |(B^{[r]}_{e + 2^r beta})_{ij}|.
Rational operator_norm_inf(const MatrixLaurent& B, int r);

struct ConvergenceCertificate {
    bool certified = false;
    int r = 0;            // certifying depth, or r_max when inconclusive
    Rational norm;        // the certifying norm (< 1) when certified
    int best_r = 0;       // depth attaining the smallest norm seen
    Rational best_norm;
    std::vector<Rational> norms;  // norms for r = 1..r_scanned
};

// Sufficient contraction test: scans r = 1..r_max for the first r with
// operator_norm_inf(B, r) < 1. "Certified" proves C-convergence;
// "inconclusive" is not a proof of divergence.
ConvergenceCertificate certify_convergence(const Mask& a, int r_max);

struct DataGrid {
    int dim = 1;
    int level = 0;
    std::map<Exponents, Rational, GradedLexLess> values;
};

DataGrid delta_grid(int dim);

// (S_a d)_alpha = sum_beta d_beta a_{alpha - 2 beta}, applied `steps` times.
DataGrid subdivide(const Mask& a, const DataGrid& d0, int steps);

}  // namespace subdivbox
