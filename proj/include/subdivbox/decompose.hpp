#pragma once

#include <optional>

#include "subdivbox/boxspline.hpp"
#include "subdivbox/mask.hpp"
#include "subdivbox/sumrules.hpp"

namespace subdivbox {

// Z_k precondition or argument validation failed; maps to CLI exit 2.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Membership may hold, but no cofactors exist within the searched support box.
// Never a statement of non-membership; maps to CLI exit 3.
struct SolverIncomplete : std::runtime_error {
    explicit SolverIncomplete(int slack)
        : std::runtime_error("no cofactors within the support box at slack " +
                             std::to_string(slack) + "; membership undecided"),
          max_slack(slack) {}
    int max_slack;
};

struct DecompositionTerm {
    GeneratorLabel label;
    LaurentPoly generator;  // normalized symbol, value 1 at z = 1
    LaurentPoly cofactor;
};

struct NormalizedTerm {
    GeneratorLabel label;
    bool raw = false;       // cofactor(1) = 0: lambda/sigma form impossible
    Rational lambda;        // cofactor(1) when not raw
    LaurentPoly form;       // sigma (= cofactor/lambda) if not raw, else the raw cofactor
};

// a(z) = sum_t cofactor_t(z) * 2^d * generator_t(z), exactly.
struct Decomposition {
    Mask target;
    int order = 1;
    Variant variant = Variant::standard;
    std::vector<DecompositionTerm> terms;
    std::optional<std::vector<NormalizedTerm>> normalized;
    bool normalization_partial = false;
    Rational lambda_sum;  // sum of cofactor_t(1) over all terms
};

struct VerifyResult {
    bool valid = false;
    LaurentPoly residual;  // a - sum_t cofactor_t * 2^d * generator_t
};

VerifyResult verify_decomposition(const Mask& a, const Decomposition& dec);

// Exact cofactors over a bounded support box: each cofactor ranges over the
// bounding box of a's support, extended below 0 and inflated by `slack` in
// every direction. Deterministic solution: Gaussian elimination with
// generator-major unknown ordering (graded-lex within each cofactor block),
// equations in graded-lex order, first-nonzero pivots, free variables zero.
// Throws PreconditionError if Z_k fails, SolverIncomplete if no solution
// exists within the box.
Decomposition decompose(const Mask& a, int k, const GeneratorSet& gens, int slack);

// Escalates the support slack 2 -> 4 -> 8 -> 16 before giving up.
Decomposition decompose_auto(const Mask& a, int k, const GeneratorSet& gens);

// Affine lambda/sigma form per term: lambda_t = c_t(1), sigma_t = c_t/lambda_t
// normalized to sigma_t(1) = 1. Terms with c_t(1) = 0 are kept raw and the
// normalized list is marked partial.
Decomposition normalize_affine(Decomposition dec);

}  // namespace subdivbox
