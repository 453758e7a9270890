#pragma once

#include <vector>

#include "subdivbox/laurent.hpp"

namespace subdivbox {

struct DivisionResult {
    std::vector<LaurentPoly> quotients;  // one per divisor, in divisor order
    LaurentPoly remainder;
    // invariant: dividend = sum_i quotients[i]*divisors[i] + remainder
};

// Classical multivariate division in the graded-lex term order (z1 > z2 > ...).
// At each step the leading term of the work polynomial is reduced by the first
// divisor whose leading term divides it; otherwise it moves to the remainder.
// Inputs must be genuine polynomials (no negative exponents): shift Laurent
// inputs with normalize_support first.
DivisionResult multivariate_divide(const LaurentPoly& dividend,
                                   const std::vector<LaurentPoly>& divisors);

}  // namespace subdivbox
