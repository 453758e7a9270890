#pragma once

#include <optional>

#include "subdivbox/mask.hpp"

namespace subdivbox {

// Z' = {-1,+1}^d \ {(1,...,1)}, in ascending lexicographic order (-1 first).
std::vector<std::vector<Rational>> zero_set(int d);

struct ZkWitness {
    std::vector<Rational> eps;  // point of Z'
    Exponents j;                // derivative multi-index, |j| < k
    Rational value;             // nonzero value of (D^j a)(eps)
};

struct ZkResult {
    bool holds = false;
    bool normalized = false;  // a(1) == 2^d
    Rational at_one;
    std::optional<ZkWitness> witness;  // first failure, eps-major then graded-lex on j
};

// Zero condition of order k: a(1) = 2^d and (D^j a)(eps) = 0 for all eps in Z'
// and |j| < k. Also called "sum rules of order k" in the literature.
ZkResult check_Zk(const Mask& a, int k);

struct OrderReport {
    int order = 0;
    bool normalized = false;
    Rational at_one;
    bool capped = false;               // search stopped at the cap with Z_cap holding
    std::optional<ZkWitness> witness;  // failure bounding the order (absent if capped)
};

// Largest k <= cap with Z_k holding; cap < 0 selects the default
// (normalized total degree of a, plus 1).
OrderReport sumrule_order(const Mask& a, long cap = -1);

}  // namespace subdivbox
