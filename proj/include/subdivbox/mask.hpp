#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "subdivbox/laurent.hpp"

namespace subdivbox {

struct MaskFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A subdivision mask for dilation 2I, kept as its exact symbol a(z) = sum a_alpha z^alpha.
// The symbol is stored as given; no shift or scaling is applied on construction.
class Mask {
public:
    explicit Mask(LaurentPoly symbol) : symbol_(std::move(symbol)) {}

    int dim() const { return symbol_.dim(); }
    const LaurentPoly& symbol() const { return symbol_; }

    // Submask a_e(z) = sum_alpha a_{e+2*alpha} z^alpha for e in {0,1}^d.
    // Reconstruction: a(z) = sum_e z^e a_e(z^2).
    LaurentPoly submask(const Exponents& e) const;

private:
    LaurentPoly symbol_;
};

struct InterpolatoryInfo {
    bool interpolatory = false;
    Exponents e;     // coset whose submask is a single monomial with coefficient 1
    Exponents beta;  // that monomial's exponent: a_e(z) = z^beta
};

// A scheme is interpolatory iff some submask equals a single monomial z^beta
// with coefficient 1 (delta submask up to shift).
InterpolatoryInfo is_interpolatory(const Mask& m);

// Interchange format (the only on-disk representation):
//   {"dim": d, "denominator": D, "coeffs": [{"idx": [..], "num": n}, ...]}
// Coefficient at idx is num/D. Duplicate idx entries are an error.
Mask parse_mask_json(const std::string& text);
std::string mask_to_json(const Mask& m);

Mask load_mask_file(const std::string& path);
void save_mask_file(const Mask& m, const std::string& path);

}  // namespace subdivbox
