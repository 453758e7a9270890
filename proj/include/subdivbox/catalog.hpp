#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subdivbox/mask.hpp"

namespace subdivbox {

struct UnknownScheme : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemeEntry {
    std::string name;
    std::string description;
    std::string provenance;
    Mask mask;
    std::optional<int> known_order;
    std::optional<bool> known_interpolatory;
};

// Named entries plus the parametric families box3-A-B-G (mask 4 B#(A,B,G)),
// box4-A-B-G-D, and the univariate bspline-K (mask 2((1+z)/2)^K).
SchemeEntry get_scheme(const std::string& name);

struct SchemeListing {
    std::string name;  // concrete name or family pattern
    std::string description;
};

std::vector<SchemeListing> list_schemes();  // deterministic, alphabetical

// Concrete instances (named entries and family representatives) used by the
// round-trip and refinement test suites.
std::vector<std::string> catalog_test_names();

}  // namespace subdivbox
