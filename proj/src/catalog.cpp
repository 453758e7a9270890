#include "subdivbox/catalog.hpp"

#include <sstream>

#include "subdivbox/boxspline.hpp"

namespace subdivbox {

namespace {

// 7x7 integer tables printed top row first; the bottom-left cell is index (0,0),
// so table row r holds second index 6-r.
LaurentPoly from_table(const int (&rows)[7][7], int denominator) {
    LaurentPoly p(2);
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c)
            if (rows[r][c] != 0) p.add_term({c, 6 - r}, Rational(rows[r][c], denominator));
    return p;
}

const int interp4pt2d_table[7][7] = {
    {0, 0, -1, -2, -1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {-1, 0, 10, 18, 10, 0, -1},
    {-2, 0, 18, 32, 18, 0, -2},
    {-1, 0, 10, 18, 10, 0, -1},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, -1, -2, -1, 0, 0},
};

const int butterfly_table[7][7] = {
    {0, 0, 0, 0, -1, -1, 0},
    {0, 0, -1, 0, 2, 0, -1},
    {0, -1, 2, 8, 8, 2, -1},
    {0, 0, 8, 16, 8, 0, 0},
    {-1, 2, 8, 8, 2, -1, 0},
    {-1, 0, 2, 0, -1, 0, 0},
    {0, -1, -1, 0, 0, 0, 0},
};

LaurentPoly bspline_symbol(int k) {
    LaurentPoly f(1);
    f.add_term({0}, Rational(1, 2));
    f.add_term({1}, Rational(1, 2));
    return Rational(2) * pow(f, k);
}

std::vector<int> parse_index_suffix(const std::string& name, std::size_t prefix_len, int count) {
    std::vector<int> idx;
    std::size_t pos = prefix_len;
    while (pos < name.size()) {
        std::size_t dash = name.find('-', pos);
        std::string part = name.substr(pos, dash == std::string::npos ? dash : dash - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw UnknownScheme("bad index '" + part + "' in scheme name '" + name + "'");
        if (part.size() > 2)
            throw UnknownScheme("index " + part + " too large (max 16) in '" + name + "'");
        int v = std::stoi(part);
        if (v > 16) throw UnknownScheme("index " + part + " too large (max 16) in '" + name + "'");
        idx.push_back(v);
        if (dash == std::string::npos) break;
        pos = dash + 1;
    }
    if (static_cast<int>(idx.size()) != count)
        throw UnknownScheme("scheme '" + name + "' needs " + std::to_string(count) + " indices");
    return idx;
}

}  // namespace

SchemeEntry get_scheme(const std::string& name) {
    if (name == "butterfly")
        return {name,
                "interpolatory butterfly scheme, 7x7 mask over /16",
                "butterfly interpolatory scheme (Dyn, Gregory & Levin)",
                Mask(from_table(butterfly_table, 16)),
                4,
                true};
    if (name == "interp4pt2d")
        return {name,
                "bivariate interpolatory four-point-type scheme, 7x7 mask over /32",
                "bivariate four-point-type interpolatory scheme",
                Mask(from_table(interp4pt2d_table, 32)),
                4,
                true};
    if (name == "gp-combination") {
        LaurentPoly s = Rational(2) * box_symbol(1, 1, 0) + Rational(2) * box_symbol(0, 1, 2);
        return {name,
                "affine combination 4(1/2 B#(1,1,0) + 1/2 B#(0,1,2))",
                "convex combination of two three-directional box-spline masks",
                Mask(std::move(s)),
                1,
                std::nullopt};
    }
    if (name == "zwart-powell")
        return {name,
                "Zwart-Powell element, mask 4 B#(1,1,1,1)",
                "Zwart-Powell four-directional box spline",
                Mask(box_symbol(1, 1, 1, 1, Variant::standard, false)),
                2,
                std::nullopt};
    if (name.rfind("box3-", 0) == 0) {
        auto idx = parse_index_suffix(name, 5, 3);
        return {name,
                "three-directional box-spline mask 4 B#(" + std::to_string(idx[0]) + "," +
                    std::to_string(idx[1]) + "," + std::to_string(idx[2]) + ")",
                "three-directional box spline",
                Mask(box_symbol(idx[0], idx[1], idx[2], 0, Variant::standard, false)),
                max_sumrule_order(idx[0], idx[1], idx[2]),
                std::nullopt};
    }
    if (name.rfind("box4-", 0) == 0) {
        auto idx = parse_index_suffix(name, 5, 4);
        return {name,
                "four-directional box-spline mask 4 B#(" + std::to_string(idx[0]) + "," +
                    std::to_string(idx[1]) + "," + std::to_string(idx[2]) + "," +
                    std::to_string(idx[3]) + ")",
                "four-directional box spline",
                Mask(box_symbol(idx[0], idx[1], idx[2], idx[3], Variant::standard, false)),
                max_sumrule_order(idx[0], idx[1], idx[2], idx[3]),
                std::nullopt};
    }
    if (name.rfind("bspline-", 0) == 0) {
        auto idx = parse_index_suffix(name, 8, 1);
        if (idx[0] < 1) throw UnknownScheme("bspline order must be >= 1 in '" + name + "'");
        return {name,
                "univariate B-spline mask 2((1+z)/2)^" + std::to_string(idx[0]),
                "cardinal B-spline of order " + std::to_string(idx[0]),
                Mask(bspline_symbol(idx[0])),
                idx[0],
                std::nullopt};
    }
    std::ostringstream os;
    os << "unknown scheme '" << name << "'; available:";
    for (const auto& s : list_schemes()) os << " " << s.name;
    throw UnknownScheme(os.str());
}

std::vector<SchemeListing> list_schemes() {
    return {
        {"box3-A-B-G", "three-directional box-spline mask 4 B#(A,B,G)"},
        {"box4-A-B-G-D", "four-directional box-spline mask 4 B#(A,B,G,D)"},
        {"bspline-K", "univariate B-spline mask 2((1+z)/2)^K, K >= 1"},
        {"butterfly", "interpolatory butterfly scheme, 7x7 mask over /16"},
        {"gp-combination", "affine combination 4(1/2 B#(1,1,0) + 1/2 B#(0,1,2))"},
        {"interp4pt2d", "bivariate interpolatory four-point-type scheme, 7x7 mask over /32"},
        {"zwart-powell", "Zwart-Powell element, mask 4 B#(1,1,1,1)"},
    };
}

std::vector<std::string> catalog_test_names() {
    return {"bspline-1", "bspline-2",     "bspline-3",      "bspline-4",
            "box3-1-1-1", "box3-2-2-0",   "box4-1-1-1-1",   "box4-2-2-1-1",
            "butterfly",  "gp-combination", "interp4pt2d",  "zwart-powell"};
}

}  // namespace subdivbox
