#include "subdivbox/sumrules.hpp"

#include <functional>

namespace subdivbox {

std::vector<std::vector<Rational>> zero_set(int d) {
    if (d < 1 || d > 8) throw std::invalid_argument("dimension must be in 1..8");
    std::vector<std::vector<Rational>> pts;
    for (long bits = 0; bits < (1L << d); ++bits) {
        std::vector<Rational> p(d);
        bool all_one = true;
        for (int i = 0; i < d; ++i) {
            // bit 0 -> -1 keeps lexicographic order with -1 first
            bool plus = (bits >> (d - 1 - i)) & 1;
            p[i] = plus ? 1 : -1;
            all_one = all_one && plus;
        }
        if (!all_one) pts.push_back(std::move(p));
    }
    return pts;
}

namespace {

// multi-indices of total degree L in d variables, lex ascending
// (z1 most significant), which is graded-lex within the fixed degree
std::vector<Exponents> degree_layer(int d, int L) {
    std::vector<Exponents> out;
    Exponents j(d, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == d - 1) {
            j[pos] = rem;
            out.push_back(j);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            j[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, L);
    return out;
}

// true iff (D^j a)(eps) = 0 for all eps in Z' and |j| = L; otherwise the
// eps-major first failure within the layer
bool layer_holds(const LaurentPoly& a, const std::vector<std::vector<Rational>>& zp, int L,
                 std::optional<ZkWitness>& witness) {
    auto js = degree_layer(a.dim(), L);
    std::vector<LaurentPoly> ders;
    ders.reserve(js.size());
    for (const auto& j : js) ders.push_back(a.derivative(j));
    for (const auto& eps : zp)
        for (std::size_t t = 0; t < js.size(); ++t) {
            Rational v = ders[t].evaluate(eps);
            if (v != 0) {
                if (!witness) witness = ZkWitness{eps, js[t], v};
                return false;
            }
        }
    return true;
}

}  // namespace

ZkResult check_Zk(const Mask& a, int k) {
    if (k < 1) throw std::invalid_argument("order must be >= 1");
    ZkResult res;
    res.at_one = a.symbol().at_one();
    res.normalized = res.at_one == pow2q(a.dim());
    if (!res.normalized) return res;
    auto zp = zero_set(a.dim());
    // Witness = first failure in scan order: derivative layers |j| = 0,1,...
    // ascending, within a layer eps-major (zero-set order), then j graded-lex.
    for (int L = 0; L < k; ++L)
        if (!layer_holds(a.symbol(), zp, L, res.witness)) return res;
    res.holds = true;
    return res;
}

OrderReport sumrule_order(const Mask& a, long cap) {
    OrderReport rep;
    rep.at_one = a.symbol().at_one();
    rep.normalized = rep.at_one == pow2q(a.dim());
    if (!rep.normalized) return rep;
    if (cap < 0) cap = a.symbol().normalized_total_degree() + 1;
    auto zp = zero_set(a.dim());
    for (long L = 0; L < cap; ++L) {
        std::optional<ZkWitness> w;
        if (!layer_holds(a.symbol(), zp, static_cast<int>(L), w)) {
            rep.order = static_cast<int>(L);
            rep.witness = w;
            return rep;
        }
    }
    rep.order = static_cast<int>(cap);
    rep.capped = true;
    return rep;
}

}  // namespace subdivbox
