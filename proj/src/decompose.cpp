#include "subdivbox/decompose.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace subdivbox {

VerifyResult verify_decomposition(const Mask& a, const Decomposition& dec) {
    VerifyResult res{false, a.symbol()};
    Rational scale = pow2q(a.dim());
    for (const auto& t : dec.terms) res.residual -= scale * (t.cofactor * t.generator);
    res.valid = res.residual.is_zero();
    return res;
}

namespace {

// dense enumeration of an integer box, sorted graded-lex ascending
std::vector<Exponents> box_points(const Exponents& lo, const Exponents& hi) {
    const int d = static_cast<int>(lo.size());
    std::vector<Exponents> pts;
    Exponents cur = lo;
    while (true) {
        pts.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == hi[i]) cur[i--] = lo[i];
        if (i < 0) break;
        ++cur[i];
    }
    std::sort(pts.begin(), pts.end(), GradedLexLess{});
    return pts;
}

using SparseRow = std::map<long, Rational>;

// Returns cofactors (one per generator) or nullopt if the system has no
// solution within the box.
std::optional<std::vector<LaurentPoly>> solve_at_slack(const Mask& a, const GeneratorSet& gens,
                                                       int slack) {
    const int d = a.dim();
    const Rational scale = pow2q(d);
    auto abox = a.symbol().support_box();
    if (!abox) return std::nullopt;

    Exponents lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        lo[i] = std::min(abox->first[i], 0) - slack;
        hi[i] = std::max(abox->second[i], 0) + slack;
    }
    std::vector<Exponents> unknowns = box_points(lo, hi);
    const long block = static_cast<long>(unknowns.size());
    std::map<Exponents, long, GradedLexLess> unknown_pos;
    for (long p = 0; p < block; ++p) unknown_pos[unknowns[p]] = p;

    // equation exponents: every point reachable by (cofactor box) + supp(g)
    Exponents elo = lo, ehi = hi;
    for (const auto& g : gens.members) {
        auto gb = g.symbol.support_box();
        for (int i = 0; i < d; ++i) {
            elo[i] = std::min(elo[i], lo[i] + gb->first[i]);
            ehi[i] = std::max(ehi[i], hi[i] + gb->second[i]);
        }
    }

    // generator-major unknown ordering: unknown (t, u) -> t*block + pos(u)
    std::map<long, SparseRow> pivot_rows;  // pivot unknown -> normalized row
    std::map<long, Rational> pivot_rhs;

    Exponents u(d);
    for (const auto& e : box_points(elo, ehi)) {
        SparseRow row;
        for (std::size_t t = 0; t < gens.members.size(); ++t)
            for (const auto& [ge, gc] : gens.members[t].symbol.terms()) {
                bool inside = true;
                for (int i = 0; i < d; ++i) {
                    u[i] = e[i] - ge[i];
                    if (u[i] < lo[i] || u[i] > hi[i]) {
                        inside = false;
                        break;
                    }
                }
                if (!inside) continue;
                long idx = static_cast<long>(t) * block + unknown_pos[u];
                Rational& slot = row[idx];
                slot += scale * gc;
                if (slot == 0) row.erase(idx);
            }
        Rational rhs = a.symbol().coeff(e);
        // reduce against existing pivots (first nonzero = smallest index)
        while (!row.empty()) {
            long j = row.begin()->first;
            auto piv = pivot_rows.find(j);
            if (piv == pivot_rows.end()) break;
            Rational f = row.begin()->second;
            for (const auto& [jj, c] : piv->second) {
                Rational& slot = row[jj];
                slot -= f * c;
                if (slot == 0) row.erase(jj);
            }
            rhs -= f * pivot_rhs[j];
        }
        if (row.empty()) {
            if (rhs != 0) return std::nullopt;  // inconsistent within this box
            continue;
        }
        long j = row.begin()->first;
        Rational lead = row.begin()->second;
        for (auto& [jj, c] : row) c /= lead;
        pivot_rhs[j] = rhs / lead;
        pivot_rows[j] = std::move(row);
    }

    // back substitution, free unknowns = 0
    std::map<long, Rational> value;
    for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
        long j = it->first;
        Rational v = pivot_rhs[j];
        for (const auto& [jj, c] : it->second) {
            if (jj == j) continue;
            auto found = value.find(jj);
            if (found != value.end()) v -= c * found->second;
        }
        if (v != 0) value[j] = v;
    }

    std::vector<LaurentPoly> cof(gens.members.size(), LaurentPoly(d));
    for (const auto& [idx, v] : value) cof[idx / block].add_term(unknowns[idx % block], v);
    return cof;
}

std::string witness_text(const ZkResult& zk, int d) {
    std::ostringstream os;
    if (!zk.normalized) {
        os << "a(1) = " << rat_to_string(zk.at_one) << " != 2^" << d;
    } else if (zk.witness) {
        os << "(D^" << exponent_to_string(zk.witness->j) << " a)(";
        for (std::size_t i = 0; i < zk.witness->eps.size(); ++i)
            os << (i ? "," : "") << rat_to_string(zk.witness->eps[i]);
        os << ") = " << rat_to_string(zk.witness->value);
    }
    return os.str();
}

Decomposition build(const Mask& a, int k, const GeneratorSet& gens,
                    std::vector<LaurentPoly> cofactors) {
    Decomposition dec{Mask(a.symbol()), k, gens.variant, {}, std::nullopt, false, Rational(0)};
    for (std::size_t t = 0; t < gens.members.size(); ++t) {
        if (cofactors[t].is_zero()) continue;
        dec.terms.push_back({gens.members[t].label, gens.members[t].symbol, cofactors[t]});
        dec.lambda_sum += cofactors[t].at_one();
    }
    return dec;
}

void check_preconditions(const Mask& a, int k, const GeneratorSet& gens) {
    if (gens.order != k)
        throw PreconditionError("generator set has order " + std::to_string(gens.order) +
                                ", expected " + std::to_string(k));
    if (gens.dim != a.dim()) throw PreconditionError("generator set dimension mismatch");
    ZkResult zk = check_Zk(a, k);
    if (!zk.holds)
        throw PreconditionError("Z_" + std::to_string(k) +
                                " fails: " + witness_text(zk, a.dim()));
}

}  // namespace

Decomposition decompose(const Mask& a, int k, const GeneratorSet& gens, int slack) {
    if (slack < 0) throw PreconditionError("slack must be >= 0");
    check_preconditions(a, k, gens);
    auto sol = solve_at_slack(a, gens, slack);
    if (!sol) throw SolverIncomplete(slack);
    Decomposition dec = build(a, k, gens, std::move(*sol));
    if (!verify_decomposition(a, dec).valid) throw std::logic_error("solver produced invalid decomposition");
    return dec;
}

Decomposition decompose_auto(const Mask& a, int k, const GeneratorSet& gens) {
    check_preconditions(a, k, gens);
    int slack = 2;
    while (true) {
        auto sol = solve_at_slack(a, gens, slack);
        if (sol) {
            Decomposition dec = build(a, k, gens, std::move(*sol));
            if (!verify_decomposition(a, dec).valid)
                throw std::logic_error("solver produced invalid decomposition");
            return dec;
        }
        if (slack >= 16) throw SolverIncomplete(slack);
        slack *= 2;
    }
}

Decomposition normalize_affine(Decomposition dec) {
    std::vector<NormalizedTerm> norm;
    bool partial = false;
    for (const auto& t : dec.terms) {
        NormalizedTerm n;
        n.label = t.label;
        n.lambda = t.cofactor.at_one();
        if (n.lambda == 0) {
            n.raw = true;
            n.form = t.cofactor;
            partial = true;
        } else {
            n.form = Rational(1) / n.lambda * t.cofactor;
        }
        norm.push_back(std::move(n));
    }
    dec.normalized = std::move(norm);
    dec.normalization_partial = partial;
    return dec;
}

}  // namespace subdivbox
