#include "subdivbox/convergence.hpp"

#include "subdivbox/polydiv.hpp"

namespace subdivbox {

MatrixLaurent difference_scheme(const Mask& a) {
    const int d = a.dim();
    if (a.symbol().is_zero()) throw std::invalid_argument("zero mask");
    LaurentPoly p = normalize_support(a.symbol()).first;

    std::vector<LaurentPoly> divisors;
    for (int i = 0; i < d; ++i) {
        LaurentPoly g = LaurentPoly::constant(d, 1);
        Exponents sq(d, 0);
        sq[i] = 2;
        g.add_term(sq, -1);  // 1 - z_i^2
        divisors.push_back(std::move(g));
    }

    MatrixLaurent B(d, d, d);
    for (int j = 0; j < d; ++j) {
        LaurentPoly factor = LaurentPoly::constant(d, 1);
        Exponents ej(d, 0);
        ej[j] = 1;
        factor.add_term(ej, -1);  // 1 - z_j
        DivisionResult div = multivariate_divide(p * factor, divisors);
        if (!div.remainder.is_zero())
            throw NonzeroRemainder("difference scheme: a(z)(1-z" + std::to_string(j + 1) +
                                       ") is not in <1-z_i^2>; Z_1 violated, remainder " +
                                       div.remainder.to_string(),
                                   div.remainder);
        for (int i = 0; i < d; ++i) B.at(i, j) = std::move(div.quotients[i]);
    }
    return B;
}

namespace {

MatrixLaurent substitute_power_matrix(const MatrixLaurent& B, int m) {
    MatrixLaurent out(B.dim(), B.rows(), B.cols());
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) out.at(i, j) = B.at(i, j).substitute_power(m);
    return out;
}

MatrixLaurent matmul(const MatrixLaurent& X, const MatrixLaurent& Y) {
    if (X.cols() != Y.rows()) throw std::invalid_argument("matrix shape mismatch");
    MatrixLaurent out(X.dim(), X.rows(), Y.cols());
    for (int i = 0; i < X.rows(); ++i)
        for (int j = 0; j < Y.cols(); ++j)
            for (int k = 0; k < X.cols(); ++k) out.at(i, j) += X.at(i, k) * Y.at(k, j);
    return out;
}

// residue-bucket norm of an already-iterated symbol C = B^{[r]}
Rational residue_norm(const MatrixLaurent& C, int r) {
    const int d = C.dim();
    const int M = 1 << r;
    Rational best = 0;
    Exponents res(d);
    for (int j = 0; j < C.cols(); ++j) {
        std::map<Exponents, Rational, GradedLexLess> buckets;
        for (int i = 0; i < C.rows(); ++i)
            for (const auto& [e, c] : C.at(i, j).terms()) {
                for (int v = 0; v < d; ++v) res[v] = ((e[v] % M) + M) % M;
                buckets[res] += rat_abs(c);
            }
        for (const auto& [e, s] : buckets)
            if (s > best) best = s;
    }
    return best;
}

}  // namespace

MatrixLaurent iterated_symbol(const MatrixLaurent& B, int r) {
    if (r < 1) throw std::invalid_argument("iteration depth must be >= 1");
    MatrixLaurent acc = B;
    int m = 1;
    for (int s = 2; s <= r; ++s) {
        m *= 2;
        acc = matmul(substitute_power_matrix(B, m), acc);
    }
    return acc;
}

Rational operator_norm_inf(const MatrixLaurent& B, int r) {
    return residue_norm(iterated_symbol(B, r), r);
}

ConvergenceCertificate certify_convergence(const Mask& a, int r_max) {
    if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
    MatrixLaurent B = difference_scheme(a);
    ConvergenceCertificate cert;
    MatrixLaurent acc = B;
    int m = 1;
    for (int r = 1; r <= r_max; ++r) {
        if (r > 1) {
            m *= 2;
            acc = matmul(substitute_power_matrix(B, m), acc);
        }
        Rational norm = residue_norm(acc, r);
        cert.norms.push_back(norm);
        if (cert.norms.size() == 1 || norm < cert.best_norm) {
            cert.best_norm = norm;
            cert.best_r = r;
        }
        if (norm < 1) {
            cert.certified = true;
            cert.r = r;
            cert.norm = norm;
            return cert;
        }
    }
    cert.r = r_max;
    return cert;
}

DataGrid delta_grid(int dim) {
    DataGrid g;
    g.dim = dim;
    g.level = 0;
    g.values[Exponents(dim, 0)] = 1;
    return g;
}

DataGrid subdivide(const Mask& a, const DataGrid& d0, int steps) {
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");
    if (a.dim() != d0.dim) throw std::invalid_argument("dimension mismatch");
    DataGrid cur = d0;
    Exponents idx(a.dim());
    for (int s = 0; s < steps; ++s) {
        DataGrid next;
        next.dim = cur.dim;
        next.level = cur.level + 1;
        for (const auto& [beta, dv] : cur.values)
            for (const auto& [gamma, av] : a.symbol().terms()) {
                for (int i = 0; i < a.dim(); ++i) idx[i] = 2 * beta[i] + gamma[i];
                Rational& slot = next.values[idx];
                slot += dv * av;
                if (slot == 0) next.values.erase(idx);
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace subdivbox
