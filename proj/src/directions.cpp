#include "subdivbox/directions.hpp"

#include <algorithm>

namespace subdivbox {

DirectionMatrix direction_matrix(int d, Sections sections) {
    if (d < 1 || d > 8) throw std::invalid_argument("dimension must be in 1..8");
    DirectionMatrix X;
    X.dim = d;
    int max_weight = sections == Sections::all ? d : std::min(d, 2);
    for (int w = 1; w <= max_weight; ++w) {
        // index sets of size w in lexicographic order
        std::vector<int> idx(w);
        for (int i = 0; i < w; ++i) idx[i] = i;
        while (true) {
            Exponents col(d, 0);
            for (int i : idx) col[i] = 1;
            X.columns.push_back(col);
            int i = w - 1;
            while (i >= 0 && idx[i] == d - w + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return X;
}

BigInt column_determinant(const std::vector<Exponents>& cols) {
    const int d = static_cast<int>(cols.size());
    if (d == 0) throw std::invalid_argument("empty matrix");
    for (const auto& c : cols)
        if (static_cast<int>(c.size()) != d) throw std::invalid_argument("matrix is not square");
    // fraction-free over the rationals; matrices are tiny (d <= 8)
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = cols[j][i];
    Rational det = 1;
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < d; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (int c = col; c < d; ++c) m[r][c] -= f * m[col][c];
        }
    }
    if (det.get_den() != 1) throw std::logic_error("integer determinant expected");
    return det.get_num();
}

std::vector<Submatrix> unimodular_submatrices(const DirectionMatrix& X) {
    const int d = X.dim;
    const int m = static_cast<int>(X.columns.size());
    if (m < d) throw std::invalid_argument("need at least d columns");
    std::vector<Submatrix> out;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        Submatrix s;
        s.indices = idx;
        for (int i : idx) s.columns.push_back(X.columns[i]);
        s.det = column_determinant(s.columns);
        s.odd = mpz_odd_p(s.det.get_mpz_t()) != 0;
        out.push_back(std::move(s));
        int i = d - 1;
        while (i >= 0 && idx[i] == m - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace subdivbox
