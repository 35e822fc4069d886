#include "scl/linalg.hpp"

#include <cstddef>

namespace scl {

QMat qmat_from_rows(const std::vector<std::vector<long long>>& rows) {
    QMat a(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        a[i].reserve(rows[i].size());
        for (long long v : rows[i]) a[i].emplace_back(static_cast<long>(v));
    }
    return a;
}

namespace {

// Removes row/column `piv` after subtracting the rank-one update a_i a_j / a_pp.
QMat schur_complement(const QMat& a, std::size_t piv) {
    const std::size_t n = a.size();
    QMat b(n - 1, std::vector<Rat>(n - 1));
    std::size_t bi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == piv) continue;
        std::size_t bj = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == piv) continue;
            b[bi][bj] = a[i][j] - a[i][piv] * a[piv][j] / a[piv][piv];
            ++bj;
        }
        ++bi;
    }
    return b;
}

bool all_zero(const QMat& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

}  // namespace

bool is_positive_semidefinite(QMat a) {
    while (!a.empty()) {
        std::size_t piv = a.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i][i] < 0) return false;
            if (a[i][i] > 0 && piv == a.size()) piv = i;
        }
        if (piv == a.size()) return all_zero(a);
        a = schur_complement(a, piv);
    }
    return true;
}

bool is_positive_definite(QMat a) {
    while (!a.empty()) {
        if (a[0][0] <= 0) return false;
        a = schur_complement(a, 0);
    }
    return true;
}

int matrix_rank(QMat a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

Rat determinant(QMat a) {
    const std::size_t n = a.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

QMat inverse(QMat a) {
    const std::size_t n = a.size();
    QMat inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace scl
