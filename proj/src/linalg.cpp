#include "popcrit/linalg.hpp"

#include <stdexcept>

namespace popcrit {

Rref rref(RatMat a, int ncols) {
    Rref out;
    int rows = static_cast<int>(a.size());
    int r = 0;
    for (int col = 0; col < ncols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        Rat inv = 1 / a[r][col];
        for (int j = col; j < ncols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = col; j < ncols; ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
        }
        out.pivots.push_back(col);
        ++r;
    }
    a.resize(r);
    out.m = std::move(a);
    return out;
}

std::optional<LinearSolution> solve_linear(const RatMat& a, const RatVec& b, int ncols) {
    RatMat aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(ncols + 1, Rat(0));
        aug[i][ncols] = b[i];
    }
    Rref rr = rref(std::move(aug), ncols + 1);
    if (!rr.pivots.empty() && rr.pivots.back() == ncols) return std::nullopt;
    LinearSolution sol;
    sol.particular.assign(ncols, Rat(0));
    std::vector<bool> is_piv(ncols, false);
    for (int i = 0; i < rr.rank(); ++i) {
        sol.particular[rr.pivots[i]] = rr.m[i][ncols];
        is_piv[rr.pivots[i]] = true;
    }
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        RatVec v(ncols, Rat(0));
        v[f] = 1;
        for (int i = 0; i < rr.rank(); ++i) v[rr.pivots[i]] = -rr.m[i][f];
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

std::vector<RatVec> nullspace(const RatMat& a, int ncols) {
    RatVec zero(a.size(), Rat(0));
    return solve_linear(a, zero, ncols)->kernel;
}

std::optional<RatMat> inverse(const RatMat& a) {
    int n = static_cast<int>(a.size());
    RatMat aug(n, RatVec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    Rref rr = rref(std::move(aug), 2 * n);
    if (rr.rank() < n || rr.pivots[n - 1] >= n) return std::nullopt;
    RatMat inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = rr.m[i][n + j];
    return inv;
}

Rat determinant(RatMat a) {
    int n = static_cast<int>(a.size());
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

}  // namespace popcrit
