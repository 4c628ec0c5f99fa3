#include "qforge/linalg.hpp"

#include "qforge/errors.hpp"

#include <algorithm>
#include <utility>

namespace qforge {

Rref rref(RatMat m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i) {
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        const Rational inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

int rank(const RatMat& m) {
    return static_cast<int>(rref(m).pivot_cols.size());
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
    const Rref r = rref(m);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : r.pivot_cols) is_pivot[c] = 1;

    std::vector<RatVec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec x(m.cols, Rational(0));
        x[f] = 1;
        for (size_t k = 0; k < r.pivot_cols.size(); ++k)
            x[r.pivot_cols[k]] = -r.mat.at(static_cast<int>(k), f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<RatVec> cokernel_reps(const RatMat& m) {
    const Rref rt = rref(transpose(m));
    std::vector<char> is_pivot(m.rows, 0);
    for (int c : rt.pivot_cols) is_pivot[c] = 1;

    std::vector<RatVec> reps;
    for (int i = 0; i < m.rows; ++i) {
        if (is_pivot[i]) continue;
        RatVec e(m.rows, Rational(0));
        e[i] = 1;
        reps.push_back(std::move(e));
    }
    return reps;
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw InputError("solve: right-hand side length does not match row count");
    RatMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    const Rref r = rref(std::move(aug));
    if (!r.pivot_cols.empty() && r.pivot_cols.back() == m.cols) return std::nullopt;

    RatVec x(m.cols, Rational(0));
    for (size_t k = 0; k < r.pivot_cols.size(); ++k)
        x[r.pivot_cols[k]] = r.mat.at(static_cast<int>(k), m.cols);
    return x;
}

} // namespace qforge
