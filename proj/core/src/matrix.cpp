#include "qforge/matrix.hpp"

#include "qforge/errors.hpp"

namespace qforge {

RatMat::RatMat(int r, int c) : rows(r), cols(c) {
    if (r < 0 || c < 0) throw InputError("matrix shape must be nonnegative");
    entries.assign(static_cast<size_t>(r) * static_cast<size_t>(c), Rational(0));
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
}

RatMat mul(const RatMat& a, const RatMat& b) {
    if (a.cols != b.rows) throw InputError("matrix product: inner dimensions differ");
    RatMat out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

RatVec mul(const RatMat& a, const RatVec& x) {
    if (a.cols != static_cast<int>(x.size()))
        throw InputError("matrix-vector product: dimensions differ");
    RatVec out(a.rows, Rational(0));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (a.at(i, j) != 0) out[i] += a.at(i, j) * x[j];
    return out;
}

RatMat transpose(const RatMat& m) {
    RatMat out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            out.at(j, i) = m.at(i, j);
    return out;
}

RatMat kron(const RatMat& a, const RatMat& b) {
    RatMat out(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const Rational& aij = a.at(i, j);
            if (aij == 0) continue;
            for (int p = 0; p < b.rows; ++p)
                for (int q = 0; q < b.cols; ++q)
                    out.at(i * b.rows + p, j * b.cols + q) = aij * b.at(p, q);
        }
    return out;
}

RatMat hstack(const RatMat& a, const RatMat& b) {
    if (a.rows != b.rows) throw InputError("hstack: row counts differ");
    RatMat out(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) out.at(i, a.cols + j) = b.at(i, j);
    }
    return out;
}

bool is_zero(const RatMat& m) {
    for (const auto& e : m.entries)
        if (e != 0) return false;
    return true;
}

} // namespace qforge
