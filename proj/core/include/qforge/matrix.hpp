#pragma once

#include "qforge/rational.hpp"

#include <vector>

namespace qforge {

using RatVec = std::vector<Rational>;

// Dense rational matrix, row-major. 0xN and Nx0 shapes are legal; they show
// up whenever a vertex carries the zero space.
struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> entries; // rows*cols, row-major

    RatMat() = default;
    RatMat(int r, int c); // zero-filled

    static RatMat identity(int n);

    Rational& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
};

bool operator==(const RatMat& a, const RatMat& b);

RatMat mul(const RatMat& a, const RatMat& b);
RatVec mul(const RatMat& a, const RatVec& x);
RatMat transpose(const RatMat& m);

// Kronecker product: entry ((i*b.rows+p), (j*b.cols+q)) = a(i,j) * b(p,q).
RatMat kron(const RatMat& a, const RatMat& b);

// Columns of `b` appended to the right of `a`.
RatMat hstack(const RatMat& a, const RatMat& b);

bool is_zero(const RatMat& m);

} // namespace qforge
