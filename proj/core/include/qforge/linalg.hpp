#pragma once

#include "qforge/matrix.hpp"

#include <optional>
#include <vector>

namespace qforge {

// Reduced row echelon form. Pivoting is deterministic: columns are scanned in
// order and the first unused row with a nonzero entry becomes the pivot, so
// every downstream basis choice is reproducible bit for bit.
struct Rref {
    RatMat mat;
    std::vector<int> pivot_cols; // ascending
};

Rref rref(RatMat m);

int rank(const RatMat& m);

// Exactly (cols - rank) vectors spanning {x : Mx = 0}, one per free column in
// ascending column order: the free coordinate is set to 1 and the pivot
// coordinates are read off the RREF.
std::vector<RatVec> kernel_basis(const RatMat& m);

// Exactly (rows - rank) standard basis vectors of the codomain whose residues
// form a basis of codomain/image(M): those sitting at the non-pivot
// coordinates of the column space's RREF.
std::vector<RatVec> cokernel_reps(const RatMat& m);

// Some x with Mx = b (free coordinates zero), or nullopt if inconsistent.
std::optional<RatVec> solve(const RatMat& m, const RatVec& b);

} // namespace qforge
