#pragma once

#include "qforge/exceptional.hpp"

namespace qforge {

// Basis of Ext^1(source, target) written out as cocycles: cocycles[k][a] is a
// matrix of shape dim_target(head a) x dim_source(tail a), one per ambient
// arrow. Residues of the cocycles form a basis of coker of the hom system
// matrix of (source, target).
struct CocycleBasis {
    Representation source; // E2
    Representation target; // E1
    std::vector<std::vector<RatMat>> cocycles;
};

bool operator==(const CocycleBasis& a, const CocycleBasis& b);

// Everything needed to evaluate the embedding functor: the pair, a cocycle
// basis for Ext^1(E2, E1), and the two-vertex target quiver with m arrows.
struct EmbedData {
    ExceptionalPair pair;
    CocycleBasis basis;
    Quiver target_quiver;
};

// Two vertices and m parallel arrows from vertex 1 to vertex 0. Vertex i
// hosts eps_{i+1}, and the arrows run from the eps2 slot to the eps1 slot.
Quiver kronecker_type(int m);

// Cokernel representatives of the hom system matrix of (E2, E1), reshaped
// into per-arrow blocks with the project-wide column-major convention.
// Deterministic.
CocycleBasis cocycle_basis(const Representation& e2, const Representation& e1);

EmbedData make_embed_data(const ExceptionalPair& p);

// alpha[0] * eps1 + alpha[1] * eps2, componentwise over the ambient quiver.
DimVec dim_map(const ExceptionalPair& p, const DimVec& alpha);

// The embedding functor on objects. For V over kronecker_type(m) with
// dim V = (a1, a2), the image W has
//   W(x)  =  E1(x) (x) k^{a1}  (+)  E2(x) (x) k^{a2}      (E1 block first)
// and on each ambient arrow the block upper-triangular matrix with diagonal
// kron(E1(a), I_{a1}), kron(E2(a), I_{a2}) and off-diagonal block
// sum_k kron(cocycle_k(a), M_k), where M_k is V's matrix on the k-th arrow.
// Rows and columns inside a block are grouped as (E-basis outer, copy index
// inner), i.e. plain Kronecker products. dim W = dim_map(pair, dim V).
Representation embed_rep(const EmbedData& data, const Representation& v);

// The pinned Kronecker-quiver representation of dimension (3, 3) whose orbit
// closure is neither unibranch nor Cohen-Macaulay (Zwara's example); the
// matrices are fixed bit for bit.
Representation zwara_rep();

// Samples pairs (V, V') over the target quiver with per-vertex dimensions at
// most 3 and records hom_dim(F V, F V') = hom_dim(V, V') as well as
// ext_dim(F V, F V') = ext_dim(V, V'), one certificate entry per sample.
Certificate check_hom_controlled(const EmbedData& data, const RngSpec& rng, int samples);

} // namespace qforge
