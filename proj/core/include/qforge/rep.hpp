#pragma once

#include "qforge/quiver.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace qforge {

// A quiver representation: dim(x) at each vertex and, for every arrow a, a
// matrix of shape dim(head a) x dim(tail a). Zero-dimensional vertices carry
// empty matrices.
struct Representation {
    Quiver quiver;
    DimVec dim;
    std::vector<RatMat> maps; // one per arrow, in arrow order
};

bool operator==(const Representation& a, const Representation& b);
void validate_representation(const Representation& v);

// Per-vertex blocks phi(x) of shape dim_target(x) x dim_source(x), subject to
// phi(ha) V(a) = W(a) phi(ta) for every arrow.
struct Morphism {
    Representation source;
    Representation target;
    std::vector<RatMat> blocks;
};

bool is_morphism(const Morphism& f);

// Seeded integer sampling: entries uniform in [-height, height], stream fully
// determined by the seed.
struct RngSpec {
    std::uint64_t seed = 0;
    int height = 10;
};

// Matrix of the map sending per-vertex blocks (phi(x))_x to the per-arrow
// defects (phi(ha) V(a) - W(a) phi(ta))_a. Its kernel is Hom(V, W) and its
// cokernel is Ext^1(V, W).
//
// Coordinate convention, fixed once for the whole project: vertex blocks in
// vertex order with column-major entries inside each block; arrow blocks in
// arrow order, also column-major.
RatMat hom_system_matrix(const Representation& v, const Representation& w);

std::vector<Morphism> hom_basis(const Representation& v, const Representation& w);

// {dim Hom(V, W), dim Ext^1(V, W)} from a single rank computation. Their
// difference always equals euler_form on the dimension vectors; this is
// asserted internally.
std::pair<int, int> hom_ext_dims(const Representation& v, const Representation& w);
int hom_dim(const Representation& v, const Representation& w);
int ext_dim(const Representation& v, const Representation& w);

bool is_schur(const Representation& v);       // End(V) one-dimensional
bool is_exceptional(const Representation& v); // Schur with Ext^1(V, V) = 0

Representation random_rep(const Quiver& q, const DimVec& alpha, const RngSpec& rng);

// Minimum of hom_dim (resp. ext_dim) over `trials` independently sampled
// pairs; an upper bound for the generic value that is exact with probability
// one. Deterministic per seed, and nonincreasing in `trials` because samples
// are drawn as a prefix-stable stream.
int generic_hom(const Quiver& q, const DimVec& alpha, const DimVec& beta,
                const RngSpec& rng, int trials = 5);
int generic_ext(const Quiver& q, const DimVec& alpha, const DimVec& beta,
                const RngSpec& rng, int trials = 5);

// generic_hom == 0 and generic_ext == 0.
bool orth(const Quiver& q, const DimVec& alpha, const DimVec& beta,
          const RngSpec& rng, int trials = 5);

Representation direct_sum(const Representation& a, const Representation& b);
Representation simple_rep(const Quiver& q, int vertex);

// Zero spaces outside the kept vertices, zero matrices on arrows not kept.
Representation extend_by_zero(const Representation& sub, const SubquiverWitness& w,
                              const Quiver& ambient);

} // namespace qforge
