#pragma once

#include "qforge/matrix.hpp"

#include <string>
#include <vector>

namespace qforge {

struct Arrow {
    int tail = 0;
    int head = 0;
};

bool operator==(const Arrow& a, const Arrow& b);

// Finite directed multigraph. Vertices are 0..vertex_count-1. The arrow order
// is canonical: it fixes tie-breaking in subquiver extraction and the block
// order of every linear system built downstream.
struct Quiver {
    int vertex_count = 0;
    std::vector<Arrow> arrows;
};

bool operator==(const Quiver& a, const Quiver& b);

void validate_quiver(const Quiver& q);

// Integer vector indexed by vertex (an element of Z^{Q_0}).
using DimVec = std::vector<int>;

DimVec unit_vector(int n, int v);
DimVec add(const DimVec& a, const DimVec& b);
DimVec sub(const DimVec& a, const DimVec& b);
DimVec scale(int k, const DimVec& a);
bool is_nonnegative(const DimVec& a);
bool is_zero(const DimVec& a);

bool is_acyclic(const Quiver& q);
bool is_connected(const Quiver& q);

// <alpha, beta> = sum_x alpha(x) beta(x) - sum_a alpha(ta) beta(ha).
long long euler_form(const Quiver& q, const DimVec& alpha, const DimVec& beta);

// S[x][y] = <e_x, e_y> + <e_y, e_x>. Symmetric; S a = 0 exactly on the
// radical of the Tits form q(a) = <a, a>.
RatMat symmetrized_matrix(const Quiver& q);

enum class QuiverClass {
    Finite,              // Tits form positive definite (Dynkin graph)
    TameEuclidean,       // positive semidefinite with 1-dimensional radical
    InfiniteNonEuclidean // everything else
};

std::string to_string(QuiverClass c);

// Decides the class exactly by symmetric elimination without row exchanges:
// positive definite iff all pivots are positive; a zero pivot is admissible
// for semidefiniteness only when its whole remaining row vanishes.
// Requires a connected acyclic quiver.
QuiverClass classify(const Quiver& q);

// The unique primitive integer vector delta > 0 with S delta = 0.
// Requires classify(q) == TameEuclidean.
DimVec isotropic_root(const Quiver& q);

// A subquiver, recorded against the ambient quiver. kept_vertices and
// kept_arrows are ascending ambient indices; vertex_map[i] is the ambient id
// of subquiver vertex i (equal to kept_vertices[i]).
struct SubquiverWitness {
    std::vector<int> kept_vertices;
    std::vector<int> kept_arrows;
    std::vector<int> vertex_map;
};

bool operator==(const SubquiverWitness& a, const SubquiverWitness& b);

SubquiverWitness full_witness(const Quiver& q);
void validate_witness(const Quiver& q, const SubquiverWitness& w);

// True when every ambient arrow between kept vertices is itself kept. Hom
// dimensions survive extension by zero for any witness; Ext dimensions only
// for vertex-induced ones.
bool is_vertex_induced(const Quiver& q, const SubquiverWitness& w);

// Greedy minimization: repeatedly delete a single arrow (scanned in ascending
// index order), then a single vertex with its incident arrows, whenever the
// remainder stays connected and keeps infinite representation type. The
// fixpoint is a minimal connected non-Dynkin subquiver, i.e. Euclidean.
// Requires a connected acyclic quiver with classify(q) != Finite.
SubquiverWitness find_euclidean_subquiver(const Quiver& q);

Quiver induced_subquiver(const Quiver& q, const SubquiverWitness& w);

// Places `sub` at the kept vertices and zero everywhere else.
DimVec extend_vector(const Quiver& ambient, const SubquiverWitness& w, const DimVec& sub);

} // namespace qforge
