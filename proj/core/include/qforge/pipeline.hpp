#pragma once

#include "qforge/embed.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qforge {

// Output of a forge run: the constructed representation W over the input
// quiver plus every ingredient needed to audit it. d_W equals
// extend_vector(witness, 3 * delta) for the extracted Euclidean subquiver.
struct ForgeResult {
    Quiver input_quiver;
    SubquiverWitness witness;
    ExceptionalPair pair;
    CocycleBasis basis;
    Representation w;
    Certificate certificate;
    std::uint64_t seed = 0;
    int height = 10;
};

// End-to-end construction: extract a Euclidean subquiver, build the
// exceptional pair, embed the pinned Kronecker representation through the
// cocycle basis, extend by zero back to the input quiver, and certify every
// checkable hypothesis on the way. Deterministic per seed.
//
// Throws InputError on disconnected or cyclic input, RefusalError on
// representation-finite input, PairError if pair verification fails.
ForgeResult forge(const Quiver& q, const RngSpec& rng);

// Re-derives the whole construction from input_quiver and the stored seed,
// compares it piece by piece against the stored result, and re-runs the
// semantic checks on the stored data. Any tampering surfaces as a named
// failing entry.
Certificate check_result(const ForgeResult& stored);

struct OrbitStats {
    long long group_dim = 0;   // sum of d(x)^2
    long long end_dim = 0;     // dim End(V)
    long long orbit_dim = 0;   // group_dim - end_dim
    long long ambient_dim = 0; // sum over arrows of d(ta) d(ha)
    long long codim = 0;       // ambient_dim - orbit_dim
};

OrbitStats orbit_stats(const Representation& v);

// Fuzz suites: the Euler-form identity on random triples, pair construction
// over the built-in Euclidean family, and hom-controlled sampling on the
// Kronecker quiver.
Certificate selftest(const RngSpec& rng);

struct NamedQuiver {
    std::string name;
    Quiver quiver;
};

// m parallel arrows 0 -> 1.
Quiver theta(int m);

// A_n path 0 -> 1 -> ... -> n-1.
Quiver path_quiver(int n);

// Cycle on n vertices; edge i joins i and (i+1) mod n, directed forward when
// bit i of the mask is 0 and backward otherwise.
Quiver cycle_quiver(int n, unsigned orientation_mask);

// Acyclic Euclidean orientations used throughout the test and selftest
// machinery: the Kronecker quiver, every acyclic orientation of the 3- and
// 4-cycles, and two orientations each of the 4-star, 5-vertex double fork and
// three-legged star with arms of length two. 27 quivers, exercising both the
// source and the sink branch of choose_vertex.
std::vector<NamedQuiver> euclidean_family();

// euclidean_family plus theta(3) and three wild 5-vertex quivers.
std::vector<NamedQuiver> forge_family();

} // namespace qforge
