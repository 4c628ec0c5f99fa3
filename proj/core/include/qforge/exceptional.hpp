#pragma once

#include "qforge/certificate.hpp"
#include "qforge/rep.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qforge {

enum class VertexRole { Source, Sink };

std::string to_string(VertexRole r);

// The two-term quiver exceptional sequence used to embed Kronecker
// representations into a Euclidean quiver: dimension vectors (eps1, eps2)
// with exceptional representations (E1, E2) on the ambient quiver, the chosen
// extremity v, and m = -<eps2, eps1> (always 2 here).
struct ExceptionalPair {
    Quiver ambient;
    int v = 0;
    VertexRole order_flag = VertexRole::Source;
    DimVec eps1;
    DimVec eps2;
    Representation E1;
    Representation E2;
    int m = 0;
};

bool operator==(const ExceptionalPair& a, const ExceptionalPair& b);

// Verification failure that carries the full list of checks, so a wrong pair
// is never reported silently.
struct PairError : std::runtime_error {
    Certificate certificate;
    PairError(const std::string& what, Certificate cert)
        : std::runtime_error(what), certificate(std::move(cert)) {}
};

// The exceptional representation of dimension beta, found by sampling random
// integer representations and verifying End = k, Ext^1 = 0 exactly. For a
// real Schur root the exceptional orbit is dense, so a sample succeeds with
// probability one; the height doubles on every retry anyway.
// Requires beta >= 0, beta != 0 and <beta, beta> = 1.
Representation exceptional_rep(const Quiver& q, const DimVec& beta,
                               const RngSpec& rng, int max_retries = 8);

// The smallest-index vertex with delta(v) = 1 that is a source; if there is
// none, the smallest-index such sink. One always exists on an acyclic
// Euclidean quiver.
std::pair<int, VertexRole> choose_vertex(const Quiver& q, const DimVec& delta);

// Assembles the pair (delta - e_v, e_v) — in this order when v is a source,
// swapped when v is a sink — together with its exceptional representations:
// the simple at v, and a sampled exceptional representation on the Dynkin
// quiver Q minus v extended by zero. Every ExceptionalPair invariant is
// verified before returning; failure raises PairError with the certificate.
ExceptionalPair build_pair(const Quiver& q, const RngSpec& rng);

// Re-checks every invariant of the pair from scratch. Failures are recorded,
// never thrown.
Certificate verify_pair(const ExceptionalPair& p);

} // namespace qforge
