#include "qforge/embed.hpp"

#include "qforge/errors.hpp"
#include "qforge/linalg.hpp"
#include "qforge/pipeline.hpp"

#include "doctest.h"

#include <random>

using namespace qforge;

TEST_CASE("kronecker_type shapes") {
    const Quiver q0 = kronecker_type(0);
    CHECK(q0.vertex_count == 2);
    CHECK(q0.arrows.empty());

    const Quiver q2 = kronecker_type(2);
    CHECK(q2.arrows.size() == 2);
    for (const Arrow& a : q2.arrows) {
        CHECK(a.tail == 1);
        CHECK(a.head == 0);
    }
    CHECK(classify(q2) == QuiverClass::TameEuclidean);
    CHECK(classify(kronecker_type(3)) == QuiverClass::InfiniteNonEuclidean);
    CHECK_THROWS_AS(kronecker_type(-1), InputError);
}

TEST_CASE("cocycle basis on the Kronecker pair") {
    const Quiver t2 = theta(2);
    const Representation s0 = simple_rep(t2, 0);
    const Representation s1 = simple_rep(t2, 1);

    // Ext^1(S_0, S_1) is spanned by the two arrow coordinates.
    const CocycleBasis b = cocycle_basis(s0, s1);
    REQUIRE(b.cocycles.size() == 2);
    CHECK(b.cocycles[0][0].at(0, 0) == 1);
    CHECK(b.cocycles[0][1].at(0, 0) == 0);
    CHECK(b.cocycles[1][0].at(0, 0) == 0);
    CHECK(b.cocycles[1][1].at(0, 0) == 1);

    // Ext of an exceptional representation against itself is empty.
    CHECK(cocycle_basis(s0, s0).cocycles.empty());
}

TEST_CASE("dim_map") {
    const ExceptionalPair p = build_pair(theta(2), RngSpec{7, 10});
    CHECK(dim_map(p, {1, 0}) == p.eps1);
    CHECK(dim_map(p, {0, 0}) == DimVec{0, 0});
    CHECK(dim_map(p, {3, 3}) == DimVec{3, 3}); // 3 * delta
    CHECK_THROWS_AS(dim_map(p, {1, 2, 3}), InputError);
}

TEST_CASE("zwara_rep is pinned bit for bit") {
    const Representation v = zwara_rep();
    CHECK(v.dim == DimVec{3, 3});
    REQUIRE(v.maps.size() == 2);

    const int a[3][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    const int b[3][3] = {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(v.maps[0].at(i, j) == a[i][j]);
            CHECK(v.maps[1].at(i, j) == b[i][j]);
        }
    CHECK(hom_dim(v, v) == 4);
}

TEST_CASE("embedding sends simples to the exceptional representations") {
    for (const auto& [name, q] : euclidean_family()) {
        CAPTURE(name);
        const EmbedData data = make_embed_data(build_pair(q, RngSpec{17, 10}));
        for (int i = 0; i < 2; ++i) {
            const Representation fs = embed_rep(data, simple_rep(data.target_quiver, i));
            const Representation& ei = i == 0 ? data.pair.E1 : data.pair.E2;
            CHECK(fs.dim == ei.dim);
            CHECK(hom_dim(fs, ei) == 1);
            CHECK(hom_dim(ei, fs) == 1);
            CHECK(is_exceptional(fs));
        }
    }
}

TEST_CASE("embedding dimension formula") {
    const EmbedData data = make_embed_data(build_pair(cycle_quiver(3, 1), RngSpec{5, 10}));
    std::mt19937_64 eng(88);
    for (int trial = 0; trial < 10; ++trial) {
        const DimVec alpha{static_cast<int>(eng() % 4), static_cast<int>(eng() % 4)};
        const Representation v = random_rep(data.target_quiver, alpha, RngSpec{eng(), 5});
        const Representation fv = embed_rep(data, v);
        CHECK(fv.dim == dim_map(data.pair, alpha));
        validate_representation(fv);
    }
}

TEST_CASE("hom-controlled sampling across the family") {
    std::mt19937_64 eng(404);
    for (const auto& [name, q] : euclidean_family()) {
        CAPTURE(name);
        const EmbedData data = make_embed_data(build_pair(q, RngSpec{eng(), 10}));
        const Certificate cert = check_hom_controlled(data, RngSpec{eng(), 10}, 8);
        CHECK(cert.all_pass());
    }
}

TEST_CASE("on the Kronecker quiver the round trip reproduces the input") {
    const EmbedData data = make_embed_data(build_pair(theta(2), RngSpec{7, 10}));
    const Representation v = zwara_rep();
    const Representation w = embed_rep(data, v);
    CHECK(w.quiver == theta(2));
    CHECK(w.dim == DimVec{3, 3});
    CHECK(w.maps[0] == v.maps[0]);
    CHECK(w.maps[1] == v.maps[1]);

    // Exhaustive small representations: hom dimensions are preserved.
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int d = -1; d <= 1; ++d) {
                    Representation x{data.target_quiver, {1, 1}, {RatMat(1, 1), RatMat(1, 1)}};
                    Representation y{data.target_quiver, {1, 1}, {RatMat(1, 1), RatMat(1, 1)}};
                    x.maps[0].at(0, 0) = a;
                    x.maps[1].at(0, 0) = b;
                    y.maps[0].at(0, 0) = c;
                    y.maps[1].at(0, 0) = d;
                    CHECK(hom_dim(embed_rep(data, x), embed_rep(data, y)) == hom_dim(x, y));
                }
}

TEST_CASE("embedding is additive on direct sums") {
    const EmbedData data = make_embed_data(build_pair(cycle_quiver(4, 3), RngSpec{21, 10}));
    std::mt19937_64 eng(31);
    for (int trial = 0; trial < 6; ++trial) {
        const Representation x = random_rep(
            data.target_quiver,
            {static_cast<int>(eng() % 3), static_cast<int>(eng() % 3)}, RngSpec{eng(), 4});
        const Representation y = random_rep(
            data.target_quiver,
            {static_cast<int>(eng() % 3), static_cast<int>(eng() % 3)}, RngSpec{eng(), 4});
        const Representation fsum = embed_rep(data, direct_sum(x, y));
        const Representation sum_f = direct_sum(embed_rep(data, x), embed_rep(data, y));
        CHECK(fsum.dim == sum_f.dim);
        CHECK(hom_dim(fsum, fsum) == hom_dim(sum_f, sum_f));
    }
}

TEST_CASE("cocycle basis change by an invertible matrix preserves End dimensions") {
    const Quiver star_in{5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}};
    const ExceptionalPair p = build_pair(star_in, RngSpec{8, 10});
    const EmbedData data = make_embed_data(p);

    // det = 1 transformations of the two cocycles.
    const int t[][4] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 1, 1, 1}, {0, 1, -1, 0}};
    std::mt19937_64 eng(777);
    for (const auto& m : t) {
        EmbedData changed = data;
        for (size_t a = 0; a < p.ambient.arrows.size(); ++a) {
            const RatMat c0 = data.basis.cocycles[0][a];
            const RatMat c1 = data.basis.cocycles[1][a];
            for (size_t i = 0; i < c0.entries.size(); ++i) {
                changed.basis.cocycles[0][a].entries[i] =
                    Rational(m[0]) * c0.entries[i] + Rational(m[1]) * c1.entries[i];
                changed.basis.cocycles[1][a].entries[i] =
                    Rational(m[2]) * c0.entries[i] + Rational(m[3]) * c1.entries[i];
            }
        }
        for (int trial = 0; trial < 5; ++trial) {
            const Representation v = random_rep(
                data.target_quiver,
                {1 + static_cast<int>(eng() % 3), 1 + static_cast<int>(eng() % 3)},
                RngSpec{eng(), 4});
            CHECK(hom_dim(embed_rep(data, v), embed_rep(data, v)) ==
                  hom_dim(embed_rep(changed, v), embed_rep(changed, v)));
        }
    }
}
