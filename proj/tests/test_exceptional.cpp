#include "qforge/exceptional.hpp"

#include "qforge/errors.hpp"
#include "qforge/pipeline.hpp"

#include "doctest.h"

using namespace qforge;

TEST_CASE("exceptional representations of pinned roots") {
    const Quiver t2 = theta(2);
    const RngSpec rng{11, 10};

    // Unit vectors give the simples.
    const Representation s = exceptional_rep(t2, {1, 0}, rng);
    CHECK(s.dim == DimVec{1, 0});
    CHECK(is_exceptional(s));

    // A2, dimension (1,1): any nonzero scalar works.
    const Representation a2 = exceptional_rep(path_quiver(2), {1, 1}, rng);
    CHECK(is_exceptional(a2));
    CHECK(a2.maps[0].at(0, 0) != 0);

    // 4-legged Dynkin star, highest root: 2 at the center.
    Quiver d4{4, {{1, 0}, {2, 0}, {3, 0}}};
    REQUIRE(classify(d4) == QuiverClass::Finite);
    const DimVec highest{2, 1, 1, 1};
    REQUIRE(euler_form(d4, highest, highest) == 1);
    const Representation e = exceptional_rep(d4, highest, rng);
    CHECK(is_exceptional(e));
    CHECK(e.dim == highest);
}

TEST_CASE("exceptional_rep rejects non-real roots") {
    const Quiver t2 = theta(2);
    CHECK_THROWS_AS(exceptional_rep(t2, {1, 1}, RngSpec{1, 10}), InputError);  // isotropic
    CHECK_THROWS_AS(exceptional_rep(t2, {0, 0}, RngSpec{1, 10}), InputError);
    CHECK_THROWS_AS(exceptional_rep(t2, {-1, 2}, RngSpec{1, 10}), InputError);
}

TEST_CASE("exceptional_rep exhausts retries on a root that is not Schur") {
    // A double arrow plus an isolated vertex: (1,1,1) has <b,b> = 0 + 1 = 1,
    // but its support is disconnected, so End is at least 2 for every
    // representation and the sampler must give up.
    Quiver q{3, {{0, 1}, {0, 1}}};
    const DimVec beta{1, 1, 1};
    REQUIRE(euler_form(q, beta, beta) == 1);
    CHECK_THROWS_AS(exceptional_rep(q, beta, RngSpec{1, 10}, 4), SearchError);
    try {
        exceptional_rep(q, beta, RngSpec{1, 10}, 4);
    } catch (const SearchError& e) {
        CHECK(std::string(e.what()).find("not a real Schur root") != std::string::npos);
    }
}

TEST_CASE("exceptional representation is unique up to isomorphism") {
    Quiver d4{4, {{1, 0}, {2, 0}, {3, 0}}};
    const DimVec beta{2, 1, 1, 1};
    const Representation a = exceptional_rep(d4, beta, RngSpec{100, 10});
    const Representation b = exceptional_rep(d4, beta, RngSpec{2000, 10});
    CHECK(a.dim == b.dim);
    CHECK(is_exceptional(a));
    CHECK(is_exceptional(b));
    CHECK(hom_dim(a, b) == 1);
    CHECK(hom_dim(b, a) == 1);
}

TEST_CASE("choose_vertex prefers small sources, falls back to sinks") {
    CHECK(choose_vertex(theta(2), {1, 1}) == std::pair{0, VertexRole::Source});

    // Triangle 0->1, 0->2, 1->2.
    Quiver tri{3, {{0, 1}, {0, 2}, {1, 2}}};
    CHECK(choose_vertex(tri, isotropic_root(tri)) == std::pair{0, VertexRole::Source});

    // All-inward 4-star: every leaf is a source; smallest leaf wins.
    Quiver star_in{5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}};
    CHECK(choose_vertex(star_in, isotropic_root(star_in)) ==
          std::pair{1, VertexRole::Source});

    // All-outward 4-star: leaves are sinks, the center has delta = 2.
    Quiver star_out{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
    CHECK(choose_vertex(star_out, isotropic_root(star_out)) ==
          std::pair{1, VertexRole::Sink});

    CHECK_THROWS_AS(choose_vertex(path_quiver(3), {1, 1, 1}), InputError);
}

TEST_CASE("build_pair on the Kronecker quiver matches the frozen data") {
    const ExceptionalPair p = build_pair(theta(2), RngSpec{7, 10});
    CHECK(p.v == 0);
    CHECK(p.order_flag == VertexRole::Source);
    CHECK(p.eps1 == DimVec{0, 1});
    CHECK(p.eps2 == DimVec{1, 0});
    CHECK(p.E1 == simple_rep(theta(2), 1));
    CHECK(p.E2 == simple_rep(theta(2), 0));
    CHECK(p.m == 2);
    CHECK(verify_pair(p).all_pass());
}

TEST_CASE("build_pair succeeds with m = 2 across the euclidean family") {
    for (const auto& [name, q] : euclidean_family()) {
        CAPTURE(name);
        const ExceptionalPair p = build_pair(q, RngSpec{99, 10});
        CHECK(p.m == 2);
        CHECK(verify_pair(p).all_pass());
        CHECK(isotropic_root(q)[p.v] == 1);

        // The support of the long root spans the Dynkin slice.
        const DimVec delta = isotropic_root(q);
        CHECK(add(p.eps1, p.eps2) == delta);
    }
}

TEST_CASE("both vertex roles occur in the family") {
    int sources = 0, sinks = 0;
    for (const auto& [name, q] : euclidean_family()) {
        const ExceptionalPair p = build_pair(q, RngSpec{3, 10});
        (p.order_flag == VertexRole::Source ? sources : sinks) += 1;
    }
    CHECK(sources > 0);
    CHECK(sinks > 0);
}

TEST_CASE("verify_pair detects tampering") {
    ExceptionalPair p = build_pair(theta(2), RngSpec{7, 10});

    SUBCASE("doubled E1 is not Schur") {
        p.E1 = direct_sum(p.E1, p.E1);
        const Certificate cert = verify_pair(p);
        CHECK(!cert.all_pass());
        const CheckEntry* e = cert.find("E1_exceptional");
        REQUIRE(e != nullptr);
        CHECK(!e->pass);
        CHECK(e->details.at("end_dim") == 4);
    }

    SUBCASE("swapping the order against the flag breaks ext vanishing") {
        std::swap(p.E1, p.E2);
        std::swap(p.eps1, p.eps2);
        const Certificate cert = verify_pair(p);
        CHECK(!cert.all_pass());
        const CheckEntry* e = cert.find("ext_E1_E2_vanishes");
        REQUIRE(e != nullptr);
        CHECK(!e->pass);
        CHECK(e->details.at("ext_dim") == 2);
        const CheckEntry* eu = cert.find("euler_eps2_eps1_is_minus_m");
        REQUIRE(eu != nullptr);
        CHECK(!eu->pass);
    }

    SUBCASE("wrong m is caught") {
        p.m = 3;
        const Certificate cert = verify_pair(p);
        CHECK(!cert.all_pass());
        CHECK(!cert.find("m_is_two")->pass);
    }
}

TEST_CASE("build_pair refuses non-Euclidean input") {
    CHECK_THROWS_AS(build_pair(path_quiver(4), RngSpec{1, 10}), InputError);
    CHECK_THROWS_AS(build_pair(theta(3), RngSpec{1, 10}), InputError);
}
