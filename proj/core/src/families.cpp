#include "qforge/pipeline.hpp"

#include "qforge/errors.hpp"

namespace qforge {

Quiver theta(int m) {
    if (m < 0) throw InputError("theta: arrow count must be nonnegative");
    Quiver q;
    q.vertex_count = 2;
    for (int k = 0; k < m; ++k) q.arrows.push_back({0, 1});
    return q;
}

Quiver path_quiver(int n) {
    if (n < 1) throw InputError("path_quiver: need at least one vertex");
    Quiver q;
    q.vertex_count = n;
    for (int v = 0; v + 1 < n; ++v) q.arrows.push_back({v, v + 1});
    return q;
}

Quiver cycle_quiver(int n, unsigned orientation_mask) {
    if (n < 3) throw InputError("cycle_quiver: need at least three vertices");
    Quiver q;
    q.vertex_count = n;
    for (int i = 0; i < n; ++i) {
        const int u = i;
        const int v = (i + 1) % n;
        if (orientation_mask & (1u << i))
            q.arrows.push_back({v, u});
        else
            q.arrows.push_back({u, v});
    }
    return q;
}

namespace {

// 4-star: center 0, leaves 1..4.
Quiver four_star(bool inward) {
    Quiver q;
    q.vertex_count = 5;
    for (int leaf = 1; leaf <= 4; ++leaf) {
        if (inward)
            q.arrows.push_back({leaf, 0});
        else
            q.arrows.push_back({0, leaf});
    }
    return q;
}

// Double fork: centers 0-1, leaves 2,3 on 0 and 4,5 on 1.
Quiver double_fork(bool inward) {
    Quiver q;
    q.vertex_count = 6;
    auto arrow = [&](int from, int to) { q.arrows.push_back({from, to}); };
    if (inward) {
        arrow(2, 0);
        arrow(3, 0);
        arrow(4, 1);
        arrow(5, 1);
        arrow(0, 1);
    } else {
        arrow(0, 2);
        arrow(0, 3);
        arrow(1, 4);
        arrow(1, 5);
        arrow(1, 0);
    }
    return q;
}

// Three arms of length two around center 0: arms (1,2), (3,4), (5,6) with
// the odd vertex adjacent to the center.
Quiver three_armed_star(bool inward) {
    Quiver q;
    q.vertex_count = 7;
    auto arm = [&](int mid, int tip) {
        if (inward) {
            q.arrows.push_back({tip, mid});
            q.arrows.push_back({mid, 0});
        } else {
            q.arrows.push_back({0, mid});
            q.arrows.push_back({mid, tip});
        }
    };
    arm(1, 2);
    arm(3, 4);
    arm(5, 6);
    return q;
}

} // namespace

std::vector<NamedQuiver> euclidean_family() {
    std::vector<NamedQuiver> out;
    out.push_back({"theta2", theta(2)});
    for (int n = 3; n <= 4; ++n) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            const Quiver q = cycle_quiver(n, mask);
            if (!is_acyclic(q)) continue;
            out.push_back({"cycle" + std::to_string(n) + "_m" + std::to_string(mask), q});
        }
    }
    out.push_back({"four_star_in", four_star(true)});
    out.push_back({"four_star_out", four_star(false)});
    out.push_back({"double_fork_in", double_fork(true)});
    out.push_back({"double_fork_out", double_fork(false)});
    out.push_back({"three_armed_star_in", three_armed_star(true)});
    out.push_back({"three_armed_star_out", three_armed_star(false)});
    return out;
}

std::vector<NamedQuiver> forge_family() {
    std::vector<NamedQuiver> out = euclidean_family();
    out.push_back({"theta3", theta(3)});

    // Three wild 5-vertex quivers whose greedy extraction lands on three
    // different Euclidean shapes (double edge, 4-star, triangle).
    Quiver a;
    a.vertex_count = 5;
    a.arrows = {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 4}};
    out.push_back({"wild5_double_edge_path", a});

    Quiver b;
    b.vertex_count = 5;
    b.arrows = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}};
    out.push_back({"wild5_two_triangles", b});

    Quiver c;
    c.vertex_count = 5;
    c.arrows = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}};
    out.push_back({"wild5_fan", c});

    return out;
}

} // namespace qforge
