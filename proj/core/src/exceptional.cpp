#include "qforge/exceptional.hpp"

#include "qforge/errors.hpp"

#include <random>
#include <stdexcept>

namespace qforge {

std::string to_string(VertexRole r) {
    return r == VertexRole::Source ? "source" : "sink";
}

bool operator==(const ExceptionalPair& a, const ExceptionalPair& b) {
    return a.ambient == b.ambient && a.v == b.v && a.order_flag == b.order_flag &&
           a.eps1 == b.eps1 && a.eps2 == b.eps2 && a.E1 == b.E1 && a.E2 == b.E2 &&
           a.m == b.m;
}

Representation exceptional_rep(const Quiver& q, const DimVec& beta, const RngSpec& rng,
                               int max_retries) {
    validate_quiver(q);
    if (!is_nonnegative(beta) || is_zero(beta))
        throw InputError("exceptional_rep: dimension vector must be nonnegative and nonzero");
    if (euler_form(q, beta, beta) != 1)
        throw InputError("exceptional_rep: <beta, beta> must be 1 (real root)");
    if (max_retries < 1) throw InputError("exceptional_rep: max_retries must be positive");

    std::mt19937_64 eng(rng.seed);
    int height = rng.height;
    int best_end = -1;
    int best_ext = -1;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        const Representation cand = random_rep(q, beta, RngSpec{eng(), height});
        const auto [end, ext] = hom_ext_dims(cand, cand);
        if (end == 1 && ext == 0) return cand;
        if (best_end < 0 || end + ext < best_end + best_ext) {
            best_end = end;
            best_ext = ext;
        }
        height *= 2;
    }
    throw SearchError(
        "exceptional_rep: no exceptional representation found after " +
        std::to_string(max_retries) + " attempts (best candidate: End dim " +
        std::to_string(best_end) + ", Ext dim " + std::to_string(best_ext) +
        "); the dimension vector is likely not a real Schur root");
}

std::pair<int, VertexRole> choose_vertex(const Quiver& q, const DimVec& delta) {
    if (classify(q) != QuiverClass::TameEuclidean)
        throw InputError("choose_vertex: quiver is not of tame Euclidean type");
    if (static_cast<int>(delta.size()) != q.vertex_count)
        throw InputError("choose_vertex: delta length does not match quiver");

    std::vector<int> indeg(q.vertex_count, 0), outdeg(q.vertex_count, 0);
    for (const Arrow& a : q.arrows) {
        ++indeg[a.head];
        ++outdeg[a.tail];
    }
    for (int v = 0; v < q.vertex_count; ++v)
        if (delta[v] == 1 && indeg[v] == 0) return {v, VertexRole::Source};
    for (int v = 0; v < q.vertex_count; ++v)
        if (delta[v] == 1 && outdeg[v] == 0) return {v, VertexRole::Sink};
    throw std::logic_error(
        "choose_vertex: no delta = 1 source or sink exists; this cannot happen on an "
        "acyclic Euclidean quiver");
}

namespace {

SubquiverWitness drop_vertex_witness(const Quiver& q, int v) {
    SubquiverWitness w;
    for (int x = 0; x < q.vertex_count; ++x)
        if (x != v) w.kept_vertices.push_back(x);
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].tail != v && q.arrows[a].head != v)
            w.kept_arrows.push_back(static_cast<int>(a));
    w.vertex_map = w.kept_vertices;
    return w;
}

DimVec restrict_vector(const SubquiverWitness& w, const DimVec& ambient) {
    DimVec out;
    out.reserve(w.kept_vertices.size());
    for (int v : w.kept_vertices) out.push_back(ambient[v]);
    return out;
}

} // namespace

ExceptionalPair build_pair(const Quiver& q, const RngSpec& rng) {
    if (classify(q) != QuiverClass::TameEuclidean)
        throw InputError("build_pair: quiver is not of tame Euclidean type");

    const DimVec delta = isotropic_root(q);
    const auto [v, role] = choose_vertex(q, delta);

    const SubquiverWitness slice = drop_vertex_witness(q, v);
    const Quiver dynkin = induced_subquiver(q, slice);
    const DimVec beta = restrict_vector(slice, sub(delta, unit_vector(q.vertex_count, v)));

    std::mt19937_64 eng(rng.seed);
    const Representation on_slice =
        exceptional_rep(dynkin, beta, RngSpec{eng(), rng.height});
    const Representation big = extend_by_zero(on_slice, slice, q);
    const Representation at_v = simple_rep(q, v);

    ExceptionalPair p;
    p.ambient = q;
    p.v = v;
    p.order_flag = role;
    if (role == VertexRole::Source) {
        p.eps1 = sub(delta, unit_vector(q.vertex_count, v));
        p.eps2 = unit_vector(q.vertex_count, v);
        p.E1 = big;
        p.E2 = at_v;
    } else {
        p.eps1 = unit_vector(q.vertex_count, v);
        p.eps2 = sub(delta, unit_vector(q.vertex_count, v));
        p.E1 = at_v;
        p.E2 = big;
    }
    p.m = static_cast<int>(-euler_form(q, p.eps2, p.eps1));

    Certificate cert = verify_pair(p);
    if (!cert.all_pass()) {
        std::string names;
        for (const auto& n : cert.failing()) names += " " + n;
        throw PairError("build_pair: pair verification failed:" + names, std::move(cert));
    }
    return p;
}

Certificate verify_pair(const ExceptionalPair& p) {
    Certificate cert;

    bool shapes_ok = true;
    try {
        validate_quiver(p.ambient);
        validate_representation(p.E1);
        validate_representation(p.E2);
        if (!(p.E1.quiver == p.ambient) || !(p.E2.quiver == p.ambient))
            shapes_ok = false;
    } catch (const std::exception&) {
        shapes_ok = false;
    }
    cert.add("reps_well_formed", shapes_ok);
    if (!shapes_ok) return cert;

    try {
        const auto [end1, ext1] = hom_ext_dims(p.E1, p.E1);
        cert.add("E1_exceptional", end1 == 1 && ext1 == 0,
                 {{"end_dim", end1}, {"ext_dim", ext1}});
        const auto [end2, ext2] = hom_ext_dims(p.E2, p.E2);
        cert.add("E2_exceptional", end2 == 1 && ext2 == 0,
                 {{"end_dim", end2}, {"ext_dim", ext2}});

        cert.add("E1_dim_is_eps1", p.E1.dim == p.eps1,
                 {{"dim", p.E1.dim}, {"eps1", p.eps1}});
        cert.add("E2_dim_is_eps2", p.E2.dim == p.eps2,
                 {{"dim", p.E2.dim}, {"eps2", p.eps2}});

        const auto [hom12, ext12] = hom_ext_dims(p.E1, p.E2);
        cert.add("hom_E1_E2_vanishes", hom12 == 0, {{"hom_dim", hom12}});
        cert.add("ext_E1_E2_vanishes", ext12 == 0, {{"ext_dim", ext12}});

        const long long value = euler_form(p.ambient, p.eps2, p.eps1);
        cert.add("euler_eps2_eps1_is_minus_m", value == -static_cast<long long>(p.m),
                 {{"euler", value}, {"m", p.m}});
        cert.add("m_is_two", p.m == 2, {{"m", p.m}});
    } catch (const std::exception& e) {
        cert.add("verification_completed", false, {{"error", e.what()}});
    }
    return cert;
}

} // namespace qforge
