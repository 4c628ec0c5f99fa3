#include "qforge/pipeline.hpp"

#include "qforge/errors.hpp"
#include "qforge/linalg.hpp"

#include <numeric>
#include <random>

namespace qforge {

OrbitStats orbit_stats(const Representation& v) {
    validate_representation(v);
    OrbitStats s;
    for (int d : v.dim) s.group_dim += static_cast<long long>(d) * d;
    for (const Arrow& a : v.quiver.arrows)
        s.ambient_dim += static_cast<long long>(v.dim[a.tail]) * v.dim[a.head];
    s.end_dim = is_zero(v.dim) ? 0 : hom_dim(v, v);
    s.orbit_dim = s.group_dim - s.end_dim;
    s.codim = s.ambient_dim - s.orbit_dim;
    return s;
}

namespace {

nlohmann::json stats_json(const OrbitStats& s) {
    return {{"group_dim", s.group_dim},
            {"end_dim", s.end_dim},
            {"orbit_dim", s.orbit_dim},
            {"ambient_dim", s.ambient_dim},
            {"codim", s.codim}};
}

// Residues of the cocycles must be independent modulo the image of the hom
// system matrix: rank [D | c_1 ... c_m] = rank D + m.
bool cocycles_independent(const CocycleBasis& basis, const Quiver& q) {
    const RatMat d = hom_system_matrix(basis.source, basis.target);
    RatMat cols(d.rows, static_cast<int>(basis.cocycles.size()));
    for (size_t k = 0; k < basis.cocycles.size(); ++k) {
        int off = 0;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            const RatMat& block = basis.cocycles[k][a];
            for (int c = 0; c < block.cols; ++c)
                for (int r = 0; r < block.rows; ++r)
                    cols.at(off + c * block.rows + r, static_cast<int>(k)) = block.at(r, c);
            off += block.rows * block.cols;
        }
    }
    return rank(hstack(d, cols)) ==
           rank(d) + static_cast<int>(basis.cocycles.size());
}

} // namespace

ForgeResult forge(const Quiver& q, const RngSpec& rng) {
    validate_quiver(q);
    if (!is_connected(q)) throw InputError("forge: input quiver must be connected");
    if (!is_acyclic(q)) throw InputError("forge: input quiver must be acyclic");
    const QuiverClass cls = classify(q);
    if (cls == QuiverClass::Finite)
        throw RefusalError(
            "forge: the input quiver has finite representation type (its underlying graph "
            "is Dynkin, by Gabriel's theorem); all orbit closures over such quivers are "
            "unibranch, so no pathological representation exists");

    Certificate cert;
    cert.add("input_connected", true, {{"vertices", q.vertex_count}});
    cert.add("input_acyclic", true, {{"arrows", q.arrows.size()}});
    cert.add("input_representation_infinite", true, {{"class", to_string(cls)}});

    const SubquiverWitness witness = cls == QuiverClass::TameEuclidean
                                         ? full_witness(q)
                                         : find_euclidean_subquiver(q);
    const Quiver sub = induced_subquiver(q, witness);
    cert.add("subquiver_euclidean", classify(sub) == QuiverClass::TameEuclidean,
             {{"kept_vertices", witness.kept_vertices}, {"kept_arrows", witness.kept_arrows}});

    const DimVec delta = isotropic_root(sub);
    const RatMat s = symmetrized_matrix(sub);
    {
        RatVec dv(delta.begin(), delta.end());
        bool in_radical = true;
        for (const Rational& e : mul(s, dv))
            if (e != 0) in_radical = false;
        cert.add("delta_in_radical", in_radical, {{"delta", delta}});
    }
    cert.add("delta_isotropic", euler_form(sub, delta, delta) == 0,
             {{"q_delta", euler_form(sub, delta, delta)}});
    {
        long long g = 0;
        bool positive = true;
        for (int e : delta) {
            g = g == 0 ? e : std::gcd(g, static_cast<long long>(e));
            if (e <= 0) positive = false;
        }
        cert.add("delta_primitive_positive", positive && g == 1, {{"gcd", g}});
    }

    std::mt19937_64 eng(rng.seed);
    const ExceptionalPair pair = build_pair(sub, RngSpec{eng(), rng.height});
    cert.append(verify_pair(pair), "pair_");
    cert.add("chosen_vertex_delta_one", delta[pair.v] == 1,
             {{"v", pair.v}, {"role", to_string(pair.order_flag)}});

    {
        // The complement of v inside the Euclidean subquiver must be Dynkin.
        SubquiverWitness slice;
        for (int x = 0; x < sub.vertex_count; ++x)
            if (x != pair.v) slice.kept_vertices.push_back(x);
        for (size_t a = 0; a < sub.arrows.size(); ++a)
            if (sub.arrows[a].tail != pair.v && sub.arrows[a].head != pair.v)
                slice.kept_arrows.push_back(static_cast<int>(a));
        slice.vertex_map = slice.kept_vertices;
        const Quiver dynkin = induced_subquiver(sub, slice);
        cert.add("dynkin_slice_finite",
                 is_connected(dynkin) && classify(dynkin) == QuiverClass::Finite,
                 {{"vertices", dynkin.vertex_count}});
    }

    const EmbedData data = make_embed_data(pair);
    cert.add("cocycle_count_is_m",
             static_cast<int>(data.basis.cocycles.size()) == pair.m,
             {{"count", data.basis.cocycles.size()}, {"m", pair.m}});
    cert.add("cocycle_residues_independent", cocycles_independent(data.basis, sub));

    for (int i = 0; i < 2; ++i) {
        const Representation fs = embed_rep(data, simple_rep(data.target_quiver, i));
        const Representation& ei = i == 0 ? pair.E1 : pair.E2;
        const bool ok = fs.dim == ei.dim && hom_dim(fs, ei) == 1 && hom_dim(ei, fs) == 1;
        cert.add("embed_simple_" + std::to_string(i + 1) + "_is_E" + std::to_string(i + 1),
                 ok, {{"dim", fs.dim}});
    }

    cert.append(check_hom_controlled(data, RngSpec{eng(), rng.height}, 20));

    const Representation v = zwara_rep();
    cert.add("kronecker_rep_dim", v.dim == DimVec{3, 3}, {{"dim", v.dim}});

    const Representation w_sub = embed_rep(data, v);
    cert.add("embedded_dim_is_3delta",
             w_sub.dim == scale(3, delta) && w_sub.dim == dim_map(pair, v.dim),
             {{"dim", w_sub.dim}, {"delta", delta}});

    const Representation w = extend_by_zero(w_sub, witness, q);
    cert.add("w_dim_is_extended_3delta",
             w.dim == extend_vector(q, witness, scale(3, delta)), {{"dim", w.dim}});

    // The subquiver reduction is itself hom-controlled: extension by zero
    // leaves Hom dimensions untouched. Sampled here because the witness may
    // drop arrows between kept vertices, in which case Ext grows and only Hom
    // is preserved.
    for (int t = 0; t < 6; ++t) {
        DimVec da(sub.vertex_count), db(sub.vertex_count);
        for (int& x : da) x = static_cast<int>(eng() % 3);
        for (int& x : db) x = static_cast<int>(eng() % 3);
        const Representation x = random_rep(sub, da, RngSpec{eng(), rng.height});
        const Representation y = random_rep(sub, db, RngSpec{eng(), rng.height});
        const int inner = hom_dim(x, y);
        const int outer = hom_dim(extend_by_zero(x, witness, q),
                                  extend_by_zero(y, witness, q));
        cert.add("extension_hom_preserved_sample_" + std::to_string(t), inner == outer,
                 {{"hom_sub", inner}, {"hom_ambient", outer}});
    }

    cert.add("orbit_stats_w", true, stats_json(orbit_stats(w)));

    return ForgeResult{q, witness, pair, data.basis, w, cert, rng.seed, rng.height};
}

namespace {

nlohmann::json first_matrix_mismatch(const Representation& a, const Representation& b) {
    if (a.dim != b.dim) return {{"field", "dim"}, {"stored", a.dim}, {"recomputed", b.dim}};
    for (size_t k = 0; k < a.maps.size() && k < b.maps.size(); ++k) {
        if (a.maps[k] == b.maps[k]) continue;
        for (int i = 0; i < a.maps[k].rows; ++i)
            for (int j = 0; j < a.maps[k].cols; ++j)
                if (a.maps[k].at(i, j) != b.maps[k].at(i, j))
                    return {{"arrow", k},
                            {"row", i},
                            {"col", j},
                            {"stored", rat_to_string(a.maps[k].at(i, j))},
                            {"recomputed", rat_to_string(b.maps[k].at(i, j))}};
        return {{"arrow", k}, {"field", "shape"}};
    }
    return nlohmann::json::object();
}

} // namespace

Certificate check_result(const ForgeResult& stored) {
    Certificate cert;

    ForgeResult fresh;
    try {
        fresh = forge(stored.input_quiver, RngSpec{stored.seed, stored.height});
    } catch (const std::exception& e) {
        cert.add("recompute_forge", false, {{"error", e.what()}});
        return cert;
    }
    cert.add("recompute_forge", true, {{"seed", stored.seed}});

    cert.add("witness_matches", stored.witness == fresh.witness);
    cert.add("pair_matches", stored.pair == fresh.pair);
    cert.add("cocycles_match", stored.basis == fresh.basis);

    const bool w_equal = stored.w == fresh.w;
    cert.add("w_matches", w_equal,
             w_equal ? nlohmann::json::object() : first_matrix_mismatch(stored.w, fresh.w));

    {
        bool same = stored.certificate.entries.size() == fresh.certificate.entries.size();
        nlohmann::json detail = nlohmann::json::object();
        if (same) {
            for (size_t i = 0; i < fresh.certificate.entries.size(); ++i) {
                const auto& se = stored.certificate.entries[i];
                const auto& fe = fresh.certificate.entries[i];
                if (se.check != fe.check || se.pass != fe.pass) {
                    same = false;
                    detail = {{"entry", se.check}, {"stored_pass", se.pass},
                              {"recomputed", fe.check}, {"recomputed_pass", fe.pass}};
                    break;
                }
            }
        } else {
            detail = {{"stored_entries", stored.certificate.entries.size()},
                      {"recomputed_entries", fresh.certificate.entries.size()}};
        }
        cert.add("certificate_matches", same, detail);
    }
    cert.add("stored_certificate_all_pass", stored.certificate.all_pass(),
             {{"failing", stored.certificate.failing()}});

    // Semantic re-checks on the stored data itself, independent of the
    // recomputation above.
    cert.append(verify_pair(stored.pair), "stored_");
    try {
        const Quiver sub = induced_subquiver(stored.input_quiver, stored.witness);
        const DimVec delta = isotropic_root(sub);
        cert.add("stored_w_dim_is_extended_3delta",
                 stored.w.dim == extend_vector(stored.input_quiver, stored.witness,
                                               scale(3, delta)),
                 {{"dim", stored.w.dim}});
        validate_representation(stored.w);
        cert.add("stored_w_well_formed", true);
    } catch (const std::exception& e) {
        cert.add("stored_w_well_formed", false, {{"error", e.what()}});
    }
    return cert;
}

namespace {

Quiver random_acyclic_quiver(std::mt19937_64& eng, int max_vertices, int max_extra_arrows) {
    Quiver q;
    q.vertex_count = 1 + static_cast<int>(eng() % max_vertices);
    if (q.vertex_count == 1) return q;
    const int arrows = static_cast<int>(eng() % (max_extra_arrows + 1));
    for (int i = 0; i < arrows; ++i) {
        int a = static_cast<int>(eng() % q.vertex_count);
        int b = static_cast<int>(eng() % q.vertex_count);
        if (a == b) continue;
        // Orient low -> high so no oriented cycle can appear.
        q.arrows.push_back({std::min(a, b), std::max(a, b)});
    }
    return q;
}

} // namespace

Certificate selftest(const RngSpec& rng) {
    Certificate cert;
    std::mt19937_64 eng(rng.seed);

    {
        const int total = 1000;
        int passed = 0;
        for (int i = 0; i < total; ++i) {
            const Quiver q = random_acyclic_quiver(eng, 6, 12);
            DimVec a(q.vertex_count), b(q.vertex_count);
            for (int& x : a) x = static_cast<int>(eng() % 5);
            for (int& x : b) x = static_cast<int>(eng() % 5);
            const Representation v = random_rep(q, a, RngSpec{eng(), 3});
            const Representation w = random_rep(q, b, RngSpec{eng(), 3});
            const auto [hom, ext] = hom_ext_dims(v, w);
            if (hom - ext == euler_form(q, a, b)) ++passed;
        }
        cert.add("euler_identity_fuzz", passed == total,
                 {{"passed", passed}, {"total", total}});
    }

    {
        int built = 0;
        int all_pass = 0;
        nlohmann::json failures = nlohmann::json::array();
        for (const NamedQuiver& nq : euclidean_family()) {
            ++built;
            try {
                const ExceptionalPair p = build_pair(nq.quiver, RngSpec{eng(), rng.height});
                if (verify_pair(p).all_pass() && p.m == 2) ++all_pass;
                else failures.push_back(nq.name);
            } catch (const std::exception& e) {
                failures.push_back(nq.name + std::string(": ") + e.what());
            }
        }
        cert.add("exceptional_pair_family", built == all_pass,
                 {{"quivers", built}, {"passed", all_pass}, {"failures", failures}});
    }

    {
        const ExceptionalPair p = build_pair(theta(2), RngSpec{eng(), rng.height});
        const Certificate hc =
            check_hom_controlled(make_embed_data(p), RngSpec{eng(), rng.height}, 100);
        cert.add("hom_controlled_kronecker", hc.all_pass(),
                 {{"samples", hc.entries.size()}, {"failing", hc.failing()}});
    }

    return cert;
}

} // namespace qforge
