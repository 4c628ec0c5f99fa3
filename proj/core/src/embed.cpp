#include "qforge/embed.hpp"

#include "qforge/errors.hpp"
#include "qforge/linalg.hpp"

#include <random>

namespace qforge {

bool operator==(const CocycleBasis& a, const CocycleBasis& b) {
    return a.source == b.source && a.target == b.target && a.cocycles == b.cocycles;
}

Quiver kronecker_type(int m) {
    if (m < 0) throw InputError("kronecker_type: arrow count must be nonnegative");
    Quiver q;
    q.vertex_count = 2;
    for (int k = 0; k < m; ++k) q.arrows.push_back({1, 0});
    return q;
}

CocycleBasis cocycle_basis(const Representation& e2, const Representation& e1) {
    if (!(e2.quiver == e1.quiver))
        throw InputError("cocycle_basis: representations live on different quivers");
    const Quiver& q = e2.quiver;

    const RatMat d = hom_system_matrix(e2, e1);
    const auto reps = cokernel_reps(d);

    CocycleBasis basis{e2, e1, {}};
    for (const RatVec& vec : reps) {
        std::vector<RatMat> blocks;
        blocks.reserve(q.arrows.size());
        int off = 0;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            const int rows = e1.dim[q.arrows[a].head];
            const int cols = e2.dim[q.arrows[a].tail];
            RatMat block(rows, cols);
            for (int c = 0; c < cols; ++c)
                for (int r = 0; r < rows; ++r)
                    block.at(r, c) = vec[off + c * rows + r];
            off += rows * cols;
            blocks.push_back(std::move(block));
        }
        basis.cocycles.push_back(std::move(blocks));
    }
    return basis;
}

EmbedData make_embed_data(const ExceptionalPair& p) {
    EmbedData data{p, cocycle_basis(p.E2, p.E1), kronecker_type(p.m)};
    if (static_cast<int>(data.basis.cocycles.size()) != p.m)
        throw InputError("make_embed_data: Ext^1(E2, E1) dimension does not equal m");
    return data;
}

DimVec dim_map(const ExceptionalPair& p, const DimVec& alpha) {
    if (alpha.size() != 2) throw InputError("dim_map: expected a length-2 vector");
    return add(scale(alpha[0], p.eps1), scale(alpha[1], p.eps2));
}

Representation embed_rep(const EmbedData& data, const Representation& v) {
    validate_representation(v);
    if (!(v.quiver == data.target_quiver))
        throw InputError("embed_rep: representation does not live on the target quiver");
    const ExceptionalPair& p = data.pair;
    const Quiver& q = p.ambient;
    const int a1 = v.dim[0];
    const int a2 = v.dim[1];

    Representation w{q, dim_map(p, v.dim), {}};
    const RatMat id1 = RatMat::identity(a1);
    const RatMat id2 = RatMat::identity(a2);

    w.maps.reserve(q.arrows.size());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const int t = q.arrows[a].tail;
        const int h = q.arrows[a].head;
        const RatMat top_left = kron(p.E1.maps[a], id1);
        const RatMat bottom_right = kron(p.E2.maps[a], id2);
        RatMat top_right(p.E1.dim[h] * a1, p.E2.dim[t] * a2);
        for (size_t k = 0; k < data.basis.cocycles.size(); ++k) {
            const RatMat term = kron(data.basis.cocycles[k][a], v.maps[k]);
            for (size_t i = 0; i < term.entries.size(); ++i)
                top_right.entries[i] += term.entries[i];
        }

        RatMat block(w.dim[h], w.dim[t]);
        const int row_split = p.E1.dim[h] * a1;
        const int col_split = p.E1.dim[t] * a1;
        for (int i = 0; i < top_left.rows; ++i)
            for (int j = 0; j < top_left.cols; ++j)
                block.at(i, j) = top_left.at(i, j);
        for (int i = 0; i < top_right.rows; ++i)
            for (int j = 0; j < top_right.cols; ++j)
                block.at(i, col_split + j) = top_right.at(i, j);
        for (int i = 0; i < bottom_right.rows; ++i)
            for (int j = 0; j < bottom_right.cols; ++j)
                block.at(row_split + i, col_split + j) = bottom_right.at(i, j);
        w.maps.push_back(std::move(block));
    }
    return w;
}

Representation zwara_rep() {
    Representation v{kronecker_type(2), {3, 3}, {RatMat(3, 3), RatMat(3, 3)}};
    v.maps[0].at(1, 0) = 1;
    v.maps[0].at(2, 1) = 1;
    v.maps[1].at(0, 0) = 1;
    v.maps[1].at(2, 2) = 1;
    return v;
}

Certificate check_hom_controlled(const EmbedData& data, const RngSpec& rng, int samples) {
    if (samples < 1) throw InputError("check_hom_controlled: samples must be positive");
    Certificate cert;
    std::mt19937_64 eng(rng.seed);
    for (int s = 0; s < samples; ++s) {
        const DimVec da{static_cast<int>(eng() % 4), static_cast<int>(eng() % 4)};
        const DimVec db{static_cast<int>(eng() % 4), static_cast<int>(eng() % 4)};
        const Representation v = random_rep(data.target_quiver, da, RngSpec{eng(), rng.height});
        const Representation v2 = random_rep(data.target_quiver, db, RngSpec{eng(), rng.height});
        const Representation fv = embed_rep(data, v);
        const Representation fv2 = embed_rep(data, v2);
        const auto [hom, ext] = hom_ext_dims(v, v2);
        const auto [fhom, fext] = hom_ext_dims(fv, fv2);
        cert.add("hom_controlled_sample_" + std::to_string(s),
                 hom == fhom && ext == fext,
                 {{"dim_v", da},
                  {"dim_v2", db},
                  {"hom_source", hom},
                  {"hom_image", fhom},
                  {"ext_source", ext},
                  {"ext_image", fext}});
    }
    return cert;
}

} // namespace qforge
