#include "qforge/rep.hpp"

#include "qforge/errors.hpp"
#include "qforge/linalg.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace qforge {

bool operator==(const Representation& a, const Representation& b) {
    return a.quiver == b.quiver && a.dim == b.dim && a.maps == b.maps;
}

void validate_representation(const Representation& v) {
    validate_quiver(v.quiver);
    if (static_cast<int>(v.dim.size()) != v.quiver.vertex_count)
        throw InputError("representation: dimension vector length does not match quiver");
    if (!is_nonnegative(v.dim))
        throw InputError("representation: negative dimension");
    if (v.maps.size() != v.quiver.arrows.size())
        throw InputError("representation: one matrix per arrow required");
    for (size_t a = 0; a < v.maps.size(); ++a) {
        const Arrow& ar = v.quiver.arrows[a];
        if (v.maps[a].rows != v.dim[ar.head] || v.maps[a].cols != v.dim[ar.tail])
            throw InputError("representation: matrix shape must be dim(head) x dim(tail)");
    }
}

bool is_morphism(const Morphism& f) {
    validate_representation(f.source);
    validate_representation(f.target);
    if (!(f.source.quiver == f.target.quiver)) return false;
    if (static_cast<int>(f.blocks.size()) != f.source.quiver.vertex_count) return false;
    for (int x = 0; x < f.source.quiver.vertex_count; ++x)
        if (f.blocks[x].rows != f.target.dim[x] || f.blocks[x].cols != f.source.dim[x])
            return false;
    for (size_t a = 0; a < f.source.quiver.arrows.size(); ++a) {
        const Arrow& ar = f.source.quiver.arrows[a];
        if (!(mul(f.blocks[ar.head], f.source.maps[a]) ==
              mul(f.target.maps[a], f.blocks[ar.tail])))
            return false;
    }
    return true;
}

namespace {

// Block offsets of the hom system's domain (per vertex) and codomain (per
// arrow), in the fixed ordering.
struct HomLayout {
    std::vector<int> vertex_off;
    std::vector<int> arrow_off;
    int domain = 0;
    int codomain = 0;
};

HomLayout hom_layout(const Representation& v, const Representation& w) {
    HomLayout l;
    const Quiver& q = v.quiver;
    l.vertex_off.resize(q.vertex_count);
    for (int x = 0; x < q.vertex_count; ++x) {
        l.vertex_off[x] = l.domain;
        l.domain += v.dim[x] * w.dim[x];
    }
    l.arrow_off.resize(q.arrows.size());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        l.arrow_off[a] = l.codomain;
        l.codomain += v.dim[q.arrows[a].tail] * w.dim[q.arrows[a].head];
    }
    return l;
}

void check_same_quiver(const Representation& v, const Representation& w) {
    validate_representation(v);
    validate_representation(w);
    if (!(v.quiver == w.quiver))
        throw InputError("representations live on different quivers");
}

} // namespace

RatMat hom_system_matrix(const Representation& v, const Representation& w) {
    check_same_quiver(v, w);
    const Quiver& q = v.quiver;
    const HomLayout l = hom_layout(v, w);
    RatMat d(l.codomain, l.domain);

    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const int t = q.arrows[a].tail;
        const int h = q.arrows[a].head;
        // defect(a)[r][c] = sum_k phi(h)[r][k] V(a)[k][c] - sum_k W(a)[r][k] phi(t)[k][c]
        for (int c = 0; c < v.dim[t]; ++c) {
            for (int r = 0; r < w.dim[h]; ++r) {
                const int row = l.arrow_off[a] + c * w.dim[h] + r;
                for (int k = 0; k < v.dim[h]; ++k)
                    d.at(row, l.vertex_off[h] + k * w.dim[h] + r) += v.maps[a].at(k, c);
                for (int k = 0; k < w.dim[t]; ++k)
                    d.at(row, l.vertex_off[t] + c * w.dim[t] + k) -= w.maps[a].at(r, k);
            }
        }
    }
    return d;
}

std::vector<Morphism> hom_basis(const Representation& v, const Representation& w) {
    check_same_quiver(v, w);
    const Quiver& q = v.quiver;
    const HomLayout l = hom_layout(v, w);
    const auto kernel = kernel_basis(hom_system_matrix(v, w));

    std::vector<Morphism> basis;
    basis.reserve(kernel.size());
    for (const RatVec& vec : kernel) {
        Morphism f{v, w, {}};
        f.blocks.reserve(q.vertex_count);
        for (int x = 0; x < q.vertex_count; ++x) {
            RatMat block(w.dim[x], v.dim[x]);
            for (int j = 0; j < v.dim[x]; ++j)
                for (int i = 0; i < w.dim[x]; ++i)
                    block.at(i, j) = vec[l.vertex_off[x] + j * w.dim[x] + i];
            f.blocks.push_back(std::move(block));
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

std::pair<int, int> hom_ext_dims(const Representation& v, const Representation& w) {
    const RatMat d = hom_system_matrix(v, w);
    const int r = rank(d);
    const int hom = d.cols - r;
    const int ext = d.rows - r;
    if (hom - ext != euler_form(v.quiver, v.dim, w.dim))
        throw std::logic_error("hom/ext dimensions violate the Euler form identity");
    return {hom, ext};
}

int hom_dim(const Representation& v, const Representation& w) {
    return hom_ext_dims(v, w).first;
}

int ext_dim(const Representation& v, const Representation& w) {
    return hom_ext_dims(v, w).second;
}

bool is_schur(const Representation& v) {
    validate_representation(v);
    if (is_zero(v.dim)) throw InputError("is_schur: zero representation");
    return hom_dim(v, v) == 1;
}

bool is_exceptional(const Representation& v) {
    validate_representation(v);
    if (is_zero(v.dim)) throw InputError("is_exceptional: zero representation");
    const auto [end, ext] = hom_ext_dims(v, v);
    return end == 1 && ext == 0;
}

namespace {

int draw_entry(std::mt19937_64& eng, int height) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(height) + 1;
    return static_cast<int>(static_cast<long long>(eng() % span) - height);
}

} // namespace

Representation random_rep(const Quiver& q, const DimVec& alpha, const RngSpec& rng) {
    validate_quiver(q);
    if (static_cast<int>(alpha.size()) != q.vertex_count)
        throw InputError("random_rep: vector length does not match quiver");
    if (!is_nonnegative(alpha)) throw InputError("random_rep: negative dimension");
    if (rng.height < 1) throw InputError("random_rep: height must be positive");

    std::mt19937_64 eng(rng.seed);
    Representation v{q, alpha, {}};
    v.maps.reserve(q.arrows.size());
    for (const Arrow& a : q.arrows) {
        RatMat m(alpha[a.head], alpha[a.tail]);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = draw_entry(eng, rng.height);
        v.maps.push_back(std::move(m));
    }
    return v;
}

namespace {

int generic_min(const Quiver& q, const DimVec& alpha, const DimVec& beta,
                const RngSpec& rng, int trials, bool want_ext) {
    if (trials < 1) throw InputError("generic sampling needs at least one trial");
    std::mt19937_64 eng(rng.seed);
    int best = std::numeric_limits<int>::max();
    for (int t = 0; t < trials; ++t) {
        const RngSpec sa{eng(), rng.height};
        const RngSpec sb{eng(), rng.height};
        const Representation v = random_rep(q, alpha, sa);
        const Representation w = random_rep(q, beta, sb);
        const auto [hom, ext] = hom_ext_dims(v, w);
        best = std::min(best, want_ext ? ext : hom);
    }
    return best;
}

} // namespace

int generic_hom(const Quiver& q, const DimVec& alpha, const DimVec& beta,
                const RngSpec& rng, int trials) {
    return generic_min(q, alpha, beta, rng, trials, false);
}

int generic_ext(const Quiver& q, const DimVec& alpha, const DimVec& beta,
                const RngSpec& rng, int trials) {
    return generic_min(q, alpha, beta, rng, trials, true);
}

bool orth(const Quiver& q, const DimVec& alpha, const DimVec& beta,
          const RngSpec& rng, int trials) {
    return generic_hom(q, alpha, beta, rng, trials) == 0 &&
           generic_ext(q, alpha, beta, rng, trials) == 0;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    check_same_quiver(a, b);
    const Quiver& q = a.quiver;
    Representation s{q, add(a.dim, b.dim), {}};
    s.maps.reserve(q.arrows.size());
    for (size_t i = 0; i < q.arrows.size(); ++i) {
        const Arrow& ar = q.arrows[i];
        RatMat m(s.dim[ar.head], s.dim[ar.tail]);
        for (int r = 0; r < a.maps[i].rows; ++r)
            for (int c = 0; c < a.maps[i].cols; ++c)
                m.at(r, c) = a.maps[i].at(r, c);
        for (int r = 0; r < b.maps[i].rows; ++r)
            for (int c = 0; c < b.maps[i].cols; ++c)
                m.at(a.dim[ar.head] + r, a.dim[ar.tail] + c) = b.maps[i].at(r, c);
        s.maps.push_back(std::move(m));
    }
    return s;
}

Representation simple_rep(const Quiver& q, int vertex) {
    validate_quiver(q);
    if (vertex < 0 || vertex >= q.vertex_count)
        throw InputError("simple_rep: vertex out of range");
    Representation v{q, unit_vector(q.vertex_count, vertex), {}};
    for (const Arrow& a : q.arrows)
        v.maps.emplace_back(v.dim[a.head], v.dim[a.tail]);
    return v;
}

Representation extend_by_zero(const Representation& sub, const SubquiverWitness& w,
                              const Quiver& ambient) {
    validate_representation(sub);
    validate_witness(ambient, w);
    if (!(sub.quiver == induced_subquiver(ambient, w)))
        throw InputError("extend_by_zero: representation does not live on the witnessed subquiver");

    Representation out{ambient, extend_vector(ambient, w, sub.dim), {}};
    std::vector<int> kept_pos(ambient.arrows.size(), -1);
    for (size_t i = 0; i < w.kept_arrows.size(); ++i) kept_pos[w.kept_arrows[i]] = static_cast<int>(i);

    for (size_t a = 0; a < ambient.arrows.size(); ++a) {
        if (kept_pos[a] >= 0) {
            out.maps.push_back(sub.maps[kept_pos[a]]);
        } else {
            const Arrow& ar = ambient.arrows[a];
            out.maps.emplace_back(out.dim[ar.head], out.dim[ar.tail]);
        }
    }
    return out;
}

} // namespace qforge
