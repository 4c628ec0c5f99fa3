#include "qforge/quiver.hpp"

#include "qforge/errors.hpp"
#include "qforge/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace qforge {

bool operator==(const Arrow& a, const Arrow& b) {
    return a.tail == b.tail && a.head == b.head;
}

bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertex_count == b.vertex_count && a.arrows == b.arrows;
}

void validate_quiver(const Quiver& q) {
    if (q.vertex_count <= 0) throw InputError("quiver must have at least one vertex");
    for (const Arrow& a : q.arrows) {
        if (a.tail < 0 || a.tail >= q.vertex_count || a.head < 0 || a.head >= q.vertex_count)
            throw InputError("arrow endpoint out of range");
    }
}

DimVec unit_vector(int n, int v) {
    DimVec e(n, 0);
    e.at(v) = 1;
    return e;
}

DimVec add(const DimVec& a, const DimVec& b) {
    if (a.size() != b.size()) throw InputError("dimension vectors have different lengths");
    DimVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

DimVec sub(const DimVec& a, const DimVec& b) {
    if (a.size() != b.size()) throw InputError("dimension vectors have different lengths");
    DimVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

DimVec scale(int k, const DimVec& a) {
    DimVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
    return out;
}

bool is_nonnegative(const DimVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

bool is_zero(const DimVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

bool is_acyclic(const Quiver& q) {
    validate_quiver(q);
    // Kahn's algorithm; a loop keeps its vertex at in-degree >= 1 forever.
    std::vector<int> indeg(q.vertex_count, 0);
    for (const Arrow& a : q.arrows) ++indeg[a.head];
    std::queue<int> ready;
    for (int v = 0; v < q.vertex_count; ++v)
        if (indeg[v] == 0) ready.push(v);
    int seen = 0;
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop();
        ++seen;
        for (const Arrow& a : q.arrows) {
            if (a.tail != v) continue;
            if (--indeg[a.head] == 0) ready.push(a.head);
        }
    }
    return seen == q.vertex_count;
}

bool is_connected(const Quiver& q) {
    validate_quiver(q);
    std::vector<std::vector<int>> adj(q.vertex_count);
    for (const Arrow& a : q.arrows) {
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }
    std::vector<char> seen(q.vertex_count, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int count = 1;
    while (!bfs.empty()) {
        const int v = bfs.front();
        bfs.pop();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                bfs.push(u);
            }
        }
    }
    return count == q.vertex_count;
}

long long euler_form(const Quiver& q, const DimVec& alpha, const DimVec& beta) {
    validate_quiver(q);
    if (static_cast<int>(alpha.size()) != q.vertex_count ||
        static_cast<int>(beta.size()) != q.vertex_count)
        throw InputError("euler_form: vector length does not match vertex count");
    long long s = 0;
    for (int x = 0; x < q.vertex_count; ++x)
        s += static_cast<long long>(alpha[x]) * beta[x];
    for (const Arrow& a : q.arrows)
        s -= static_cast<long long>(alpha[a.tail]) * beta[a.head];
    return s;
}

RatMat symmetrized_matrix(const Quiver& q) {
    validate_quiver(q);
    RatMat s(q.vertex_count, q.vertex_count);
    for (int x = 0; x < q.vertex_count; ++x) s.at(x, x) = 2;
    for (const Arrow& a : q.arrows) {
        s.at(a.tail, a.head) -= 1;
        s.at(a.head, a.tail) -= 1;
    }
    return s;
}

std::string to_string(QuiverClass c) {
    switch (c) {
        case QuiverClass::Finite: return "Finite";
        case QuiverClass::TameEuclidean: return "TameEuclidean";
        case QuiverClass::InfiniteNonEuclidean: return "InfiniteNonEuclidean";
    }
    throw std::logic_error("unreachable");
}

QuiverClass classify(const Quiver& q) {
    if (!is_connected(q)) throw InputError("classify: quiver must be connected");
    if (!is_acyclic(q)) throw InputError("classify: quiver must be acyclic");

    RatMat s = symmetrized_matrix(q);
    const int n = q.vertex_count;

    // Symmetric elimination without row exchanges. The trailing block stays
    // symmetric, so a zero pivot whose column below is zero has a zero row
    // and can be skipped; any other zero or negative pivot rules out positive
    // semidefiniteness.
    int positive_pivots = 0;
    for (int i = 0; i < n; ++i) {
        const Rational pivot = s.at(i, i);
        if (pivot > 0) {
            ++positive_pivots;
            for (int j = i + 1; j < n; ++j) {
                if (s.at(j, i) == 0) continue;
                const Rational f = s.at(j, i) / pivot;
                for (int k = i; k < n; ++k) s.at(j, k) -= f * s.at(i, k);
            }
        } else if (pivot == 0) {
            for (int j = i + 1; j < n; ++j)
                if (s.at(j, i) != 0) return QuiverClass::InfiniteNonEuclidean;
        } else {
            return QuiverClass::InfiniteNonEuclidean;
        }
    }

    const int radical_dim = n - positive_pivots;
    if (radical_dim == 0) return QuiverClass::Finite;
    if (radical_dim == 1) return QuiverClass::TameEuclidean;
    return QuiverClass::InfiniteNonEuclidean;
}

DimVec isotropic_root(const Quiver& q) {
    if (classify(q) != QuiverClass::TameEuclidean)
        throw InputError("isotropic_root: quiver is not of tame Euclidean type");

    const auto ker = kernel_basis(symmetrized_matrix(q));
    if (ker.size() != 1)
        throw std::logic_error("isotropic_root: radical dimension is not 1");

    // Clear denominators, divide by the gcd, fix the sign.
    mpz_class lcm_den = 1;
    for (const Rational& e : ker[0]) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), e.get_den().get_mpz_t());
        lcm_den = l;
    }
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const Rational& e : ker[0]) {
        mpz_class v = e.get_num() * (lcm_den / e.get_den());
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        g = gg;
        ints.push_back(v);
    }
    if (g == 0) throw std::logic_error("isotropic_root: zero radical vector");
    for (auto& v : ints) v /= g;
    int negatives = 0;
    for (const auto& v : ints)
        if (v < 0) ++negatives;
    if (negatives == static_cast<int>(ints.size()))
        for (auto& v : ints) v = -v;

    DimVec delta;
    for (const auto& v : ints) {
        if (v <= 0 || !v.fits_sint_p())
            throw std::logic_error("isotropic_root: radical generator is not strictly positive");
        delta.push_back(static_cast<int>(v.get_si()));
    }
    return delta;
}

bool operator==(const SubquiverWitness& a, const SubquiverWitness& b) {
    return a.kept_vertices == b.kept_vertices && a.kept_arrows == b.kept_arrows &&
           a.vertex_map == b.vertex_map;
}

SubquiverWitness full_witness(const Quiver& q) {
    validate_quiver(q);
    SubquiverWitness w;
    w.kept_vertices.resize(q.vertex_count);
    std::iota(w.kept_vertices.begin(), w.kept_vertices.end(), 0);
    w.kept_arrows.resize(q.arrows.size());
    std::iota(w.kept_arrows.begin(), w.kept_arrows.end(), 0);
    w.vertex_map = w.kept_vertices;
    return w;
}

void validate_witness(const Quiver& q, const SubquiverWitness& w) {
    validate_quiver(q);
    if (w.kept_vertices.empty()) throw InputError("witness keeps no vertex");
    if (!std::is_sorted(w.kept_vertices.begin(), w.kept_vertices.end()) ||
        std::adjacent_find(w.kept_vertices.begin(), w.kept_vertices.end()) !=
            w.kept_vertices.end())
        throw InputError("witness kept_vertices must be strictly ascending");
    if (!std::is_sorted(w.kept_arrows.begin(), w.kept_arrows.end()) ||
        std::adjacent_find(w.kept_arrows.begin(), w.kept_arrows.end()) != w.kept_arrows.end())
        throw InputError("witness kept_arrows must be strictly ascending");
    if (w.vertex_map != w.kept_vertices)
        throw InputError("witness vertex_map must list the kept vertices in order");

    std::vector<char> kept(q.vertex_count, 0);
    for (int v : w.kept_vertices) {
        if (v < 0 || v >= q.vertex_count) throw InputError("witness vertex out of range");
        kept[v] = 1;
    }
    for (int a : w.kept_arrows) {
        if (a < 0 || a >= static_cast<int>(q.arrows.size()))
            throw InputError("witness arrow index out of range");
        if (!kept[q.arrows[a].tail] || !kept[q.arrows[a].head])
            throw InputError("witness keeps an arrow with a deleted endpoint");
    }
}

bool is_vertex_induced(const Quiver& q, const SubquiverWitness& w) {
    validate_witness(q, w);
    std::vector<char> kept_v(q.vertex_count, 0);
    for (int v : w.kept_vertices) kept_v[v] = 1;
    std::vector<char> kept_a(q.arrows.size(), 0);
    for (int a : w.kept_arrows) kept_a[a] = 1;
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (!kept_a[a] && kept_v[q.arrows[a].tail] && kept_v[q.arrows[a].head]) return false;
    return true;
}

namespace {

SubquiverWitness witness_from_masks(const std::vector<char>& vkeep,
                                    const std::vector<char>& akeep) {
    SubquiverWitness w;
    for (size_t v = 0; v < vkeep.size(); ++v)
        if (vkeep[v]) w.kept_vertices.push_back(static_cast<int>(v));
    for (size_t a = 0; a < akeep.size(); ++a)
        if (akeep[a]) w.kept_arrows.push_back(static_cast<int>(a));
    w.vertex_map = w.kept_vertices;
    return w;
}

Quiver build_induced(const Quiver& q, const std::vector<char>& vkeep,
                     const std::vector<char>& akeep) {
    std::vector<int> relabel(q.vertex_count, -1);
    int next = 0;
    for (int v = 0; v < q.vertex_count; ++v)
        if (vkeep[v]) relabel[v] = next++;
    Quiver sub;
    sub.vertex_count = next;
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (akeep[a])
            sub.arrows.push_back({relabel[q.arrows[a].tail], relabel[q.arrows[a].head]});
    return sub;
}

bool still_infinite(const Quiver& q, const std::vector<char>& vkeep,
                    const std::vector<char>& akeep) {
    int nv = 0;
    for (char k : vkeep) nv += k;
    if (nv == 0) return false;
    const Quiver sub = build_induced(q, vkeep, akeep);
    if (!is_connected(sub)) return false;
    return classify(sub) != QuiverClass::Finite;
}

} // namespace

SubquiverWitness find_euclidean_subquiver(const Quiver& q) {
    if (!is_connected(q)) throw InputError("find_euclidean_subquiver: quiver must be connected");
    if (!is_acyclic(q)) throw InputError("find_euclidean_subquiver: quiver must be acyclic");
    if (classify(q) == QuiverClass::Finite)
        throw InputError("find_euclidean_subquiver: quiver has finite representation type");

    std::vector<char> vkeep(q.vertex_count, 1);
    std::vector<char> akeep(q.arrows.size(), 1);

    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t a = 0; a < q.arrows.size() && !progress; ++a) {
            if (!akeep[a]) continue;
            akeep[a] = 0;
            if (still_infinite(q, vkeep, akeep))
                progress = true;
            else
                akeep[a] = 1;
        }
        for (int v = 0; v < q.vertex_count && !progress; ++v) {
            if (!vkeep[v]) continue;
            std::vector<char> va = vkeep, aa = akeep;
            va[v] = 0;
            for (size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].tail == v || q.arrows[a].head == v) aa[a] = 0;
            if (still_infinite(q, va, aa)) {
                vkeep = std::move(va);
                akeep = std::move(aa);
                progress = true;
            }
        }
    }

    SubquiverWitness w = witness_from_masks(vkeep, akeep);
    if (classify(induced_subquiver(q, w)) != QuiverClass::TameEuclidean)
        throw std::logic_error(
            "find_euclidean_subquiver: greedy fixpoint is not Euclidean");
    return w;
}

Quiver induced_subquiver(const Quiver& q, const SubquiverWitness& w) {
    validate_witness(q, w);
    std::vector<char> vkeep(q.vertex_count, 0), akeep(q.arrows.size(), 0);
    for (int v : w.kept_vertices) vkeep[v] = 1;
    for (int a : w.kept_arrows) akeep[a] = 1;
    return build_induced(q, vkeep, akeep);
}

DimVec extend_vector(const Quiver& ambient, const SubquiverWitness& w, const DimVec& sub) {
    validate_witness(ambient, w);
    if (sub.size() != w.kept_vertices.size())
        throw InputError("extend_vector: vector length does not match witness");
    DimVec out(ambient.vertex_count, 0);
    for (size_t i = 0; i < w.vertex_map.size(); ++i) out[w.vertex_map[i]] = sub[i];
    return out;
}

} // namespace qforge
