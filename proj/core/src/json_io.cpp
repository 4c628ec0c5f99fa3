#include "qforge/json_io.hpp"

#include "qforge/errors.hpp"

#include <fstream>
#include <sstream>

namespace qforge {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string(what) + ": missing field \"" + key + "\"");
    return j.at(key);
}

int need_int(const json& j, const char* key, const char* what) {
    const json& v = need(j, key, what);
    if (!v.is_number_integer())
        throw InputError(std::string(what) + ": field \"" + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const json& e : j) {
        if (!e.is_number_integer())
            throw InputError(std::string(what) + ": expected integers");
        out.push_back(e.get<int>());
    }
    return out;
}

json matrix_rows(const RatMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMat matrix_from_rows(const json& j, int rows, int cols, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw InputError(std::string(what) + ": expected " + std::to_string(rows) + " rows");
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw InputError(std::string(what) + ": expected " + std::to_string(cols) +
                             " columns per row");
        for (int c = 0; c < cols; ++c) {
            if (!row.at(c).is_string())
                throw InputError(std::string(what) + ": matrix entries must be strings");
            m.at(i, c) = rat_from_string(row.at(c).get<std::string>());
        }
    }
    return m;
}

} // namespace

json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (const Arrow& a : q.arrows) arrows.push_back({{"tail", a.tail}, {"head", a.head}});
    return {{"vertices", q.vertex_count}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from_json(const json& j) {
    Quiver q;
    q.vertex_count = need_int(j, "vertices", "quiver");
    const json& arrows = need(j, "arrows", "quiver");
    if (!arrows.is_array()) throw InputError("quiver: \"arrows\" must be an array");
    for (const json& a : arrows)
        q.arrows.push_back({need_int(a, "tail", "arrow"), need_int(a, "head", "arrow")});
    validate_quiver(q);
    return q;
}

json representation_to_json(const Representation& v) {
    json maps = json::array();
    for (const RatMat& m : v.maps) maps.push_back(matrix_rows(m));
    return {{"quiver", quiver_to_json(v.quiver)}, {"dim", v.dim}, {"maps", std::move(maps)}};
}

Representation representation_from_json(const json& j) {
    Representation v;
    v.quiver = quiver_from_json(need(j, "quiver", "representation"));
    v.dim = int_list(need(j, "dim", "representation"), "representation dim");
    const json& maps = need(j, "maps", "representation");
    if (!maps.is_array() || maps.size() != v.quiver.arrows.size())
        throw InputError("representation: need one matrix per arrow");
    if (static_cast<int>(v.dim.size()) != v.quiver.vertex_count)
        throw InputError("representation: dim length does not match quiver");
    for (size_t a = 0; a < maps.size(); ++a) {
        const Arrow& ar = v.quiver.arrows[a];
        v.maps.push_back(
            matrix_from_rows(maps.at(a), v.dim.at(ar.head), v.dim.at(ar.tail), "representation map"));
    }
    validate_representation(v);
    return v;
}

json witness_to_json(const SubquiverWitness& w) {
    return {{"kept_vertices", w.kept_vertices},
            {"kept_arrows", w.kept_arrows},
            {"vertex_map", w.vertex_map}};
}

SubquiverWitness witness_from_json(const json& j) {
    SubquiverWitness w;
    w.kept_vertices = int_list(need(j, "kept_vertices", "witness"), "witness");
    w.kept_arrows = int_list(need(j, "kept_arrows", "witness"), "witness");
    w.vertex_map = int_list(need(j, "vertex_map", "witness"), "witness");
    return w;
}

json pair_to_json(const ExceptionalPair& p) {
    return {{"ambient", quiver_to_json(p.ambient)},
            {"v", p.v},
            {"order_flag", to_string(p.order_flag)},
            {"eps1", p.eps1},
            {"eps2", p.eps2},
            {"E1", representation_to_json(p.E1)},
            {"E2", representation_to_json(p.E2)},
            {"m", p.m}};
}

ExceptionalPair pair_from_json(const json& j) {
    ExceptionalPair p;
    p.ambient = quiver_from_json(need(j, "ambient", "pair"));
    p.v = need_int(j, "v", "pair");
    const std::string flag = need(j, "order_flag", "pair").get<std::string>();
    if (flag == "source")
        p.order_flag = VertexRole::Source;
    else if (flag == "sink")
        p.order_flag = VertexRole::Sink;
    else
        throw InputError("pair: order_flag must be \"source\" or \"sink\"");
    p.eps1 = int_list(need(j, "eps1", "pair"), "pair eps1");
    p.eps2 = int_list(need(j, "eps2", "pair"), "pair eps2");
    p.E1 = representation_from_json(need(j, "E1", "pair"));
    p.E2 = representation_from_json(need(j, "E2", "pair"));
    p.m = need_int(j, "m", "pair");
    return p;
}

json cocycles_to_json(const CocycleBasis& b) {
    json cocycles = json::array();
    for (const auto& cocycle : b.cocycles) {
        json blocks = json::array();
        for (const RatMat& m : cocycle) blocks.push_back(matrix_rows(m));
        cocycles.push_back(std::move(blocks));
    }
    return cocycles;
}

namespace {

CocycleBasis cocycles_from_json(const json& j, const ExceptionalPair& p) {
    CocycleBasis b{p.E2, p.E1, {}};
    if (!j.is_array()) throw InputError("cocycles: expected an array");
    for (const json& cj : j) {
        if (!cj.is_array() || cj.size() != p.ambient.arrows.size())
            throw InputError("cocycles: need one block per ambient arrow");
        std::vector<RatMat> blocks;
        for (size_t a = 0; a < cj.size(); ++a) {
            const Arrow& ar = p.ambient.arrows[a];
            blocks.push_back(matrix_from_rows(cj.at(a), p.E1.dim.at(ar.head),
                                              p.E2.dim.at(ar.tail), "cocycle block"));
        }
        b.cocycles.push_back(std::move(blocks));
    }
    return b;
}

} // namespace

json certificate_to_json(const Certificate& c) {
    json out = json::array();
    for (const CheckEntry& e : c.entries)
        out.push_back({{"check", e.check}, {"pass", e.pass}, {"details", e.details}});
    return out;
}

Certificate certificate_from_json(const json& j) {
    if (!j.is_array()) throw InputError("certificate: expected an array");
    Certificate c;
    for (const json& e : j) {
        CheckEntry entry;
        entry.check = need(e, "check", "certificate entry").get<std::string>();
        const json& pass = need(e, "pass", "certificate entry");
        if (!pass.is_boolean()) throw InputError("certificate entry: pass must be boolean");
        entry.pass = pass.get<bool>();
        entry.details = e.contains("details") ? e.at("details") : json::object();
        c.entries.push_back(std::move(entry));
    }
    return c;
}

json forge_result_to_json(const ForgeResult& r) {
    return {{"input_quiver", quiver_to_json(r.input_quiver)},
            {"witness", witness_to_json(r.witness)},
            {"pair", pair_to_json(r.pair)},
            {"cocycles", cocycles_to_json(r.basis)},
            {"W", representation_to_json(r.w)},
            {"certificate", certificate_to_json(r.certificate)},
            {"seed", r.seed},
            {"height", r.height},
            {"trusted_facts",
             {{"kronecker_pathology",
               "the orbit closure of the pinned Kronecker representation of dimension "
               "(3,3) is neither unibranch nor Cohen-Macaulay (Zwara)"},
              {"singularity_transfer",
               "hom-controlled exact functors preserve normality, unibranchness and "
               "Cohen-Macaulayness of orbit closures (Zwara); the certificate checks the "
               "computable hypotheses, not these two facts"}}}};
}

ForgeResult forge_result_from_json(const json& j) {
    ForgeResult r;
    r.input_quiver = quiver_from_json(need(j, "input_quiver", "result"));
    r.witness = witness_from_json(need(j, "witness", "result"));
    r.pair = pair_from_json(need(j, "pair", "result"));
    r.basis = cocycles_from_json(need(j, "cocycles", "result"), r.pair);
    r.w = representation_from_json(need(j, "W", "result"));
    r.certificate = certificate_from_json(need(j, "certificate", "result"));
    const json& seed = need(j, "seed", "result");
    if (!seed.is_number_unsigned() && !seed.is_number_integer())
        throw InputError("result: seed must be an integer");
    r.seed = seed.get<std::uint64_t>();
    r.height = need_int(j, "height", "result");
    return r;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << dump_canonical(j);
    if (!out) throw IoError("failed writing " + path);
}

std::string dump_canonical(const json& j) {
    return j.dump(2) + "\n";
}

} // namespace qforge
