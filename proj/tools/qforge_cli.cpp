// Command-line surface: classify / forge / hom / check / selftest.
//
// Exit codes: 0 all checks passed, 2 certificate failure, 3 precondition
// refusal or bad input, 4 I/O or parse error.

#include "qforge/errors.hpp"
#include "qforge/json_io.hpp"
#include "qforge/pipeline.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertificate = 2;
constexpr int kExitRefusal = 3;
constexpr int kExitIo = 4;

std::string dim_str(const qforge::DimVec& d) {
    std::string s = "[";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

void print_certificate(const qforge::Certificate& cert) {
    for (const auto& e : cert.entries)
        std::cout << (e.pass ? "  ok   " : "  FAIL ") << e.check << "\n";
}

int run_classify(const std::string& path) {
    const qforge::Quiver q = qforge::quiver_from_json(qforge::load_json_file(path));
    const qforge::QuiverClass cls = qforge::classify(q);
    if (cls == qforge::QuiverClass::TameEuclidean)
        std::cout << to_string(cls) << ", delta = " << dim_str(qforge::isotropic_root(q))
                  << "\n";
    else
        std::cout << to_string(cls) << "\n";
    return kExitOk;
}

int run_forge(const std::string& path, std::uint64_t seed, const std::string& out) {
    const qforge::Quiver q = qforge::quiver_from_json(qforge::load_json_file(path));
    const qforge::ForgeResult result = qforge::forge(q, qforge::RngSpec{seed, 10});
    qforge::write_json_file(out, qforge::forge_result_to_json(result));
    std::cout << "forged W with dim " << dim_str(result.w.dim) << " over "
              << result.input_quiver.vertex_count << " vertices; certificate has "
              << result.certificate.entries.size() << " checks\n";
    std::cout << "result written to " << out << "\n";
    if (!result.certificate.all_pass()) {
        std::cout << "certificate FAILED:\n";
        print_certificate(result.certificate);
        return kExitCertificate;
    }
    std::cout << "certificate: all checks passed\n";
    return kExitOk;
}

int run_hom(const std::string& path_v, const std::string& path_w) {
    const qforge::Representation v =
        qforge::representation_from_json(qforge::load_json_file(path_v));
    const qforge::Representation w =
        qforge::representation_from_json(qforge::load_json_file(path_w));
    if (!(v.quiver == w.quiver))
        throw qforge::InputError("hom: the representations live on different quivers");
    const auto [hom, ext] = qforge::hom_ext_dims(v, w);
    const long long euler = qforge::euler_form(v.quiver, v.dim, w.dim);
    std::cout << "hom_dim = " << hom << "\n";
    std::cout << "ext_dim = " << ext << "\n";
    std::cout << "euler   = " << euler << "\n";
    if (hom - ext != euler) {
        std::cout << "identity hom_dim - ext_dim = <d_V, d_W>: VIOLATED\n";
        return kExitCertificate;
    }
    std::cout << "identity hom_dim - ext_dim = <d_V, d_W>: ok\n";
    return kExitOk;
}

int run_check(const std::string& path) {
    const qforge::ForgeResult stored =
        qforge::forge_result_from_json(qforge::load_json_file(path));
    const qforge::Certificate cert = qforge::check_result(stored);
    print_certificate(cert);
    if (!cert.all_pass()) {
        std::cout << "verification FAILED\n";
        return kExitCertificate;
    }
    std::cout << "verification passed: result reproduces from its seed\n";
    return kExitOk;
}

int run_selftest(std::uint64_t seed) {
    const qforge::Certificate cert = qforge::selftest(qforge::RngSpec{seed, 10});
    for (const auto& e : cert.entries) {
        std::cout << (e.pass ? "PASS " : "FAIL ") << e.check;
        if (e.details.is_object() && e.details.contains("passed") && e.details.contains("total"))
            std::cout << " (" << e.details["passed"] << "/" << e.details["total"] << ")";
        else if (e.details.is_object() && e.details.contains("passed") &&
                 e.details.contains("quivers"))
            std::cout << " (" << e.details["passed"] << "/" << e.details["quivers"] << ")";
        std::cout << "\n";
    }
    return cert.all_pass() ? kExitOk : kExitCertificate;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quiver-representation toolkit"};
    app.require_subcommand(1);

    std::string quiver_path, out_path = "result.json", rep_v, rep_w, result_path;
    std::uint64_t seed = 0;

    auto* classify_cmd = app.add_subcommand("classify", "representation type of a quiver");
    classify_cmd->add_option("quiver", quiver_path, "quiver JSON file")->required();

    auto* forge_cmd =
        app.add_subcommand("forge", "construct the pathological representation W");
    forge_cmd->add_option("quiver", quiver_path, "quiver JSON file")->required();
    forge_cmd->add_option("--seed", seed, "rng seed")->envname("QFORGE_SEED");
    forge_cmd->add_option("--out", out_path, "output JSON file");

    auto* hom_cmd = app.add_subcommand("hom", "Hom/Ext dimensions of two representations");
    hom_cmd->add_option("repV", rep_v, "representation JSON file")->required();
    hom_cmd->add_option("repW", rep_w, "representation JSON file")->required();

    auto* check_cmd = app.add_subcommand("check", "re-verify a forge result from scratch");
    check_cmd->add_option("result", result_path, "forge result JSON file")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in fuzz suites");
    selftest_cmd->add_option("--seed", seed, "rng seed")->envname("QFORGE_SEED");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return run_classify(quiver_path);
        if (forge_cmd->parsed()) return run_forge(quiver_path, seed, out_path);
        if (hom_cmd->parsed()) return run_hom(rep_v, rep_w);
        if (check_cmd->parsed()) return run_check(result_path);
        if (selftest_cmd->parsed()) return run_selftest(seed);
    } catch (const qforge::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qforge::RefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const qforge::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const qforge::PairError& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        print_certificate(e.certificate);
        return kExitCertificate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCertificate;
    }
    return kExitOk;
}
