#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "phecke/verify.hpp"

using namespace phecke;

namespace {

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << j.dump(2) << "\n";
    }
}

Json parse_arg(const std::string& text) {
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw std::runtime_error("cannot open " + text.substr(1));
        return Json::parse(in);
    }
    return Json::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in generic pro-p Hecke algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string preset = "gln:2:universal";
    std::string out_path;
    SuiteOptions opt;

    // optional JSON config supplies defaults; flags override
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) != "--config") continue;
        std::ifstream in(argv[i + 1]);
        if (!in) {
            std::cerr << "error: cannot open config " << argv[i + 1] << "\n";
            return 2;
        }
        Json cfg = Json::parse(in);
        if (cfg.contains("preset")) preset = cfg["preset"].get<std::string>();
        if (cfg.contains("seed")) opt.seed = cfg["seed"].get<std::uint64_t>();
        if (cfg.contains("trials")) opt.trials = cfg["trials"].get<int>();
        if (cfg.contains("max_len")) opt.max_len = cfg["max_len"].get<int>();
        if (cfg.contains("box")) opt.box = cfg["box"].get<long long>();
    }
    std::string config_path;
    app.add_option("--config", config_path, "JSON file with default options");
    app.add_option("--preset", preset, "gln:<n>:<mode> or yokonuma:<d>:<n>")
        ->capture_default_str();
    app.add_option("--out", out_path, "write the JSON result to a file");

    // mul
    auto* cmd_mul = app.add_subcommand("mul", "multiply two elements");
    std::string mul_a, mul_b;
    cmd_mul->add_option("a", mul_a, "left factor (HeckeElem JSON or @file)")->required();
    cmd_mul->add_option("b", mul_b, "right factor")->required();

    // theta-hat / theta
    auto* cmd_that = app.add_subcommand("theta-hat", "integral Bernstein map");
    auto* cmd_theta = app.add_subcommand("theta", "Bernstein map (invertible a)");
    std::string or_spec = "spherical:[1,2]";
    std::string elem_json;
    for (auto* cmd : {cmd_that, cmd_theta}) {
        cmd->add_option("--orientation", or_spec,
                        "chamber:<WElem-json> | spherical:<perm>, modifiers .op/.act(...)");
        cmd->add_option("--elem", elem_json, "ProPElem JSON or @file")->required();
    }

    // xi
    auto* cmd_xi = app.add_subcommand("xi", "wall element Xi_o(H)");
    int xi_alpha = 0;
    long long xi_k = 0;
    cmd_xi->add_option("--orientation", or_spec);
    cmd_xi->add_option("--alpha", xi_alpha, "positive root index")->required();
    cmd_xi->add_option("--k", xi_k, "affine offset")->required();

    // center
    auto* cmd_center = app.add_subcommand("center", "orbit sum z_gamma with certificate");
    std::string orbit_of;
    cmd_center->add_option("--orbit-of", orbit_of, "ProPElem JSON or @file")->required();

    // jm
    auto* cmd_jm = app.add_subcommand("jm", "Jucys-Murphy element");
    int jm_i = 1;
    bool jm_finite = false;
    cmd_jm->add_option("--i", jm_i, "index (1-based)")->required();
    cmd_jm->add_flag("--finite", jm_finite, "finite variant (default affine)");

    // pi
    auto* cmd_pi = app.add_subcommand("pi", "projection onto the finite subalgebra");
    std::string pi_elem;
    cmd_pi->add_option("--elem", pi_elem, "HeckeElem JSON or @file")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    cmd_verify->add_option("suite", suite, "suite name")->required();
    cmd_verify->add_option("--seed", opt.seed, "seed for randomized suites")
        ->capture_default_str();
    cmd_verify->add_option("--trials", opt.trials, "randomized trial count")
        ->capture_default_str();
    cmd_verify->add_option("--max-len", opt.max_len, "length bound")->capture_default_str();
    cmd_verify->add_option("--box", opt.box, "coordinate box bound")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        auto A = make_preset(preset);
        if (*cmd_mul) {
            HeckeElem a = hecke_from_json(*A, parse_arg(mul_a));
            HeckeElem b = hecke_from_json(*A, parse_arg(mul_b));
            emit(hecke_to_json(*A, A->mul(a, b)), out_path);
        } else if (*cmd_that || *cmd_theta) {
            Orientation o = orientation_from_spec(A->weyl(), or_spec);
            ProPElem g = propelem_from_json(A->group(), parse_arg(elem_json));
            HeckeElem h = *cmd_that ? theta_hat(*A, o, g) : theta(*A, o, g);
            emit(hecke_to_json(*A, h), out_path);
        } else if (*cmd_xi) {
            Orientation o = orientation_from_spec(A->weyl(), or_spec);
            Hyperplane h{xi_alpha, xi_k};
            if (xi_alpha < 0 ||
                xi_alpha >= static_cast<int>(A->weyl().datum().positive_roots.size()))
                throw std::invalid_argument("root index out of range");
            emit(hecke_to_json(*A, xi(*A, o, h)), out_path);
        } else if (*cmd_center) {
            ProPElem x = propelem_from_json(A->group(), parse_arg(orbit_of));
            auto orbit = conjugation_orbit(A->group(), x);
            Orientation o = dominant_spherical(*A);
            HeckeElem z = z_gamma(*A, o, orbit);
            bool central = A->is_central(z);
            bool indep = true;
            for (const Mat& d : A->weyl().finite_elements())
                if (!(z_gamma(*A, Orientation::spherical(d), orbit) == z)) indep = false;
            Json j;
            j["z"] = hecke_to_json(*A, z);
            j["orbit_size"] = orbit.size();
            j["certificate"] = Json{{"central", central},
                                    {"orientation_independent", indep}};
            emit(j, out_path);
            if (!central || !indep) return 1;
        } else if (*cmd_jm) {
            emit(hecke_to_json(*A, jucys_murphy(*A, jm_i, !jm_finite)), out_path);
        } else if (*cmd_pi) {
            HeckeElem h = hecke_from_json(*A, parse_arg(pi_elem));
            emit(hecke_to_json(*A, pi_to_finite(*A, h)), out_path);
        } else if (*cmd_verify) {
            SuiteReport report = run_suite(suite, preset, opt);
            emit(report.to_json(), out_path);
            if (!report.ok()) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
