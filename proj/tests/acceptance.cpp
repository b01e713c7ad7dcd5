// Acceptance runner: one exact check per criterion, one pass/fail line each.
// All identities are verified with exact arithmetic; the time budgets are
// part of the acceptance contract.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "phecke/verify.hpp"

using namespace phecke;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool()> run;
};

bool suites_pass(const std::vector<std::pair<std::string, std::string>>& jobs,
                 const SuiteOptions& opt) {
    for (const auto& [suite, preset] : jobs) {
        SuiteReport r = run_suite(suite, preset, opt);
        if (!r.ok()) {
            for (const auto& c : r.checks)
                if (!c.pass)
                    std::printf("      failed: %s/%s %s %s\n", suite.c_str(),
                                preset.c_str(), c.id.c_str(), c.witness.c_str());
            return false;
        }
    }
    return true;
}

bool criterion_braid() {
    SuiteOptions opt;
    return suites_pass({{"braid", "gln:2:universal"},
                        {"braid", "gln:3:universal"},
                        {"braid", "gln:4:universal"},
                        {"braid", "yokonuma:2:2"},
                        {"braid", "yokonuma:2:3"},
                        {"braid", "yokonuma:3:2"},
                        {"braid", "yokonuma:3:3"}},
                       opt);
}

bool criterion_length_oracle() {
    SuiteOptions opt;
    opt.max_len = 6;
    return suites_pass({{"length-oracle", "gln:2:a1"}, {"length-oracle", "gln:3:a1"}}, opt);
}

bool criterion_multiplication() {
    SuiteOptions opt;
    opt.trials = 500;
    opt.max_len = 5;
    opt.seed = 2024;
    return suites_pass({{"assoc", "gln:2:universal"},
                        {"assoc", "gln:3:a1"},
                        {"assoc", "yokonuma:2:2"},
                        {"im-relations", "gln:2:universal"},
                        {"im-relations", "gln:3:a1"},
                        {"im-relations", "yokonuma:2:2"}},
                       opt);
}

bool criterion_word_independence() {
    for (const std::string& preset :
         {std::string("gln:2:universal"), std::string("gln:3:a1"),
          std::string("yokonuma:2:2")}) {
        auto A = make_preset(preset);
        const WeylGroup& W = A->weyl();
        const auto& G = A->group();
        Orientation oD = dominant_spherical(*A);
        Orientation oc = Orientation::chamber(W.generator(1));

        // every element of length <= 5 over a covering coordinate box
        long long box = 4;
        std::vector<TElem> torus_reps{G.torus().zero()};
        if (!G.torus().trivial()) torus_reps.push_back(G.torus().generator(0));
        IntVec x(W.rank(), -box);
        while (true) {
            for (const Mat& s : W.finite_elements()) {
                WElem w = W.mul(W.translation(x), W.from_finite(s));
                if (W.length(w) <= 5) {
                    auto words = W.all_reduced_words(w);
                    for (const auto& t : torus_reps) {
                        ProPElem g{t, w};
                        for (const Orientation& o : {oD, oc}) {
                            HeckeElem base;
                            bool first = true;
                            for (const auto& letters : words) {
                                ProPElem rest = g;
                                for (int letter : letters)
                                    rest = G.mul(G.inv(G.lift_ns(letter)), rest);
                                HeckeElem cur = theta_hat_along(*A, o, letters, rest);
                                if (first) {
                                    base = cur;
                                    first = false;
                                } else if (!(cur == base)) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
            int i = 0;
            for (; i < W.rank(); ++i) {
                if (x[i] < box) { ++x[i]; break; }
                x[i] = -box;
            }
            if (i == W.rank()) break;
        }
    }
    return true;
}

bool criterion_cocycle_product() {
    SuiteOptions opt;
    opt.trials = 300;
    opt.max_len = 4;
    opt.seed = 7;
    return suites_pass({{"cocycle", "gln:2:laurent"},
                        {"cocycle", "gln:3:laurent"},
                        {"cocycle", "yokonuma:2:2"},
                        {"product-rule", "gln:2:laurent"},
                        {"product-rule", "gln:3:laurent"},
                        {"product-rule", "yokonuma:2:2"}},
                       opt);
}

bool criterion_coboundaries() {
    SuiteOptions opt;
    opt.trials = 300;
    opt.max_len = 4;
    opt.seed = 11;
    return suites_pass({{"gamma-coboundary", "gln:2:a1"},
                        {"gamma-coboundary", "gln:3:a1"},
                        {"l-coboundary", "gln:2:a1"},
                        {"l-coboundary", "gln:3:a1"}},
                       opt);
}

bool criterion_triangular() {
    SuiteOptions opt;
    opt.max_len = 5;
    return suites_pass({{"triangular", "gln:2:universal"},
                        {"triangular", "gln:3:a1"},
                        {"triangular", "yokonuma:2:2"}},
                       opt);
}

bool criterion_bernstein() {
    SuiteOptions opt;
    opt.box = 2;
    return suites_pass({{"bernstein", "gln:2:a1"},
                        {"bernstein", "gln:3:a1"},
                        {"bernstein", "yokonuma:2:2"}},
                       opt);
}

bool criterion_center() {
    SuiteOptions opt;
    opt.box = 2;
    return suites_pass({{"center", "gln:2:universal"},
                        {"center", "gln:3:a1"},
                        {"center", "yokonuma:2:2"}},
                       opt);
}

bool criterion_jucys_murphy() {
    SuiteOptions opt;
    return suites_pass({{"jm-bernstein", "gln:2:laurent"},
                        {"jm-bernstein", "gln:3:laurent"},
                        {"jm-bernstein", "yokonuma:2:2"},
                        {"jm-bernstein", "yokonuma:2:3"},
                        {"jm-bernstein", "yokonuma:3:2"}},
                       opt);
}

bool criterion_orientation_classification() {
    SuiteOptions opt;
    return suites_pass(
        {{"orientation-finite", "gln:2:a1"}, {"orientation-finite", "gln:3:a1"}}, opt);
}

bool criterion_spherical_limit() {
    SuiteOptions opt;
    opt.max_len = 3;
    return suites_pass(
        {{"spherical-limit", "gln:2:a1"}, {"spherical-limit", "gln:3:a1"}}, opt);
}

bool criterion_module_generators() {
    SuiteOptions opt;
    opt.box = 3;
    opt.max_len = 4;
    return suites_pass({{"module-generators", "gln:2:a1"}}, opt);
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"01 braid lifts", 5, criterion_braid},
        {"02 length oracle", 60, criterion_length_oracle},
        {"03 multiplication", 120, criterion_multiplication},
        {"04 theta-hat word independence", 120, criterion_word_independence},
        {"05 cocycle and product rules", 600, criterion_cocycle_product},
        {"06 coboundary identities", 600, criterion_coboundaries},
        {"07 triangularity", 600, criterion_triangular},
        {"08 bernstein relation", 600, criterion_bernstein},
        {"09 center basis", 600, criterion_center},
        {"10 jucys-murphy", 600, criterion_jucys_murphy},
        {"11 finite orientation classification", 30, criterion_orientation_classification},
        {"12 spherical limit", 30, criterion_spherical_limit},
        {"13 module generators", 300, criterion_module_generators},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        bool in_budget = secs <= c.budget_seconds;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("criterion %s: %s (%.2fs%s)%s%s\n", c.name.c_str(),
                    pass ? "PASS" : "FAIL", secs,
                    in_budget ? "" : ", over budget",
                    error.empty() ? "" : " error: ", error.c_str());
        std::fflush(stdout);
    }
    if (failures == 0) std::printf("acceptance: all %zu criteria passed\n",
                                   criteria.size());
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
