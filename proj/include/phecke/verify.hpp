#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phecke/json_io.hpp"
#include "phecke/presets.hpp"

namespace phecke {

struct Check {
    std::string id;
    bool pass = false;
    std::string witness;  // filled on failure (or notable detail)
};

struct SuiteReport {
    std::string suite;
    std::string preset;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool ok() const;
    Json to_json() const;  // checks sorted by id
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int trials = 100;
    int max_len = 4;
    long long box = 2;
};

// "gln:<n>:<universal|a1|laurent>" or "yokonuma:<d>:<n>"
HeckeAlgebraPtr make_preset(const std::string& spec);

extern const std::vector<std::string> kSuiteNames;

SuiteReport run_suite(const std::string& suite, const std::string& preset,
                      const SuiteOptions& opt);

// individual suites (run_suite dispatches to these)
SuiteReport suite_braid(const std::string& preset, const SuiteOptions&);
SuiteReport suite_params(const std::string& preset, const SuiteOptions&);
SuiteReport suite_assoc(const std::string& preset, const SuiteOptions&);
SuiteReport suite_im_relations(const std::string& preset, const SuiteOptions&);
SuiteReport suite_cocycle(const std::string& preset, const SuiteOptions&);
SuiteReport suite_product_rule(const std::string& preset, const SuiteOptions&);
SuiteReport suite_triangular(const std::string& preset, const SuiteOptions&);
SuiteReport suite_bernstein(const std::string& preset, const SuiteOptions&);
SuiteReport suite_gamma_coboundary(const std::string& preset, const SuiteOptions&);
SuiteReport suite_l_coboundary(const std::string& preset, const SuiteOptions&);
SuiteReport suite_center(const std::string& preset, const SuiteOptions&);
SuiteReport suite_orientation_finite(const std::string& preset, const SuiteOptions&);
SuiteReport suite_length_oracle(const std::string& preset, const SuiteOptions&);
SuiteReport suite_spherical_limit(const std::string& preset, const SuiteOptions&);
SuiteReport suite_jm_bernstein(const std::string& preset, const SuiteOptions&);
// acceptance-only: module generator factorization
SuiteReport suite_module_generators(const std::string& preset, const SuiteOptions&);

// deterministic random elements for the randomized suites
class ElementSampler {
public:
    ElementSampler(const ProPGroup& G, std::uint64_t seed);
    ProPElem random_elem(int max_len);

private:
    const ProPGroup& group_;
    std::uint64_t state_;
    std::uint64_t next();
};

}  // namespace phecke
