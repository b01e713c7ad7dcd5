#pragma once

#include "phecke/bernstein.hpp"

namespace phecke {

// Finite conjugation orbit of a translation-type element under the whole
// group; throws when the closure exceeds the bound.
std::vector<ProPElem> conjugation_orbit(const ProPGroup& G, const ProPElem& x,
                                        std::size_t bound = 4096);

// z_gamma = sum of theta_hat over the orbit, for a spherical orientation
HeckeElem z_gamma(const HeckeAlgebra& A, const Orientation& o,
                  const std::vector<ProPElem>& orbit);

// coefficients constant on conjugation orbits of the support (which must lie
// over X); such elements commute with the translation subalgebra
bool invariant_projection_check(const HeckeAlgebra& A, const HeckeElem& h);

// left-module generators over the translation subalgebra: minimal alcoves in
// every X-translate family, with lifts, certified on a ball of bounded length
struct ModuleGenerators {
    struct Entry {
        Mat w0;          // finite part the family belongs to
        ProPElem lift;   // chosen lift with lift^-1(C0) minimal
    };
    std::vector<Entry> entries;
    bool certified = false;
};
ModuleGenerators module_generators(const HeckeAlgebra& A, const Orientation& o,
                                   long long box_bound, long long length_bound);

// decomposition T_w = sum_i c_i theta_hat(x_i) theta_hat(lift_i) produced by
// the certification; returned for reporting
struct ModuleWitness {
    bool ok = false;
    std::size_t terms = 0;
};
ModuleWitness factor_through_generators(const HeckeAlgebra& A, const Orientation& o,
                                        const ModuleGenerators& gens, const ProPElem& w);

}  // namespace phecke
