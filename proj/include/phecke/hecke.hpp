#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "phecke/orientation.hpp"
#include "phecke/poly.hpp"
#include "phecke/propcox.hpp"

namespace phecke {

// Element of the group ring R[T], keyed by torus elements.
using RT = std::map<TElem, Poly>;

// Quadratic-relation parameters, one pair per generator. Conjugate
// generators must carry equal a's and transport-compatible b's; see
// validate_params.
struct Params {
    std::vector<Poly> a;  // indexed by generator
    std::vector<RT> b;
};

struct ParamsReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Free module over the Iwahori-Matsumoto basis indexed by group elements,
// with no zero coefficients stored.
struct HeckeElem {
    std::map<ProPElem, Poly> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const HeckeElem& o) const { return terms == o.terms; }
    bool operator!=(const HeckeElem& o) const { return !(*this == o); }
};

class HeckeAlgebra {
public:
    HeckeAlgebra(ProPGroupPtr group, VarTablePtr vars, Params params);

    const ProPGroup& group() const { return *group_; }
    const ProPGroupPtr& group_ptr() const { return group_; }
    const WeylGroup& weyl() const { return group_->weyl(); }
    const VarTablePtr& vars() const { return vars_; }
    const Params& params() const { return params_; }
    const Poly& a_of(int gen) const { return params_.a[gen]; }
    const RT& b_of(int gen) const { return params_.b[gen]; }
    const std::map<int, Poly>& a_by_class() const { return a_class_; }
    // square roots of the a's, when every class parameter is a monomial square
    const std::optional<std::map<int, Poly>>& sqrt_a_by_class() const { return sqrt_a_class_; }

    Poly poly_zero() const { return Poly::zero(vars_); }
    Poly poly_one() const { return Poly::constant(vars_, Rat(1)); }

    HeckeElem zero() const { return HeckeElem{}; }
    HeckeElem one() const;
    HeckeElem basis(const ProPElem& g) const;
    HeckeElem from_rt(const RT& b) const;  // supported on T

    HeckeElem add(const HeckeElem& x, const HeckeElem& y) const;
    HeckeElem sub(const HeckeElem& x, const HeckeElem& y) const;
    HeckeElem scale(const Poly& c, const HeckeElem& x) const;
    HeckeElem mul(const HeckeElem& x, const HeckeElem& y) const;
    // independent right-peeling evaluation of the same product
    HeckeElem mul_right_oracle(const HeckeElem& x, const HeckeElem& y) const;

    RT rt_mul(const RT& x, const RT& y) const;
    RT rt_action(const WElem& w, const RT& b) const;
    RT rt_shift(const TElem& t, const RT& b) const;  // t . b
    bool rt_equal(const RT& x, const RT& y) const;

    // T_{n_s}^{-1}; requires a_s to be a unit
    HeckeElem inv_generator(int gen) const;
    HeckeElem inv_basis(const ProPElem& g) const;

    ParamsReport validate_params() const;

    // commutes with every generator basis element (a generating set of the
    // algebra, so this certifies centrality)
    bool is_central(const HeckeElem& h) const;

    std::vector<ProPElem> support(const HeckeElem& h) const;

private:
    HeckeElem basis_mul(const ProPElem& g, const HeckeElem& y) const;
    HeckeElem apply_lambda(int gen, const HeckeElem& h) const;
    HeckeElem apply_rho(int gen, const HeckeElem& h) const;
    void add_term(HeckeElem& acc, const ProPElem& g, const Poly& c) const;
    void check_ring(const HeckeElem& x) const;

    ProPGroupPtr group_;
    VarTablePtr vars_;
    Params params_;
    std::map<int, Poly> a_class_;
    std::optional<std::map<int, Poly>> sqrt_a_class_;
};

using HeckeAlgebraPtr = std::shared_ptr<const HeckeAlgebra>;

}  // namespace phecke
