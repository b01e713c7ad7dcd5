#pragma once

#include <map>
#include <memory>
#include <vector>

#include "phecke/weyl.hpp"

namespace phecke {

using TElem = std::vector<long long>;

// Finite abelian T, a product of cyclic groups, with W acting through the
// finite quotient by integer matrices (coordinate permutations in all the
// built-in instances).
struct TorusData {
    std::vector<long long> moduli;

    std::size_t size() const { return moduli.size(); }
    bool trivial() const;
    TElem zero() const { return TElem(moduli.size(), 0); }
    TElem reduce(TElem t) const;
    TElem add(const TElem& a, const TElem& b) const;
    TElem neg(const TElem& a) const;
    TElem generator(std::size_t i) const;
    std::vector<TElem> elements() const;  // full enumeration (small groups only)
};

// Values of the wall cocycle on one representative per generator class,
// extended W-equivariantly to all walls. Trivial by default.
struct CocycleData {
    std::map<int, TElem> class_values;  // class id -> T-element

    bool trivial() const { return class_values.empty(); }
};

struct ProPElem {
    TElem t;
    WElem w;

    bool operator==(const ProPElem& o) const { return t == o.t && w == o.w; }
    bool operator!=(const ProPElem& o) const { return !(*this == o); }
    bool operator<(const ProPElem& o) const {
        if (t != o.t) return t < o.t;
        return w < o.w;
    }
};

// W^(1) = T x W with multiplication twisted by the wall cocycle:
// (t, w)(t', w') = (t + w(t') + h(X(w, w')), w w').
class ProPGroup {
public:
    ProPGroup(WeylGroupPtr weyl, TorusData torus, CocycleData cocycle = {});

    const WeylGroup& weyl() const { return *weyl_; }
    const WeylGroupPtr& weyl_ptr() const { return weyl_; }
    const TorusData& torus() const { return torus_; }
    bool split() const { return cocycle_.trivial(); }

    ProPElem identity() const;
    ProPElem from_w(const WElem& w) const;
    ProPElem from_t(const TElem& t) const;
    ProPElem lift_ns(int gen_index) const;  // (0, s)
    ProPElem omega_lift() const;            // (0, u), GL_n only

    ProPElem mul(const ProPElem& a, const ProPElem& b) const;
    ProPElem inv(const ProPElem& a) const;
    ProPElem conj(const ProPElem& g, const ProPElem& x) const;  // g x g^-1

    // action of W on T through the finite quotient
    TElem torus_action(const WElem& w, const TElem& t) const;
    TElem torus_action(const ProPElem& g, const TElem& t) const;

    long long length(const ProPElem& g) const { return weyl_->length(g.w); }
    const WElem& project(const ProPElem& g) const { return g.w; }

    // cocycle value h(X(w, w')) summed over double crossings
    TElem cocycle_factor(const WElem& a, const WElem& b) const;
    TElem cocycle_value(const Hyperplane& h) const;

    // n_s n_t n_s ... = n_t n_s n_t ... for every finite order m(s,t)
    bool validate_braid_lifts() const;

    // conjugation-closure generators: all n_s, the omega lift when present,
    // and the torus generators
    std::vector<ProPElem> group_generators() const;

private:
    void validate_cocycle() const;

    WeylGroupPtr weyl_;
    TorusData torus_;
    CocycleData cocycle_;
};

using ProPGroupPtr = std::shared_ptr<const ProPGroup>;

}  // namespace phecke
