#include "phecke/center.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace phecke {

std::vector<ProPElem> conjugation_orbit(const ProPGroup& G, const ProPElem& x,
                                        std::size_t bound) {
    if (!x.w.sigma.is_identity())
        throw std::invalid_argument("orbit: element is not of translation type");
    std::set<ProPElem> seen{x};
    std::vector<ProPElem> frontier{x};
    auto gens = G.group_generators();
    while (!frontier.empty()) {
        std::vector<ProPElem> next;
        for (const auto& y : frontier) {
            for (const auto& g : gens) {
                ProPElem image = G.conj(g, y);
                if (seen.insert(image).second) {
                    next.push_back(image);
                    if (seen.size() > bound)
                        throw std::runtime_error("orbit not finite within bound");
                }
            }
        }
        frontier = std::move(next);
    }
    return std::vector<ProPElem>(seen.begin(), seen.end());
}

HeckeElem z_gamma(const HeckeAlgebra& A, const Orientation& o,
                  const std::vector<ProPElem>& orbit) {
    if (o.kind() != Orientation::Kind::Spherical)
        throw std::invalid_argument("z_gamma requires a spherical orientation");
    HeckeElem out = A.zero();
    for (const auto& x : orbit) out = A.add(out, theta_hat(A, o, x));
    return out;
}

bool invariant_projection_check(const HeckeAlgebra& A, const HeckeElem& h) {
    const ProPGroup& G = A.group();
    const WeylGroup& W = A.weyl();
    Orientation o = Orientation::spherical(Mat::identity(W.rank()));

    std::map<ProPElem, Poly> coeffs = theta_basis_expansion(A, o, h);
    for (const auto& [g, c] : coeffs)
        if (!g.w.sigma.is_identity())
            throw std::invalid_argument("support is not contained in the translations");

    // conjugators generating the X^(1)-action: coordinate translations and
    // the torus generators
    std::vector<ProPElem> xgens;
    for (int i = 0; i < W.rank(); ++i) {
        IntVec e(W.rank(), 0);
        e[i] = 1;
        xgens.push_back(G.from_w(W.translation(e)));
        e[i] = -1;
        xgens.push_back(G.from_w(W.translation(e)));
    }
    for (std::size_t i = 0; i < G.torus().size(); ++i)
        if (G.torus().moduli[i] > 1) xgens.push_back(G.from_t(G.torus().generator(i)));

    auto coeff_of = [&](const ProPElem& g) {
        auto it = coeffs.find(g);
        return it == coeffs.end() ? A.poly_zero() : it->second;
    };
    for (const auto& [g, c] : coeffs) {
        std::set<ProPElem> orbit{g};
        std::vector<ProPElem> frontier{g};
        while (!frontier.empty()) {
            std::vector<ProPElem> next;
            for (const auto& y : frontier)
                for (const auto& conj : xgens) {
                    ProPElem image = G.conj(conj, y);
                    if (orbit.insert(image).second) next.push_back(image);
                }
            frontier = std::move(next);
            if (orbit.size() > 4096)
                throw std::runtime_error("translation orbit not finite within bound");
        }
        for (const auto& y : orbit)
            if (!(coeff_of(y) == c)) return false;
    }

    // consequence probe: h commutes with theta_hat of the conjugators
    for (const auto& y : xgens) {
        HeckeElem ty = theta_hat(A, o, y);
        if (!(A.mul(ty, h) == A.mul(h, ty)))
            throw std::logic_error("invariant projection: commutation probe failed");
    }
    return true;
}

namespace {

// weak order on chambers relative to C0, evaluated on group elements through
// their action on the base alcove
bool chamber_preceq(const WeylGroup& W, const WElem& a, const WElem& b) {
    std::size_t d_ab = W.separating(a, b).size();
    std::size_t d_b = W.separating(W.identity(), b).size();
    std::size_t d_a = W.separating(W.identity(), a).size();
    return d_b == d_a + d_ab;
}

}  // namespace

ModuleGenerators module_generators(const HeckeAlgebra& A, const Orientation& o,
                                   long long box, long long length_bound) {
    const WeylGroup& W = A.weyl();
    const ProPGroup& G = A.group();
    if (o.kind() != Orientation::Kind::Spherical)
        throw std::invalid_argument("module generators require a spherical orientation");
    ModuleGenerators out;

    for (const Mat& w0 : W.finite_elements()) {
        // family of X-translates of w0^-1(C0) over the box
        WElem w0inv = W.from_finite(w0.inverse());
        std::vector<WElem> family;
        IntVec x(W.rank(), -box);
        while (true) {
            family.push_back(W.mul(W.translation(x), w0inv));
            int i = 0;
            for (; i < W.rank(); ++i) {
                if (x[i] < box) { ++x[i]; break; }
                x[i] = -box;
            }
            if (i == W.rank()) break;
        }
        for (std::size_t ci = 0; ci < family.size(); ++ci) {
            const WElem& cand = family[ci];
            bool minimal = true;
            for (std::size_t oi = 0; oi < family.size() && minimal; ++oi) {
                if (oi == ci) continue;
                const WElem& other = family[oi];
                if (!chamber_preceq(W, other, cand)) continue;
                // strictly below, or the same alcove seen earlier
                if (!chamber_preceq(W, cand, other) || oi < ci) minimal = false;
            }
            if (minimal)
                out.entries.push_back({w0, G.from_w(W.inv(cand))});
        }
    }

    // certify: every basis element of bounded length factors through the set
    std::vector<ProPElem> ball;
    std::vector<TElem> torus_elems;
    if (G.torus().size() == 0 || G.torus().trivial()) {
        torus_elems.push_back(G.torus().zero());
    } else {
        torus_elems = G.torus().elements();
        if (torus_elems.size() > 8) torus_elems.resize(8);
    }
    IntVec x(W.rank(), -box);
    while (true) {
        for (const Mat& s : W.finite_elements()) {
            WElem w = W.mul(W.translation(x), W.from_finite(s));
            if (W.length(w) <= length_bound) {
                for (const auto& t : torus_elems) ball.push_back(ProPElem{t, w});
            }
        }
        int i = 0;
        for (; i < W.rank(); ++i) {
            if (x[i] < box) { ++x[i]; break; }
            x[i] = -box;
        }
        if (i == W.rank()) break;
    }
    out.certified = true;
    for (const auto& w : ball) {
        if (!factor_through_generators(A, o, out, w).ok) {
            out.certified = false;
            break;
        }
    }
    if (!out.certified)
        throw std::runtime_error("module generators: increase bounds");
    return out;
}

ModuleWitness factor_through_generators(const HeckeAlgebra& A, const Orientation& o,
                                        const ModuleGenerators& gens, const ProPElem& w) {
    const WeylGroup& W = A.weyl();
    const ProPGroup& G = A.group();
    ModuleWitness witness;
    HeckeElem remainder = A.basis(w);
    std::size_t guard = 0;
    while (!remainder.is_zero()) {
        if (++guard > 20000) return witness;
        // take a term of maximal length
        const ProPElem* top = nullptr;
        const Poly* coeff = nullptr;
        long long best = -1;
        for (const auto& [g, c] : remainder.terms) {
            long long l = G.length(g);
            if (l > best) {
                best = l;
                top = &g;
                coeff = &c;
            }
        }
        // find an entry whose finite part matches and whose chamber precedes
        const ModuleGenerators::Entry* entry = nullptr;
        for (const auto& e : gens.entries) {
            if (!(e.lift.w.sigma == top->w.sigma)) continue;
            if (chamber_preceq(W, W.inv(e.lift.w), W.inv(top->w))) {
                entry = &e;
                break;
            }
        }
        if (!entry) return witness;
        ProPElem xpart = G.mul(*top, G.inv(entry->lift));
        if (!xpart.w.sigma.is_identity()) return witness;
        if (G.length(*top) != G.length(xpart) + G.length(entry->lift)) return witness;
        HeckeElem product = A.mul(theta_hat(A, o, xpart), theta_hat(A, o, entry->lift));
        remainder = A.sub(remainder, A.scale(*coeff, product));
        ++witness.terms;
        // the subtraction must strictly lower the maximal length
        for (const auto& [g, c] : remainder.terms)
            if (G.length(g) > best) return witness;
    }
    witness.ok = true;
    return witness;
}

}  // namespace phecke
