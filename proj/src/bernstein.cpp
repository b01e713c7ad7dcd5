#include "phecke/bernstein.hpp"

#include <stdexcept>

namespace phecke {

Poly gamma_bar(const HeckeAlgebra& A, const Orientation& o, const WElem& w) {
    return bar_multiset(A.weyl(), gamma_multiset(A.weyl(), o, w), A.a_by_class(), A.vars());
}

Poly sqrt_l_bar(const HeckeAlgebra& A, const WElem& w) {
    if (!A.sqrt_a_by_class())
        throw std::domain_error("parameters admit no square roots");
    return bar_multiset(A.weyl(), big_l(A.weyl(), w), *A.sqrt_a_by_class(), A.vars());
}

Poly x_bar(const HeckeAlgebra& A, const WElem& w, const WElem& w2) {
    return bar_multiset(A.weyl(), big_x(A.weyl(), w, w2), A.a_by_class(), A.vars());
}

HeckeElem theta_hat_along(const HeckeAlgebra& A, const Orientation& o,
                          const std::vector<int>& letters, const ProPElem& omega) {
    const WeylGroup& W = A.weyl();
    std::vector<HeckeElem> factors;
    WElem prefix = W.identity();
    for (int s : letters) {
        HeckeElem factor = A.basis(A.group().lift_ns(s));
        if (o.eval(W, prefix, s) < 0)
            factor = A.sub(factor, A.from_rt(A.b_of(s)));
        factors.push_back(std::move(factor));
        prefix = W.mul(prefix, W.generator(s));
    }
    // fold from the right so every multiplication has a short left factor
    HeckeElem acc = A.basis(omega);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        acc = A.mul(*it, acc);
    return acc;
}

HeckeElem theta_hat(const HeckeAlgebra& A, const Orientation& o, const ProPElem& g) {
    const auto& G = A.group();
    auto word = A.weyl().reduced_word(g.w);
    // g = n_{s_1} ... n_{s_r} omega with the torus part folded into omega
    ProPElem rest = g;
    for (int s : word.letters) rest = G.mul(G.inv(G.lift_ns(s)), rest);
    return theta_hat_along(A, o, word.letters, rest);
}

HeckeElem theta(const HeckeAlgebra& A, const Orientation& o, const ProPElem& g) {
    for (const auto& [cls, a] : A.a_by_class())
        if (!a.is_unit())
            throw std::domain_error("theta requires invertible parameters a");
    Poly gb = gamma_bar(A, o, g.w);
    return A.scale(gb.inverse(), theta_hat(A, o, g));
}

HeckeElem theta_tilde(const HeckeAlgebra& A, const Orientation& o, const ProPElem& g) {
    Poly s = sqrt_l_bar(A, g.w);
    if (!s.is_unit())
        throw std::domain_error("theta~ requires invertible parameters a");
    return A.scale(s.inverse(), theta_hat(A, o, g));
}

XiPresentation xi_presentation(const HeckeAlgebra& A, const Hyperplane& h) {
    const WeylGroup& W = A.weyl();
    WElem refl = W.reflection(h);
    auto word = W.reduced_word(refl);
    if (!(word.omega == W.identity()))
        throw std::logic_error("reflection has a nontrivial length-zero part");
    std::size_t r = word.letters.size();
    if (r % 2 == 0) throw std::logic_error("reflection of even length");
    // palindromic pivot: s_H = (s_1...s_k) s_{k+1} (s_1...s_k)^{-1}
    std::size_t half = r / 2;
    ProPElem w = A.group().identity();
    for (std::size_t i = 0; i < half; ++i)
        w = A.group().mul(w, A.group().lift_ns(word.letters[i]));
    XiPresentation pres{w, word.letters[half]};
    ProPElem conj = A.group().mul(A.group().mul(pres.w, A.group().lift_ns(pres.gen)),
                                  A.group().inv(pres.w));
    if (!(conj.w == refl))
        throw std::logic_error("xi presentation does not match the wall");
    return pres;
}

HeckeElem xi(const HeckeAlgebra& A, const Orientation& o, const Hyperplane& h) {
    return xi(A, o, h, xi_presentation(A, h));
}

HeckeElem xi(const HeckeAlgebra& A, const Orientation& o, const Hyperplane& h,
             const XiPresentation& pres) {
    const auto& G = A.group();
    ProPElem conj = G.mul(G.mul(pres.w, G.lift_ns(pres.gen)), G.inv(pres.w));
    if (!(conj.w == A.weyl().reflection(h)))
        throw std::invalid_argument("xi presentation does not match the hyperplane");
    if (!A.sqrt_a_by_class())
        throw std::domain_error("xi requires square roots of the parameters a");
    int cls = A.weyl().class_of_generator(pres.gen);
    Poly sq = A.sqrt_a_by_class()->at(cls);
    ProPElem flip = G.mul(G.mul(pres.w, G.inv(G.lift_ns(pres.gen))), G.inv(pres.w));
    RT wb = A.rt_action(pres.w.w, A.b_of(pres.gen));
    HeckeElem th = theta_tilde(A, o, flip);
    return A.scale(sq.inverse(), A.mul(A.from_rt(wb), th));
}

std::map<ProPElem, Poly> theta_basis_expansion(const HeckeAlgebra& A, const Orientation& o,
                                               const HeckeElem& h) {
    std::map<ProPElem, Poly> coeffs;
    HeckeElem remainder = h;
    while (!remainder.is_zero()) {
        const ProPElem* top = nullptr;
        const Poly* c = nullptr;
        long long best = -1;
        for (const auto& [g, cc] : remainder.terms) {
            long long l = A.group().length(g);
            if (l > best) { best = l; top = &g; c = &cc; }
        }
        ProPElem key = *top;
        Poly coeff = *c;
        remainder = A.sub(remainder, A.scale(coeff, theta_hat(A, o, key)));
        coeffs.emplace(std::move(key), std::move(coeff));
        if (coeffs.size() > 50000)
            throw std::runtime_error("theta-hat expansion did not terminate");
    }
    return coeffs;
}

bool bernstein_check(const HeckeAlgebra& A, const Orientation& o, const Orientation& o2,
                     const ProPElem& g) {
    XiCache cache;
    return bernstein_check(A, o, o2, g, cache);
}

bool bernstein_check(const HeckeAlgebra& A, const Orientation& o, const Orientation& o2,
                     const ProPElem& g, XiCache& cache) {
    const WeylGroup& W = A.weyl();
    if (!adjacent_on(W, o, o2, g.w))
        throw std::invalid_argument("orientations are not adjacent on the separation set");
    HeckeElem lhs = A.sub(theta_tilde(A, o, g), theta_tilde(A, o2, g));
    HeckeElem sum = A.zero();
    for (const Hyperplane& h : W.separating(W.identity(), g.w)) {
        int s1 = o.eval_h(W, h, W.base());
        int s2 = o2.eval_h(W, h, W.base());
        if (s1 == s2) continue;
        auto it = cache.find(h);
        if (it == cache.end()) it = cache.emplace(h, xi(A, o2, h)).first;
        HeckeElem term = it->second;
        if (s1 < 0) term = A.sub(A.zero(), term);
        sum = A.add(sum, term);
    }
    HeckeElem rhs = A.mul(sum, theta_tilde(A, o, g));
    return lhs == rhs;
}

}  // namespace phecke
