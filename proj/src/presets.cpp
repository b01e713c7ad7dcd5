#include "phecke/presets.hpp"

#include <stdexcept>

namespace phecke {

namespace {

ProPGroupPtr gln_group(int n, TorusData torus) {
    auto weyl = std::make_shared<const WeylGroup>(gln_datum(n));
    return std::make_shared<const ProPGroup>(weyl, std::move(torus));
}

}  // namespace

HeckeAlgebraPtr affine_hecke_gln(int n, GlnMode mode) {
    if (n < 2) throw std::invalid_argument("affine_hecke_gln: n must be >= 2");
    auto group = gln_group(n, TorusData{{}});
    VarTablePtr vars;
    Poly a = Poly();
    switch (mode) {
        case GlnMode::Universal:
            vars = make_vars({"a", "b"});
            a = Poly::variable(vars, "a");
            break;
        case GlnMode::AOne:
            vars = make_vars({"b"});
            a = Poly::constant(vars, Rat(1));
            break;
        case GlnMode::Laurent:
            vars = make_vars({"a", "b"}, {true, false});
            a = Poly::variable(vars, "a");
            break;
    }
    Poly b = Poly::variable(vars, "b");
    int ng = group->weyl().num_generators();
    Params params;
    params.a.assign(ng, a);
    params.b.assign(ng, RT{{group->torus().zero(), b}});
    return std::make_shared<const HeckeAlgebra>(group, vars, std::move(params));
}

HeckeAlgebraPtr yokonuma_aff(long long d, int n) {
    if (d < 1 || n < 2) throw std::invalid_argument("yokonuma_aff: need d >= 1, n >= 2");
    TorusData torus{std::vector<long long>(n, d)};
    auto group = gln_group(n, torus);
    VarTablePtr vars = make_vars({"u", "v"}, {true, false});
    Poly u = Poly::variable(vars, "u");
    Poly v = Poly::variable(vars, "v");
    Poly a = u * u;
    int ng = group->weyl().num_generators();
    Params params;
    params.a.assign(ng, a);
    params.b.resize(ng);
    // generator 0 is the affine one, pairing coordinates (n, 1)
    for (int gen = 0; gen < ng; ++gen) {
        int i = gen == 0 ? n - 1 : gen - 1;   // 0-based first coordinate
        int j = gen == 0 ? 0 : gen;           // 0-based second coordinate
        RT b;
        for (long long k = 0; k < d; ++k) {
            TElem t = torus.zero();
            t[i] += k;
            t[j] -= k;
            t = torus.reduce(std::move(t));
            Poly coeff = v * Poly::constant(vars, Rat(1, d));
            auto it = b.find(t);
            if (it == b.end()) b.emplace(std::move(t), coeff);
            else it->second += coeff;
        }
        params.b[gen] = std::move(b);
    }
    return std::make_shared<const HeckeAlgebra>(group, vars, std::move(params));
}

HeckeElem e_idempotent(const HeckeAlgebra& A, int i) {
    const TorusData& torus = A.group().torus();
    int n = A.weyl().rank();
    if (torus.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("e_idempotent needs a Yokonuma instance");
    if (i < 0 || i >= n) throw std::invalid_argument("e_idempotent: index out of range");
    long long d = torus.moduli[0];
    int a = i == 0 ? n - 1 : i - 1;
    int b = i == 0 ? 0 : i;
    RT e;
    for (long long k = 0; k < d; ++k) {
        TElem t = torus.zero();
        t[a] += k;
        t[b] -= k;
        t = torus.reduce(std::move(t));
        Poly coeff = Poly::constant(A.vars(), Rat(1, d));
        auto it = e.find(t);
        if (it == e.end()) e.emplace(std::move(t), coeff);
        else it->second += coeff;
    }
    return A.from_rt(e);
}

HeckeElem jucys_murphy(const HeckeAlgebra& A, int i, bool affine) {
    int n = A.weyl().rank();
    if (i < 1 || i > n) throw std::invalid_argument("jucys_murphy: index out of range");
    HeckeElem j;
    if (affine) {
        IntVec e(n, 0);
        e[0] = -1;
        j = A.inv_basis(A.group().from_w(A.weyl().translation(e)));
    } else {
        j = A.one();
    }
    for (int k = 1; k < i; ++k) {
        HeckeElem ts = A.basis(A.group().lift_ns(k));
        j = A.mul(A.mul(ts, j), ts);
    }
    return j;
}

Orientation dominant_spherical(const HeckeAlgebra& A) {
    return Orientation::spherical(Mat::identity(A.weyl().rank()));
}

HeckeElem pi_to_finite(const HeckeAlgebra& A, const HeckeElem& h) {
    const ProPGroup& G = A.group();
    const WeylGroup& W = A.weyl();
    if (!W.has_omega())
        throw std::domain_error("pi_to_finite requires the GL_n datum");
    int n = W.rank();
    // image of T_u: the finite factor of u after X_1 collapses
    HeckeElem u_img = A.one();
    for (int g = n - 1; g >= 1; --g) u_img = A.mul(u_img, A.basis(G.lift_ns(g)));
    HeckeElem u_img_inv = A.one();
    for (int g = 1; g <= n - 1; ++g) u_img_inv = A.mul(u_img_inv, A.inv_generator(g));
    HeckeElem s0_img =
        A.mul(A.mul(u_img, A.basis(G.lift_ns(1))), u_img_inv);

    HeckeElem out = A.zero();
    for (const auto& [g, c] : h.terms) {
        auto word = W.reduced_word(g.w);
        ProPElem rest = g;
        for (int s : word.letters) rest = G.mul(G.inv(G.lift_ns(s)), rest);
        // rest = (t, u^m); split off the torus part on the right
        long long m = word.m;
        ProPElem upow = G.identity();
        ProPElem u = G.omega_lift();
        for (long long k = 0; k < std::abs(m); ++k)
            upow = G.mul(upow, m > 0 ? u : G.inv(u));
        ProPElem tpart = G.mul(G.inv(upow), rest);
        if (!(tpart.w == W.identity()))
            throw std::logic_error("pi_to_finite: unexpected length-zero part");

        HeckeElem img = A.one();
        for (int s : word.letters)
            img = A.mul(img, s == 0 ? s0_img : A.basis(G.lift_ns(s)));
        for (long long k = 0; k < std::abs(m); ++k)
            img = A.mul(img, m > 0 ? u_img : u_img_inv);
        img = A.mul(img, A.basis(tpart));
        out = A.add(out, A.scale(c, img));
    }
    return out;
}

}  // namespace phecke
