#include "phecke/hecke.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace phecke {

HeckeAlgebra::HeckeAlgebra(ProPGroupPtr group, VarTablePtr vars, Params params)
    : group_(std::move(group)), vars_(std::move(vars)), params_(std::move(params)) {
    int ng = group_->weyl().num_generators();
    if (static_cast<int>(params_.a.size()) != ng ||
        static_cast<int>(params_.b.size()) != ng)
        throw std::invalid_argument("parameter count does not match generators");
    for (int i = 0; i < ng; ++i) {
        int cls = group_->weyl().class_of_generator(i);
        auto it = a_class_.find(cls);
        if (it == a_class_.end()) a_class_.emplace(cls, params_.a[i]);
    }
    std::map<int, Poly> roots;
    bool all = true;
    for (const auto& [cls, a] : a_class_) {
        auto r = a.monomial_sqrt();
        if (!r) { all = false; break; }
        roots.emplace(cls, *r);
    }
    if (all) sqrt_a_class_ = std::move(roots);
}

void HeckeAlgebra::check_ring(const HeckeElem& x) const {
    for (const auto& [g, c] : x.terms)
        if (c.vars() != vars_) throw std::invalid_argument("Hecke coefficient ring mismatch");
}

HeckeElem HeckeAlgebra::one() const { return basis(group_->identity()); }

HeckeElem HeckeAlgebra::basis(const ProPElem& g) const {
    HeckeElem h;
    h.terms.emplace(g, poly_one());
    return h;
}

HeckeElem HeckeAlgebra::from_rt(const RT& b) const {
    HeckeElem h;
    for (const auto& [t, c] : b)
        if (!c.is_zero()) h.terms.emplace(group_->from_t(t), c);
    return h;
}

void HeckeAlgebra::add_term(HeckeElem& acc, const ProPElem& g, const Poly& c) const {
    if (c.is_zero()) return;
    auto it = acc.terms.find(g);
    if (it == acc.terms.end()) {
        acc.terms.emplace(g, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.terms.erase(it);
}

HeckeElem HeckeAlgebra::add(const HeckeElem& x, const HeckeElem& y) const {
    HeckeElem r = x;
    for (const auto& [g, c] : y.terms) add_term(r, g, c);
    return r;
}

HeckeElem HeckeAlgebra::sub(const HeckeElem& x, const HeckeElem& y) const {
    HeckeElem r = x;
    for (const auto& [g, c] : y.terms) add_term(r, g, -c);
    return r;
}

HeckeElem HeckeAlgebra::scale(const Poly& c, const HeckeElem& x) const {
    HeckeElem r;
    for (const auto& [g, coeff] : x.terms) {
        Poly p = c * coeff;
        if (!p.is_zero()) r.terms.emplace(g, p);
    }
    return r;
}

HeckeElem HeckeAlgebra::apply_lambda(int gen, const HeckeElem& h) const {
    const ProPElem ns = group_->lift_ns(gen);
    HeckeElem out;
    for (const auto& [g, c] : h.terms) {
        ProPElem nsg = group_->mul(ns, g);
        if (!group_->weyl().left_descent(g.w, gen)) {
            add_term(out, nsg, c);
        } else {
            add_term(out, nsg, c * params_.a[gen]);
            for (const auto& [t, beta] : params_.b[gen]) {
                ProPElem tg = group_->mul(group_->from_t(t), g);
                add_term(out, tg, c * beta);
            }
        }
    }
    return out;
}

HeckeElem HeckeAlgebra::apply_rho(int gen, const HeckeElem& h) const {
    const ProPElem ns = group_->lift_ns(gen);
    HeckeElem out;
    for (const auto& [g, c] : h.terms) {
        ProPElem gns = group_->mul(g, ns);
        if (!group_->weyl().right_descent(g.w, gen)) {
            add_term(out, gns, c);
        } else {
            add_term(out, gns, c * params_.a[gen]);
            // T_g b_s = g(b_s) T_g
            RT moved = rt_action(g.w, params_.b[gen]);
            for (const auto& [t, beta] : moved) {
                ProPElem tg = group_->mul(group_->from_t(t), g);
                add_term(out, tg, c * beta);
            }
        }
    }
    return out;
}

HeckeElem HeckeAlgebra::basis_mul(const ProPElem& g, const HeckeElem& y) const {
    // T_g . y via the left recursion: peel a reduced word of g and chain the
    // generator action over the whole right element
    std::vector<int> letters;
    ProPElem rest = g;
    while (group_->length(rest) > 0) {
        int s = -1;
        for (int i = 0; i < group_->weyl().num_generators(); ++i)
            if (group_->weyl().left_descent(rest.w, i)) { s = i; break; }
        if (s < 0) throw std::logic_error("no descent on an element of positive length");
        letters.push_back(s);
        rest = group_->mul(group_->inv(group_->lift_ns(s)), rest);
    }
    HeckeElem acc;
    for (const auto& [h, d] : y.terms) acc.terms.emplace(group_->mul(rest, h), d);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        acc = apply_lambda(*it, acc);
    return acc;
}

HeckeElem HeckeAlgebra::mul(const HeckeElem& x, const HeckeElem& y) const {
    check_ring(x);
    check_ring(y);
    HeckeElem out;
    for (const auto& [g, c] : x.terms) {
        HeckeElem part = basis_mul(g, y);
        for (const auto& [k, e] : part.terms) add_term(out, k, c * e);
    }
    return out;
}

HeckeElem HeckeAlgebra::mul_right_oracle(const HeckeElem& x, const HeckeElem& y) const {
    check_ring(x);
    check_ring(y);
    HeckeElem out;
    for (const auto& [h, d] : y.terms) {
        // peel the right factor from its right end
        std::vector<int> letters;
        ProPElem rest = h;
        while (group_->length(rest) > 0) {
            int s = -1;
            for (int i = 0; i < group_->weyl().num_generators(); ++i)
                if (group_->weyl().right_descent(rest.w, i)) { s = i; break; }
            letters.push_back(s);
            rest = group_->mul(rest, group_->inv(group_->lift_ns(s)));
        }
        HeckeElem acc;
        for (const auto& [g, c] : x.terms) acc.terms.emplace(group_->mul(g, rest), c);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            acc = apply_rho(*it, acc);
        for (const auto& [k, e] : acc.terms) add_term(out, k, d * e);
    }
    return out;
}

RT HeckeAlgebra::rt_mul(const RT& x, const RT& y) const {
    RT out;
    const TorusData& T = group_->torus();
    for (const auto& [t1, c1] : x)
        for (const auto& [t2, c2] : y) {
            TElem t = T.add(t1, t2);
            auto it = out.find(t);
            if (it == out.end()) out.emplace(t, c1 * c2);
            else it->second += c1 * c2;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

RT HeckeAlgebra::rt_action(const WElem& w, const RT& b) const {
    RT out;
    for (const auto& [t, c] : b) {
        TElem moved = group_->torus_action(w, t);
        auto it = out.find(moved);
        if (it == out.end()) out.emplace(std::move(moved), c);
        else it->second += c;
    }
    return out;
}

RT HeckeAlgebra::rt_shift(const TElem& t, const RT& b) const {
    RT out;
    const TorusData& T = group_->torus();
    for (const auto& [s, c] : b) out.emplace(T.add(t, s), c);
    return out;
}

bool HeckeAlgebra::rt_equal(const RT& x, const RT& y) const {
    auto clean = [](const RT& r) {
        RT out;
        for (const auto& [t, c] : r)
            if (!c.is_zero()) out.emplace(t, c);
        return out;
    };
    return clean(x) == clean(y);
}

HeckeElem HeckeAlgebra::inv_generator(int gen) const {
    if (!params_.a[gen].is_unit())
        throw std::domain_error("non-invertible parameter a for generator " +
                                std::to_string(gen));
    Poly ainv = params_.a[gen].inverse();
    ProPElem ns = group_->lift_ns(gen);
    ProPElem nsi = group_->inv(ns);
    ProPElem nsi2 = group_->mul(nsi, nsi);
    HeckeElem out = basis(nsi);
    for (const auto& [t, beta] : params_.b[gen]) {
        ProPElem tg = group_->mul(group_->from_t(t), nsi2);
        add_term(out, tg, -beta);
    }
    return scale(ainv, out);
}

HeckeElem HeckeAlgebra::inv_basis(const ProPElem& g) const {
    auto word = group_->weyl().reduced_word(g.w);
    // g = n_{s_1} ... n_{s_r} omega with omega of length zero
    ProPElem rest = g;
    std::vector<int> letters;
    for (int s : word.letters) {
        letters.push_back(s);
        rest = group_->mul(group_->inv(group_->lift_ns(s)), rest);
    }
    HeckeElem out = basis(group_->inv(rest));
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out = mul(out, inv_generator(*it));
    return out;
}

std::vector<ProPElem> HeckeAlgebra::support(const HeckeElem& h) const {
    std::vector<ProPElem> out;
    for (const auto& [g, c] : h.terms) out.push_back(g);
    return out;
}

bool HeckeAlgebra::is_central(const HeckeElem& h) const {
    for (const ProPElem& g : group_->group_generators()) {
        HeckeElem tg = basis(g);
        if (!(mul(h, tg) == mul(tg, h))) return false;
    }
    return true;
}

namespace {

std::string welem_brief(const WElem& w) {
    std::ostringstream out;
    out << "x=[";
    for (std::size_t i = 0; i < w.x.size(); ++i) out << (i ? "," : "") << w.x[i];
    out << "]";
    return out.str();
}

}  // namespace

ParamsReport HeckeAlgebra::validate_params() const {
    ParamsReport report;
    const WeylGroup& W = group_->weyl();
    const TorusData& T = group_->torus();
    int ng = W.num_generators();

    // (i) a constant on conjugacy classes
    for (int i = 0; i < ng; ++i)
        for (int j = i + 1; j < ng; ++j) {
            if (W.class_of_generator(i) != W.class_of_generator(j)) continue;
            if (!(params_.a[i] == params_.a[j])) {
                report.ok = false;
                report.failures.push_back("clause (i): a differs on conjugate generators " +
                                          std::to_string(i) + "," + std::to_string(j));
            }
        }

    // (ii) s(t) t^-1 b_s = b_s for every torus generator t
    for (int i = 0; i < ng; ++i) {
        for (std::size_t k = 0; k < T.size(); ++k) {
            if (T.moduli[k] == 1) continue;
            TElem t = T.generator(k);
            TElem delta = T.add(group_->torus_action(W.generator(i), t), T.neg(t));
            if (!rt_equal(rt_shift(delta, params_.b[i]), params_.b[i])) {
                report.ok = false;
                report.failures.push_back("clause (ii): generator " + std::to_string(i) +
                                          " fails s(t)t^-1 b = b at torus generator " +
                                          std::to_string(k));
            }
        }
    }

    // (iii) transport between conjugate generators, witnesses by bounded search
    auto witnesses = [&](int i, int j) {
        std::vector<WElem> cands;
        if (W.has_omega()) {
            WElem u = *W.omega_generator();
            WElem acc = W.identity();
            int n = W.num_generators();
            for (int p = 0; p < 2 * n; ++p) {
                cands.push_back(acc);
                acc = W.mul(acc, u);
            }
            acc = W.inv(u);
            for (int p = 0; p < 2 * n; ++p) {
                cands.push_back(acc);
                acc = W.mul(acc, W.inv(u));
            }
        }
        // short generator words
        std::set<WElem> ball{W.identity()};
        std::vector<WElem> frontier{W.identity()};
        for (int step = 0; step < 3; ++step) {
            std::vector<WElem> next;
            for (const auto& v : frontier)
                for (int s = 0; s < W.num_generators(); ++s) {
                    WElem nv = W.mul(v, W.generator(s));
                    if (ball.insert(nv).second) next.push_back(nv);
                }
            frontier = std::move(next);
        }
        cands.insert(cands.end(), ball.begin(), ball.end());
        std::vector<WElem> found;
        for (const auto& w : cands)
            if (W.mul(W.generator(i), w) == W.mul(w, W.generator(j))) found.push_back(w);
        return found;
    };
    for (int i = 0; i < ng; ++i) {
        for (int j = i; j < ng; ++j) {
            if (W.class_of_generator(i) != W.class_of_generator(j)) continue;
            auto ws = witnesses(i, j);
            // bounded search: an empty witness list leaves the clause vacuous
            if (ws.empty()) continue;
            for (const auto& w : ws) {
                ProPElem lift = group_->from_w(w);
                ProPElem tor = group_->mul(
                    group_->mul(group_->lift_ns(i), lift),
                    group_->inv(group_->mul(lift, group_->lift_ns(j))));
                // n_s w n_t^-1 w^-1 must be a torus element
                if (!(tor.w == W.identity()))
                    throw std::logic_error("transport witness does not normalize");
                RT rhs = rt_shift(tor.t, rt_action(w, params_.b[j]));
                if (!rt_equal(rhs, params_.b[i])) {
                    report.ok = false;
                    report.failures.push_back(
                        "clause (iii): transport fails for generators " + std::to_string(i) +
                        "," + std::to_string(j) + " with witness " + welem_brief(w));
                    break;
                }
            }
        }
    }
    return report;
}

}  // namespace phecke
