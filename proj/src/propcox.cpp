#include "phecke/propcox.hpp"

#include <stdexcept>

namespace phecke {

bool TorusData::trivial() const {
    for (long long d : moduli)
        if (d != 1) return false;
    return true;
}

TElem TorusData::reduce(TElem t) const {
    if (t.size() != moduli.size()) throw std::invalid_argument("torus element size mismatch");
    for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] %= moduli[i];
        if (t[i] < 0) t[i] += moduli[i];
    }
    return t;
}

TElem TorusData::add(const TElem& a, const TElem& b) const {
    TElem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return reduce(std::move(r));
}

TElem TorusData::neg(const TElem& a) const {
    TElem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return reduce(std::move(r));
}

TElem TorusData::generator(std::size_t i) const {
    TElem t = zero();
    t[i] = 1;
    return reduce(std::move(t));
}

std::vector<TElem> TorusData::elements() const {
    std::vector<TElem> out{zero()};
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        std::vector<TElem> next;
        for (const auto& t : out) {
            for (long long v = 0; v < moduli[i]; ++v) {
                TElem s = t;
                s[i] = v;
                next.push_back(std::move(s));
            }
        }
        out = std::move(next);
        if (out.size() > 10000) throw std::runtime_error("torus too large to enumerate");
    }
    return out;
}

ProPGroup::ProPGroup(WeylGroupPtr weyl, TorusData torus, CocycleData cocycle)
    : weyl_(std::move(weyl)), torus_(std::move(torus)), cocycle_(std::move(cocycle)) {
    for (long long d : torus_.moduli)
        if (d <= 0) throw std::invalid_argument("torus moduli must be positive");
    if (!cocycle_.trivial()) validate_cocycle();
}

void ProPGroup::validate_cocycle() const {
    for (const auto& [cls, value] : cocycle_.class_values) {
        if (cls < 0 || cls >= weyl_->num_classes())
            throw std::invalid_argument("cocycle class out of range");
        if (value.size() != torus_.size())
            throw std::invalid_argument("cocycle value size mismatch");
    }
    // equivariant extension must be single-valued: probe every generator wall
    // image under every finite element against the transporter formula
    for (int g = 0; g < weyl_->num_generators(); ++g) {
        Hyperplane base = weyl_->wall_of_generator(g);
        TElem v0 = cocycle_value(base);
        for (const Mat& m : weyl_->finite_elements()) {
            Hyperplane h = weyl_->hyperplane_action(weyl_->from_finite(m), base);
            TElem expect = torus_.reduce(m.apply(v0));
            if (cocycle_value(h) != expect)
                throw std::invalid_argument("cocycle values are not W-equivariant");
        }
    }
}

TElem ProPGroup::cocycle_value(const Hyperplane& h) const {
    if (cocycle_.trivial()) return torus_.zero();
    int cls = weyl_->hyperplane_class(h);
    auto it = cocycle_.class_values.find(cls);
    TElem base = it == cocycle_.class_values.end() ? torus_.zero() : it->second;
    Mat sigma = weyl_->class_transporter(h);
    return torus_.reduce(sigma.apply(base));
}

TElem ProPGroup::cocycle_factor(const WElem& a, const WElem& b) const {
    if (cocycle_.trivial()) return torus_.zero();
    TElem sum = torus_.zero();
    for (const Hyperplane& h : weyl_->double_crossings(a, b))
        sum = torus_.add(sum, cocycle_value(h));
    return sum;
}

ProPElem ProPGroup::identity() const { return ProPElem{torus_.zero(), weyl_->identity()}; }

ProPElem ProPGroup::from_w(const WElem& w) const { return ProPElem{torus_.zero(), w}; }

ProPElem ProPGroup::from_t(const TElem& t) const {
    return ProPElem{torus_.reduce(t), weyl_->identity()};
}

ProPElem ProPGroup::lift_ns(int gen_index) const {
    return from_w(weyl_->generator(gen_index));
}

ProPElem ProPGroup::omega_lift() const {
    auto u = weyl_->omega_generator();
    if (!u) throw std::domain_error("omega lift requires the GL_n datum");
    return from_w(*u);
}

TElem ProPGroup::torus_action(const WElem& w, const TElem& t) const {
    if (torus_.size() == 0) return t;
    if (w.sigma.n != static_cast<int>(torus_.size()))
        throw std::invalid_argument("torus action: rank mismatch");
    return torus_.reduce(w.sigma.apply(t));
}

TElem ProPGroup::torus_action(const ProPElem& g, const TElem& t) const {
    return torus_action(g.w, t);
}

ProPElem ProPGroup::mul(const ProPElem& a, const ProPElem& b) const {
    TElem t = torus_.add(a.t, torus_action(a.w, b.t));
    if (!cocycle_.trivial()) t = torus_.add(t, cocycle_factor(a.w, b.w));
    return ProPElem{std::move(t), weyl_->mul(a.w, b.w)};
}

ProPElem ProPGroup::inv(const ProPElem& a) const {
    WElem wi = weyl_->inv(a.w);
    TElem t = torus_action(wi, a.t);
    if (!cocycle_.trivial())
        t = torus_.add(t, torus_action(wi, cocycle_factor(a.w, wi)));
    return ProPElem{torus_.neg(t), std::move(wi)};
}

ProPElem ProPGroup::conj(const ProPElem& g, const ProPElem& x) const {
    return mul(mul(g, x), inv(g));
}

bool ProPGroup::validate_braid_lifts() const {
    int ng = weyl_->num_generators();
    for (int i = 0; i < ng; ++i) {
        for (int j = i + 1; j < ng; ++j) {
            auto m = weyl_->coxeter_order(i, j);
            if (!m) continue;
            ProPElem left = identity(), right = identity();
            for (int k = 0; k < *m; ++k) {
                left = mul(left, lift_ns(k % 2 == 0 ? i : j));
                right = mul(right, lift_ns(k % 2 == 0 ? j : i));
            }
            if (!(left == right)) return false;
        }
    }
    return true;
}

std::vector<ProPElem> ProPGroup::group_generators() const {
    std::vector<ProPElem> gens;
    for (int i = 0; i < weyl_->num_generators(); ++i) gens.push_back(lift_ns(i));
    if (weyl_->has_omega()) gens.push_back(omega_lift());
    for (std::size_t i = 0; i < torus_.size(); ++i)
        if (torus_.moduli[i] > 1) gens.push_back(from_t(torus_.generator(i)));
    return gens;
}

}  // namespace phecke
