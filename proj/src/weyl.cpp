#include "phecke/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace phecke {

namespace {

long long vec_sum(const IntVec& v) {
    long long s = 0;
    for (long long e : v) s += e;
    return s;
}

long long vec_gcd(const IntVec& v) {
    long long g = 0;
    for (long long e : v) g = std::gcd(g, std::abs(e));
    return g;
}

}  // namespace

WeylGroup::WeylGroup(RootDatum datum) : datum_(std::move(datum)) {
    datum_.validate();
    p0_ = base_point(datum_);
    w0_ = finite_weyl_elements(datum_);
    build_generators();
    build_classes();
    build_floor_tables();
}

void WeylGroup::build_floor_tables() {
    std::size_t nroots = datum_.positive_roots.size();
    base_floor_.resize(nroots);
    for (std::size_t a = 0; a < nroots; ++a)
        base_floor_[a] = eval_covector(datum_.positive_roots[a], p0_).floor();
    floors_.resize(w0_.size(), std::vector<long long>(nroots));
    for (std::size_t i = 0; i < w0_.size(); ++i) {
        finite_pos_.emplace(w0_[i], static_cast<int>(i));
        Point q = w0_[i].apply(p0_);
        for (std::size_t a = 0; a < nroots; ++a)
            floors_[i][a] = eval_covector(datum_.positive_roots[a], q).floor();
    }
}

void WeylGroup::build_generators() {
    // index 0 is the affine generator s_0 = s_{-highest,1}
    const IntVec& top = datum_.positive_roots[datum_.highest];
    const IntVec& topv = datum_.coroots[datum_.highest];
    WElem s0;
    s0.sigma = Mat::reflection(top, topv);
    s0.x = topv;  // s_{-top,1}: translation by top coroot after the linear flip
    gen_.push_back(s0);
    for (int s : datum_.simple) {
        WElem g;
        g.x = IntVec(datum_.rank, 0);
        g.sigma = Mat::reflection(datum_.positive_roots[s], datum_.coroots[s]);
        gen_.push_back(g);
    }
    if (datum_.is_gln) {
        int n = datum_.rank;
        WElem u;
        u.x = IntVec(n, 0);
        u.x[n - 1] = 1;  // tau^{e_n}
        std::vector<int> images(n);
        for (int i = 1; i < n; ++i) images[i] = i - 1;  // i -> i-1, 0 -> n-1 (0-based)
        images[0] = n - 1;
        u.sigma = Mat::from_permutation(images);
        omega_u_ = u;
    }
}

void WeylGroup::build_classes() {
    // W0 orbits of positive roots up to sign
    std::size_t m = datum_.positive_roots.size();
    root_orbit_.assign(m, -1);
    root_gcd_.resize(m);
    for (std::size_t i = 0; i < m; ++i) root_gcd_[i] = vec_gcd(datum_.positive_roots[i]);
    int next_orbit = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (root_orbit_[i] >= 0) continue;
        int id = next_orbit++;
        for (const Mat& w : w0_) {
            IntVec beta = w.apply_covector(datum_.positive_roots[i]);
            IntVec neg(beta.size());
            for (std::size_t t = 0; t < beta.size(); ++t) neg[t] = -beta[t];
            int j = datum_.root_index(beta);
            if (j < 0) j = datum_.root_index(neg);
            if (j >= 0) root_orbit_[j] = id;
        }
    }
    gen_class_.resize(gen_.size());
    for (std::size_t i = 0; i < gen_.size(); ++i) {
        ClassKey key = class_key(wall_of_generator(static_cast<int>(i)));
        auto it = std::find_if(class_reps_.begin(), class_reps_.end(),
                               [&](const ClassKey& c) { return !(c < key) && !(key < c); });
        if (it == class_reps_.end()) {
            class_reps_.push_back(key);
            gen_class_[i] = static_cast<int>(class_reps_.size()) - 1;
        } else {
            gen_class_[i] = static_cast<int>(it - class_reps_.begin());
        }
    }
}

WeylGroup::ClassKey WeylGroup::class_key(const Hyperplane& h) const {
    long long g = root_gcd_[h.alpha];
    long long k = ((h.k % g) + g) % g;
    long long nk = (g - k) % g;
    return ClassKey{root_orbit_[h.alpha], std::min(k, nk)};
}

int WeylGroup::hyperplane_class(const Hyperplane& h) const {
    ClassKey key = class_key(h);
    for (std::size_t i = 0; i < class_reps_.size(); ++i)
        if (!(class_reps_[i] < key) && !(key < class_reps_[i])) return static_cast<int>(i);
    throw std::logic_error("hyperplane outside the generator classes");
}

Mat WeylGroup::class_transporter(const Hyperplane& h) const {
    int cls = hyperplane_class(h);
    // generator wall representative of the class
    int rep_gen = -1;
    for (std::size_t i = 0; i < gen_.size(); ++i)
        if (gen_class_[i] == cls) { rep_gen = static_cast<int>(i); break; }
    Hyperplane rep = wall_of_generator(rep_gen);
    const IntVec& alpha_rep = datum_.positive_roots[rep.alpha];
    const IntVec& alpha = datum_.positive_roots[h.alpha];
    IntVec neg(alpha.size());
    for (std::size_t t = 0; t < alpha.size(); ++t) neg[t] = -alpha[t];
    for (const Mat& w : w0_) {
        IntVec image = w.apply_covector(alpha_rep);
        if (image == alpha || image == neg) return w;
    }
    throw std::logic_error("no transporter for hyperplane class");
}

int WeylGroup::finite_index(const Mat& m) const {
    for (std::size_t i = 0; i < w0_.size(); ++i)
        if (w0_[i] == m) return static_cast<int>(i);
    return -1;
}

WElem WeylGroup::identity() const {
    return WElem{IntVec(datum_.rank, 0), Mat::identity(datum_.rank)};
}

WElem WeylGroup::translation(const IntVec& x) const {
    if (x.size() != static_cast<std::size_t>(datum_.rank))
        throw std::invalid_argument("translation vector has wrong rank");
    return WElem{x, Mat::identity(datum_.rank)};
}

WElem WeylGroup::from_finite(const Mat& m) const {
    return WElem{IntVec(datum_.rank, 0), m};
}

WElem WeylGroup::mul(const WElem& a, const WElem& b) const {
    IntVec x = a.sigma.apply(b.x);
    for (int i = 0; i < datum_.rank; ++i) x[i] += a.x[i];
    return WElem{std::move(x), a.sigma * b.sigma};
}

WElem WeylGroup::inv(const WElem& a) const {
    Mat si = a.sigma.inverse();
    IntVec x = si.apply(a.x);
    for (auto& e : x) e = -e;
    return WElem{std::move(x), std::move(si)};
}

Point WeylGroup::act(const WElem& w, const Point& p) const {
    Point q = w.sigma.apply(p);
    for (int i = 0; i < datum_.rank; ++i) q[i] += Rat(w.x[i]);
    return q;
}

IntVec WeylGroup::act_xvec(const WElem& w, const IntVec& v) const { return w.sigma.apply(v); }

long long WeylGroup::length(const WElem& w) const {
    auto it = finite_pos_.find(w.sigma);
    if (it == finite_pos_.end()) return length_at(w, p0_);
    const auto& row = floors_[it->second];
    long long len = 0;
    for (std::size_t a = 0; a < datum_.positive_roots.size(); ++a) {
        long long v = eval_covector_int(datum_.positive_roots[a], w.x) + row[a];
        len += std::abs(v - base_floor_[a]);
    }
    return len;
}

long long WeylGroup::length_at(const WElem& w, const Point& probe) const {
    Point q = act(w, probe);
    long long len = 0;
    for (const auto& alpha : datum_.positive_roots)
        len += std::abs(eval_covector(alpha, q).floor() - eval_covector(alpha, probe).floor());
    return len;
}

HyperplaneSet WeylGroup::separating(const WElem& a, const WElem& b) const {
    return separating_at(a, b, p0_);
}

HyperplaneSet WeylGroup::separating_at(const WElem& a, const WElem& b,
                                       const Point& probe) const {
    HyperplaneSet out;
    auto ia = finite_pos_.find(a.sigma);
    auto ib = finite_pos_.find(b.sigma);
    if (&probe == &p0_ && ia != finite_pos_.end() && ib != finite_pos_.end()) {
        for (std::size_t i = 0; i < datum_.positive_roots.size(); ++i) {
            long long fa = eval_covector_int(datum_.positive_roots[i], a.x) +
                           floors_[ia->second][i];
            long long fb = eval_covector_int(datum_.positive_roots[i], b.x) +
                           floors_[ib->second][i];
            // walls of type i between the two alcoves: k with
            // min(f)+1 <= -k <= max(f), i.e. -max(f) <= k <= -min(f)-1
            long long lo = std::min(fa, fb), hi = std::max(fa, fb);
            for (long long k = -hi; k <= -lo - 1; ++k)
                out.insert(Hyperplane{static_cast<int>(i), k});
        }
        return out;
    }
    Point pa = act(a, probe), pb = act(b, probe);
    for (std::size_t i = 0; i < datum_.positive_roots.size(); ++i) {
        Rat va = eval_covector(datum_.positive_roots[i], pa);
        Rat vb = eval_covector(datum_.positive_roots[i], pb);
        Rat lo = va < vb ? va : vb;
        Rat hi = va < vb ? vb : va;
        // integers k with lo + k < 0 < hi + k
        long long kmin = (-hi).floor() + 1;
        long long kmax = (-lo).floor();
        for (long long k = kmin; k <= kmax; ++k)
            out.insert(Hyperplane{static_cast<int>(i), k});
    }
    return out;
}

HyperplaneSet WeylGroup::double_crossings(const WElem& a, const WElem& b) const {
    HyperplaneSet first = separating(identity(), a);
    HyperplaneSet second = separating(a, mul(a, b));
    HyperplaneSet out;
    std::set_intersection(first.begin(), first.end(), second.begin(), second.end(),
                          std::inserter(out, out.begin()));
    return out;
}

Hyperplane WeylGroup::wall_of_generator(int gen_index) const {
    if (gen_index == 0) return Hyperplane{datum_.highest, -1};
    return Hyperplane{datum_.simple[gen_index - 1], 0};
}

Hyperplane WeylGroup::crossing_wall(const WElem& w, int gen_index) const {
    return hyperplane_action(w, wall_of_generator(gen_index));
}

Hyperplane WeylGroup::hyperplane_action(const WElem& w, const Hyperplane& h) const {
    IntVec beta = w.sigma.apply_covector(datum_.positive_roots[h.alpha]);
    long long k = h.k - eval_covector_int(beta, w.x);
    int idx = datum_.root_index(beta);
    if (idx >= 0) return Hyperplane{idx, k};
    IntVec neg(beta.size());
    for (std::size_t t = 0; t < beta.size(); ++t) neg[t] = -beta[t];
    idx = datum_.root_index(neg);
    if (idx < 0) throw std::logic_error("hyperplane image not a root");
    return Hyperplane{idx, -k};
}

WElem WeylGroup::reflection(const Hyperplane& h) const {
    const IntVec& alpha = datum_.positive_roots[h.alpha];
    const IntVec& coroot = datum_.coroots[h.alpha];
    WElem r;
    r.sigma = Mat::reflection(alpha, coroot);
    r.x.resize(datum_.rank);
    for (int i = 0; i < datum_.rank; ++i) r.x[i] = -h.k * coroot[i];
    return r;
}

bool WeylGroup::left_descent(const WElem& w, int gen_index) const {
    Hyperplane h = wall_of_generator(gen_index);
    const IntVec& alpha = datum_.positive_roots[h.alpha];
    auto it = finite_pos_.find(w.sigma);
    if (it != finite_pos_.end()) {
        // sign of alpha(p)+k with alpha(p) non-integral: positive iff
        // floor(alpha(p)) + k >= 0
        bool pos0 = base_floor_[h.alpha] + h.k >= 0;
        long long fl = eval_covector_int(alpha, w.x) + floors_[it->second][h.alpha];
        bool pos1 = fl + h.k >= 0;
        return pos0 != pos1;
    }
    Rat v0 = eval_covector(alpha, p0_) + Rat(h.k);
    Rat v1 = eval_covector(alpha, act(w, p0_)) + Rat(h.k);
    return v0.sign() != v1.sign();
}

bool WeylGroup::right_descent(const WElem& w, int gen_index) const {
    return left_descent(inv(w), gen_index);
}

WeylGroup::ReducedWord WeylGroup::reduced_word(const WElem& w) const {
    ReducedWord out;
    WElem rest = w;
    long long len = length(rest);
    while (len > 0) {
        int chosen = -1;
        for (int i = 0; i < num_generators(); ++i) {
            if (left_descent(rest, i)) { chosen = i; break; }
        }
        if (chosen < 0)
            throw std::logic_error("no descent on an element of positive length");
        out.letters.push_back(chosen);
        rest = mul(gen_[chosen], rest);
        long long next = length(rest);
        if (next != len - 1)
            throw std::logic_error("descent did not reduce length");
        len = next;
    }
    out.omega = rest;
    if (datum_.is_gln) out.m = vec_sum(rest.x);
    return out;
}

std::vector<std::vector<int>> WeylGroup::all_reduced_words(const WElem& w) const {
    std::vector<std::vector<int>> out;
    long long len = length(w);
    if (len == 0) {
        out.push_back({});
        return out;
    }
    for (int i = 0; i < num_generators(); ++i) {
        if (!left_descent(w, i)) continue;
        auto tails = all_reduced_words(mul(gen_[i], w));
        for (auto& t : tails) {
            std::vector<int> word;
            word.reserve(t.size() + 1);
            word.push_back(i);
            word.insert(word.end(), t.begin(), t.end());
            out.push_back(std::move(word));
        }
    }
    return out;
}

WElem WeylGroup::word_to_elem(const std::vector<int>& letters, const WElem& omega) const {
    WElem w = identity();
    for (int i : letters) w = mul(w, gen_[i]);
    return mul(w, omega);
}

std::pair<WElem, long long> WeylGroup::omega_decompose(const WElem& w) const {
    if (!datum_.is_gln)
        throw std::domain_error("omega decomposition requires the GL_n datum");
    long long m = vec_sum(w.x);
    WElem u = *omega_u_;
    WElem um = identity();
    long long steps = std::abs(m);
    WElem factor = m >= 0 ? inv(u) : u;
    for (long long i = 0; i < steps; ++i) um = mul(um, factor);
    return {mul(w, um), m};
}

bool WeylGroup::bruhat_lt(const WElem& a, const WElem& b) const {
    ReducedWord ra = reduced_word(a);
    ReducedWord rb = reduced_word(b);
    if (!(ra.omega == rb.omega)) return false;
    long long la = static_cast<long long>(ra.letters.size());
    long long lb = static_cast<long long>(rb.letters.size());
    if (la >= lb) return false;
    WElem a_aff = word_to_elem(ra.letters, identity());
    std::size_t r = rb.letters.size();
    for (std::uint64_t mask = 0; mask < (1ull << r); ++mask) {
        if (__builtin_popcountll(mask) != la) continue;
        WElem prod = identity();
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (1ull << i)) prod = mul(prod, gen_[rb.letters[i]]);
        if (prod == a_aff) return true;
    }
    return false;
}

std::optional<int> WeylGroup::coxeter_order(int i, int j, int bound) const {
    WElem st = mul(gen_[i], gen_[j]);
    WElem acc = st;
    for (int m = 1; m <= bound; ++m) {
        if (acc == identity()) return m;
        acc = mul(acc, st);
    }
    return std::nullopt;
}

int WeylGroup::chamber_sign(const Mat& d, int alpha_index) const {
    Point q = d.apply(p0_);
    return eval_covector(datum_.positive_roots[alpha_index], q).sign();
}

namespace {

// integer kernel basis of the matrix with the given rows, by unimodular
// column operations
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, int ncols) {
    std::vector<IntVec> work = rows;
    std::vector<IntVec> u(ncols, IntVec(ncols, 0));
    for (int i = 0; i < ncols; ++i) u[i][i] = 1;
    auto col_swap = [&](int a, int b) {
        for (auto& r : work) std::swap(r[a], r[b]);
        std::swap(u[a], u[b]);
    };
    auto col_addmul = [&](int dst, int src, long long f) {
        for (auto& r : work) r[dst] += f * r[src];
        for (int i = 0; i < ncols; ++i) u[dst][i] += f * u[src][i];
    };
    auto col_neg = [&](int c) {
        for (auto& r : work) r[c] = -r[c];
        for (int i = 0; i < ncols; ++i) u[c][i] = -u[c][i];
    };
    int lead = 0;
    for (std::size_t row = 0; row < work.size() && lead < ncols; ++row) {
        // euclidean elimination across columns lead..ncols-1 on this row
        while (true) {
            int piv = -1;
            for (int c = lead; c < ncols; ++c)
                if (work[row][c] != 0 && (piv < 0 || std::abs(work[row][c]) <
                                                         std::abs(work[row][piv])))
                    piv = c;
            if (piv < 0) break;
            col_swap(lead, piv);
            if (work[row][lead] < 0) col_neg(lead);
            bool clean = true;
            for (int c = lead + 1; c < ncols; ++c) {
                if (work[row][c] == 0) continue;
                long long q = work[row][c] / work[row][lead];
                col_addmul(c, lead, -q);
                if (work[row][c] != 0) clean = false;
            }
            if (clean) { ++lead; break; }
        }
    }
    std::vector<IntVec> kernel;
    for (int c = lead; c < ncols; ++c) {
        IntVec v(ncols);
        for (int i = 0; i < ncols; ++i) v[i] = u[c][i];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

bool preceq(const std::vector<long long>& x, const std::vector<long long>& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] * (y[i] - x[i]) < 0) return false;
    return true;
}

}  // namespace

WeylGroup::DominantMonoid WeylGroup::dominant_monoid_generators(const Mat& d,
                                                                long long box) const {
    std::size_t nroots = datum_.positive_roots.size();
    std::vector<int> eps(nroots);
    for (std::size_t i = 0; i < nroots; ++i) eps[i] = chamber_sign(d, static_cast<int>(i));

    auto nu_of = [&](const IntVec& x) {
        std::vector<long long> v(nroots);
        for (std::size_t i = 0; i < nroots; ++i)
            v[i] = eval_covector_int(datum_.positive_roots[i], x);
        return v;
    };
    auto in_cone = [&](const std::vector<long long>& v) {
        for (std::size_t i = 0; i < nroots; ++i)
            if (eps[i] * v[i] < 0) return false;
        return true;
    };

    // enumerate the box
    std::vector<IntVec> cone_points;
    std::map<std::vector<long long>, IntVec> reps;
    IntVec x(datum_.rank, -box);
    while (true) {
        auto v = nu_of(x);
        if (in_cone(v)) {
            cone_points.push_back(x);
            auto it = reps.find(v);
            if (it == reps.end() || x < it->second) reps[v] = x;
        }
        int i = 0;
        for (; i < datum_.rank; ++i) {
            if (x[i] < box) { ++x[i]; break; }
            x[i] = -box;
        }
        if (i == datum_.rank) break;
    }

    // minimal nonzero nu-values under the componentwise order
    std::vector<std::vector<long long>> values;
    for (const auto& [v, rep] : reps) {
        if (std::all_of(v.begin(), v.end(), [](long long e) { return e == 0; })) continue;
        values.push_back(v);
    }
    DominantMonoid out;
    std::vector<std::vector<long long>> minimal_values;
    for (const auto& v : values) {
        bool is_min = true;
        for (const auto& w : values) {
            if (w == v) continue;
            if (preceq(w, v)) { is_min = false; break; }
        }
        if (is_min) {
            minimal_values.push_back(v);
            out.minimal.push_back(reps.at(v));
        }
    }
    out.kernel_basis = integer_kernel(datum_.positive_roots, datum_.rank);

    // verify generation: every cone point in the box decomposes as an
    // N-combination of minimal values plus a kernel element
    std::map<std::vector<long long>, bool> memo;
    std::function<bool(std::vector<long long>)> decompose =
        [&](std::vector<long long> v) -> bool {
        if (std::all_of(v.begin(), v.end(), [](long long e) { return e == 0; })) return true;
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        memo[v] = false;  // cut cycles
        for (const auto& m : minimal_values) {
            if (!preceq(m, v)) continue;
            std::vector<long long> rest(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) rest[i] = v[i] - m[i];
            if (decompose(rest)) { memo[v] = true; return true; }
        }
        return false;
    };
    for (const auto& p : cone_points) {
        if (!decompose(nu_of(p)))
            throw std::runtime_error("dominant monoid generators: increase bound");
    }
    return out;
}

}  // namespace phecke
