#include "phecke/orientation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace phecke {

Orientation Orientation::chamber(const WElem& towards) {
    Orientation o;
    o.kind_ = Kind::Chamber;
    o.chamber_ = towards;
    return o;
}

Orientation Orientation::spherical(const Mat& d) {
    Orientation o;
    o.kind_ = Kind::Spherical;
    o.d_ = d;
    return o;
}

Orientation Orientation::acted(const WElem& g) const {
    Orientation o = *this;
    o.shifts_.push_back(g);
    return o;
}

Orientation Orientation::opposite() const {
    Orientation o = *this;
    o.opposite_ = !o.opposite_;
    return o;
}

int Orientation::eval_h(const WeylGroup& W, const Hyperplane& h, const Point& side) const {
    Hyperplane cur = h;
    Point pt = side;
    // a shift o.g evaluates o at the translated crossing
    for (auto it = shifts_.rbegin(); it != shifts_.rend(); ++it) {
        cur = W.hyperplane_action(*it, cur);
        pt = W.act(*it, pt);
    }
    const IntVec& alpha = W.datum().positive_roots[cur.alpha];
    int source = (eval_covector(alpha, pt) + Rat(cur.k)).sign();
    if (source == 0) throw std::logic_error("orientation probe lies on the wall");
    int sign;
    if (kind_ == Kind::Chamber) {
        Point target = W.act(chamber_, W.base());
        int target_side = (eval_covector(alpha, target) + Rat(cur.k)).sign();
        if (target_side == 0) throw std::logic_error("chamber target on the wall");
        sign = target_side == source ? -1 : 1;
    } else {
        int eps = W.chamber_sign(d_, cur.alpha);
        sign = -source * eps;
    }
    return opposite_ ? -sign : sign;
}

int Orientation::eval(const WeylGroup& W, const WElem& w, int gen_index) const {
    Hyperplane h = W.crossing_wall(w, gen_index);
    return eval_h(W, h, W.act(w, W.base()));
}

int Orientation::eval(const ProPGroup& G, const ProPElem& w, int gen_index) const {
    return eval(G.weyl(), w.w, gen_index);
}

void FormalMultiset::add(const Hyperplane& h, long long mult) {
    if (mult == 0) return;
    auto it = counts.find(h);
    if (it == counts.end()) {
        counts.emplace(h, mult);
        return;
    }
    it->second += mult;
    if (it->second == 0) counts.erase(it);
    else if (it->second < 0) throw std::logic_error("negative wall multiplicity");
}

FormalMultiset FormalMultiset::operator+(const FormalMultiset& o) const {
    FormalMultiset r = *this;
    for (const auto& [h, m] : o.counts) r.add(h, m);
    return r;
}

FormalMultiset multiset_of(const HyperplaneSet& s) {
    FormalMultiset m;
    for (const auto& h : s) m.add(h);
    return m;
}

FormalMultiset act_multiset(const WeylGroup& W, const WElem& w, const FormalMultiset& m) {
    FormalMultiset r;
    for (const auto& [h, c] : m.counts) r.add(W.hyperplane_action(w, h), c);
    return r;
}

FormalMultiset gamma_multiset(const WeylGroup& W, const Orientation& o, const WElem& w) {
    auto word = W.reduced_word(w);
    FormalMultiset out;
    WElem prefix = W.identity();
    for (int letter : word.letters) {
        if (o.eval(W, prefix, letter) < 0)
            out.add(W.crossing_wall(prefix, letter));
        prefix = W.mul(prefix, W.generator(letter));
    }
    return out;
}

FormalMultiset big_l(const WeylGroup& W, const WElem& w) {
    return multiset_of(W.separating(W.identity(), w));
}

FormalMultiset big_x(const WeylGroup& W, const WElem& w, const WElem& w2) {
    return multiset_of(W.double_crossings(w, w2));
}

Poly bar_multiset(const WeylGroup& W, const FormalMultiset& m,
                  const std::map<int, Poly>& class_params, const VarTablePtr& vars) {
    Poly out = Poly::constant(vars, Rat(1));
    for (const auto& [h, c] : m.counts) {
        auto it = class_params.find(W.hyperplane_class(h));
        if (it == class_params.end())
            throw std::invalid_argument("no parameter for hyperplane class");
        out *= it->second.pow(static_cast<int>(c));
    }
    return out;
}

bool adjacent_on(const WeylGroup& W, const Orientation& o, const Orientation& o2,
                 const WElem& w) {
    HyperplaneSet walls = W.separating(W.identity(), w);
    // probe crossings over the alcove ball reaching both sides of every
    // separating wall (affine balls grow polynomially, so this stays small)
    std::set<WElem> ball{W.identity()};
    std::vector<WElem> frontier{W.identity()};
    long long radius = W.length(w) + 1;
    for (long long step = 0; step < radius; ++step) {
        std::vector<WElem> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < W.num_generators(); ++i) {
                WElem nv = W.mul(v, W.generator(i));
                if (ball.insert(nv).second) next.push_back(nv);
            }
        }
        frontier = std::move(next);
    }
    for (const Hyperplane& h : walls) {
        if (o.eval_h(W, h, W.base()) == o2.eval_h(W, h, W.base())) continue;
        Orientation moved = o.acted(W.reflection(h));
        for (const auto& v : ball) {
            for (int i = 0; i < W.num_generators(); ++i) {
                if (moved.eval(W, v, i) != o2.eval(W, v, i)) return false;
            }
        }
    }
    return true;
}

namespace {

// finite Coxeter machinery on W0 from the root datum
struct FiniteCox {
    std::vector<Mat> elems;
    std::vector<Mat> gens;
    std::vector<IntVec> pos_roots;  // finite positive system

    explicit FiniteCox(const RootDatum& d) {
        elems = finite_weyl_elements(d);
        for (int s : d.simple)
            gens.push_back(Mat::reflection(d.positive_roots[s], d.coroots[s]));
        pos_roots = d.positive_roots;
    }
    int index(const Mat& m) const {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == m) return static_cast<int>(i);
        throw std::logic_error("element not in finite Weyl group");
    }
    long long length(const Mat& m) const {
        long long l = 0;
        for (const auto& alpha : pos_roots) {
            IntVec image = m.apply_covector(alpha);
            bool positive = false;
            for (const auto& beta : pos_roots)
                if (beta == image) { positive = true; break; }
            if (!positive) ++l;
        }
        return l;
    }
    int order(int i, int j) const {
        Mat p = gens[i] * gens[j];
        Mat acc = p;
        for (int m = 1; m <= 64; ++m) {
            if (acc.is_identity()) return m;
            acc = acc * p;
        }
        throw std::logic_error("finite group generator order overflow");
    }
};

}  // namespace

std::vector<FiniteOrientationTable> enumerate_finite_orientations(const RootDatum& d) {
    FiniteCox W0(d);
    std::size_t ne = W0.elems.size();
    std::size_t ng = W0.gens.size();
    if (ne * ng > 16)
        throw std::runtime_error("orientation enumeration: group too large");

    // cells (w, s) paired by the crossing-flip rule
    std::vector<std::vector<int>> cell(ne, std::vector<int>(ng, -1));
    int ncells = 0;
    for (std::size_t e = 0; e < ne; ++e)
        for (std::size_t g = 0; g < ng; ++g) {
            if (cell[e][g] >= 0) continue;
            int partner = W0.index(W0.elems[e] * W0.gens[g]);
            cell[e][g] = ncells;
            cell[partner][g] = ncells;
            ++ncells;
        }

    std::vector<FiniteOrientationTable> found;
    for (std::uint64_t bits = 0; bits < (1ull << ncells); ++bits) {
        std::vector<std::vector<int>> signs(ne, std::vector<int>(ng));
        for (std::size_t e = 0; e < ne; ++e)
            for (std::size_t g = 0; g < ng; ++g) {
                int base = (bits >> cell[e][g]) & 1 ? 1 : -1;
                // the lexicographically smaller endpoint of the cell carries
                // the raw bit, its partner the negation
                int partner = W0.index(W0.elems[e] * W0.gens[g]);
                bool primary = static_cast<int>(e) < partner;
                signs[e][g] = primary ? base : -base;
            }
        // rank-2 loop condition at every base element
        bool ok = true;
        for (std::size_t a = 0; a < ng && ok; ++a)
            for (std::size_t b = a + 1; b < ng && ok; ++b) {
                int m = W0.order(static_cast<int>(a), static_cast<int>(b));
                for (std::size_t e = 0; e < ne && ok; ++e) {
                    auto seq = [&](std::size_t first, std::size_t second) {
                        std::vector<int> s;
                        Mat cur = W0.elems[e];
                        std::size_t g = first;
                        for (int k = 0; k < m; ++k) {
                            s.push_back(signs[W0.index(cur)][g]);
                            cur = cur * W0.gens[g];
                            g = g == first ? second : first;
                        }
                        return s;
                    };
                    auto pattern_ok = [&](const std::vector<int>& s1,
                                          const std::vector<int>& s2) {
                        // s1 = (k pluses, rest minuses), s2 complementary, or
                        // with the roles of + and - exchanged
                        auto block = [&](const std::vector<int>& s, int lead) {
                            int k = 0;
                            while (k < static_cast<int>(s.size()) && s[k] == lead) ++k;
                            for (int i = k; i < static_cast<int>(s.size()); ++i)
                                if (s[i] != -lead) return -1;
                            return k;
                        };
                        int k1 = block(s1, 1);
                        if (k1 >= 0 && block(s2, -1) == m - k1) return true;
                        int k2 = block(s1, -1);
                        return k2 >= 0 && block(s2, 1) == m - k2;
                    };
                    if (!pattern_ok(seq(a, b), seq(b, a))) ok = false;
                }
            }
        if (!ok) continue;
        FiniteOrientationTable table;
        table.signs = signs;
        // match against a chamber orientation
        for (std::size_t t = 0; t < ne && table.towards < 0; ++t) {
            bool match = true;
            Mat ti = W0.elems[t].inverse();
            for (std::size_t e = 0; e < ne && match; ++e)
                for (std::size_t g = 0; g < ng && match; ++g) {
                    long long l1 = W0.length(ti * (W0.elems[e] * W0.gens[g]));
                    long long l0 = W0.length(ti * W0.elems[e]);
                    int expect = l1 < l0 ? 1 : -1;
                    if (signs[e][g] != expect) match = false;
                }
            if (match) table.towards = static_cast<int>(t);
        }
        found.push_back(std::move(table));
    }
    return found;
}

}  // namespace phecke
