#pragma once

#include <map>
#include <vector>

#include "phecke/poly.hpp"
#include "phecke/propcox.hpp"

namespace phecke {

// Orientation of W (and of W^(1) through the projection): a sign for every
// wall crossing, satisfying the crossing-flip and rank-2 loop conditions.
// Chamber kind points towards a fixed alcove, spherical kind towards a Weyl
// chamber at infinity; both compose with a right shift and an opposite flip.
class Orientation {
public:
    enum class Kind { Chamber, Spherical };

    static Orientation chamber(const WElem& towards);
    static Orientation spherical(const Mat& d);  // D = d(D0)

    Kind kind() const { return kind_; }
    const WElem& chamber_target() const { return chamber_; }
    const Mat& spherical_index() const { return d_; }
    bool is_opposite() const { return opposite_; }
    const std::vector<WElem>& shifts() const { return shifts_; }

    Orientation acted(const WElem& g) const;   // o . g
    Orientation opposite() const;

    // sign of the crossing (w, ws); ProPElem arguments factor through W
    int eval(const WeylGroup& W, const WElem& w, int gen_index) const;
    int eval(const ProPGroup& G, const ProPElem& w, int gen_index) const;
    // sign attached to crossing h away from the side containing `side`
    int eval_h(const WeylGroup& W, const Hyperplane& h, const Point& side) const;

private:
    Kind kind_ = Kind::Chamber;
    WElem chamber_;
    Mat d_;
    bool opposite_ = false;
    std::vector<WElem> shifts_;  // applied innermost-first on evaluation
};

// Formal multiset of walls with positive multiplicities.
struct FormalMultiset {
    std::map<Hyperplane, long long> counts;

    void add(const Hyperplane& h, long long mult = 1);
    FormalMultiset operator+(const FormalMultiset& o) const;
    bool operator==(const FormalMultiset& o) const { return counts == o.counts; }
    bool empty() const { return counts.empty(); }
};

FormalMultiset multiset_of(const HyperplaneSet& s);
FormalMultiset act_multiset(const WeylGroup& W, const WElem& w, const FormalMultiset& m);

// walls crossed negatively by a reduced gallery 1 -> w
FormalMultiset gamma_multiset(const WeylGroup& W, const Orientation& o, const WElem& w);
// all walls separating 1 and w (generalized length)
FormalMultiset big_l(const WeylGroup& W, const WElem& w);
// walls crossed twice by the concatenation through w
FormalMultiset big_x(const WeylGroup& W, const WElem& w, const WElem& w2);

// product of the class parameters over a multiset
Poly bar_multiset(const WeylGroup& W, const FormalMultiset& m,
                  const std::map<int, Poly>& class_params, const VarTablePtr& vars);

// certify o . s_H = o' at every wall of separating(1, w) where o, o' disagree,
// probing a ball around the relevant walls
bool adjacent_on(const WeylGroup& W, const Orientation& o, const Orientation& o2,
                 const WElem& w);

// all orientations of the finite Coxeter group W0 with generators S0, as
// tables indexed by (element index, generator index); feasible for tiny W0
struct FiniteOrientationTable {
    std::vector<std::vector<int>> signs;  // [element][generator]
    int towards = -1;                     // index of the matching chamber element
};
std::vector<FiniteOrientationTable> enumerate_finite_orientations(const RootDatum& d);

}  // namespace phecke
