#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "phecke/rootdata.hpp"

namespace phecke {

// Element of the extended affine Weyl group W = X >| W0, stored as a
// translation vector and a finite part. (x, s)(x', s') = (x + s x', s s').
struct WElem {
    IntVec x;
    Mat sigma;

    bool operator==(const WElem& o) const { return x == o.x && sigma == o.sigma; }
    bool operator!=(const WElem& o) const { return !(*this == o); }
    bool operator<(const WElem& o) const {
        if (x != o.x) return x < o.x;
        return sigma < o.sigma;
    }
};

// H_{alpha,k} = { alpha + k = 0 } with alpha indexed into Phi+.
struct Hyperplane {
    int alpha;
    long long k;

    bool operator==(const Hyperplane& o) const { return alpha == o.alpha && k == o.k; }
    bool operator<(const Hyperplane& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        return k < o.k;
    }
};

using HyperplaneSet = std::set<Hyperplane>;

// Ambient group context: datum, base point, the enumerated finite Weyl group,
// generators S = { s_0, ..., s_{rank Delta} } where index 0 is the affine one.
class WeylGroup {
public:
    explicit WeylGroup(RootDatum datum);

    const RootDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank; }
    const Point& base() const { return p0_; }
    int num_generators() const { return static_cast<int>(gen_.size()); }
    const WElem& generator(int i) const { return gen_[i]; }
    const std::vector<Mat>& finite_elements() const { return w0_; }
    int finite_index(const Mat& m) const;  // position in finite_elements, -1 if absent

    WElem identity() const;
    WElem translation(const IntVec& x) const;
    WElem from_finite(const Mat& m) const;
    WElem mul(const WElem& a, const WElem& b) const;
    WElem inv(const WElem& a) const;
    Point act(const WElem& w, const Point& p) const;
    IntVec act_xvec(const WElem& w, const IntVec& v) const;

    // GL_n only: the canonical length-zero generator u with u s_i u^-1 = s_{i-1}.
    std::optional<WElem> omega_generator() const { return omega_u_; }
    bool has_omega() const { return omega_u_.has_value(); }

    long long length(const WElem& w) const;
    long long length_at(const WElem& w, const Point& probe) const;

    // w = w_aff u^m (GL_n: m is the augmentation of the translation part).
    std::pair<WElem, long long> omega_decompose(const WElem& w) const;

    struct ReducedWord {
        std::vector<int> letters;  // generator indices
        WElem omega;               // length-zero remainder
        long long m = 0;           // omega = u^m when the datum is GL_n
    };
    ReducedWord reduced_word(const WElem& w) const;
    std::vector<std::vector<int>> all_reduced_words(const WElem& w) const;
    WElem word_to_elem(const std::vector<int>& letters, const WElem& omega) const;

    bool left_descent(const WElem& w, int gen_index) const;
    bool right_descent(const WElem& w, int gen_index) const;

    HyperplaneSet separating(const WElem& a, const WElem& b) const;
    HyperplaneSet separating_at(const WElem& a, const WElem& b, const Point& probe) const;
    HyperplaneSet double_crossings(const WElem& a, const WElem& b) const;

    bool bruhat_lt(const WElem& a, const WElem& b) const;

    Hyperplane hyperplane_action(const WElem& w, const Hyperplane& h) const;
    WElem reflection(const Hyperplane& h) const;
    Hyperplane wall_of_generator(int gen_index) const;
    // the wall crossed between w C0 and w s C0
    Hyperplane crossing_wall(const WElem& w, int gen_index) const;

    // W-conjugacy class of a wall, as a small canonical id (index into the
    // class list; classes of the generator walls cover all of them).
    int hyperplane_class(const Hyperplane& h) const;
    int num_classes() const { return static_cast<int>(class_reps_.size()); }
    int class_of_generator(int gen_index) const { return gen_class_[gen_index]; }
    // some finite-part transporter sigma with sigma(class rep wall type) = wall type
    Mat class_transporter(const Hyperplane& h) const;

    // order of generator product s_i s_j, or nullopt when infinite
    std::optional<int> coxeter_order(int i, int j, int bound = 64) const;

    // Weyl chambers D = d(D0), indexed by finite elements; sign of alpha on D.
    int chamber_sign(const Mat& d, int alpha_index) const;

    // minimal monoid generators of the dominant monoid of chamber D within a box
    struct DominantMonoid {
        std::vector<IntVec> minimal;      // representatives of minimal nonzero nu-values
        std::vector<IntVec> kernel_basis; // basis of ker(nu)
    };
    DominantMonoid dominant_monoid_generators(const Mat& d, long long box_bound) const;

private:
    void build_generators();
    void build_classes();
    void build_floor_tables();

    RootDatum datum_;
    Point p0_;
    std::vector<Mat> w0_;
    std::vector<WElem> gen_;
    std::optional<WElem> omega_u_;
    // per positive root: orbit id of +-alpha under W0 (for hyperplane classes)
    std::vector<int> root_orbit_;
    std::vector<long long> root_gcd_;
    struct ClassKey {
        int orbit;
        long long k_mod;
        bool operator<(const ClassKey& o) const {
            if (orbit != o.orbit) return orbit < o.orbit;
            return k_mod < o.k_mod;
        }
    };
    ClassKey class_key(const Hyperplane& h) const;
    std::vector<ClassKey> class_reps_;
    std::vector<int> gen_class_;
    // floor(alpha(sigma p0)) per finite element and positive root, plus the
    // base row: lengths, descents and separations reduce to integer sums
    std::map<Mat, int> finite_pos_;
    std::vector<std::vector<long long>> floors_;
    std::vector<long long> base_floor_;
};

using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

}  // namespace phecke
