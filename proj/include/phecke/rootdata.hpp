#pragma once

#include <string>
#include <vector>

#include "phecke/rational.hpp"

namespace phecke {

using IntVec = std::vector<long long>;
using Point = std::vector<Rat>;

// Square integer matrix acting on column vectors; W0 elements live here.
struct Mat {
    int n = 0;
    std::vector<long long> a;  // row-major

    Mat() = default;
    explicit Mat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}

    static Mat identity(int dim);
    long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    Mat operator*(const Mat& o) const;
    bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool operator<(const Mat& o) const { return a < o.a; }

    IntVec apply(const IntVec& v) const;
    Point apply(const Point& p) const;
    // covector transform: (this . alpha)(x) = alpha(this^-1 x)
    IntVec apply_covector(const IntVec& alpha) const;

    Mat inverse() const;  // throws if not invertible over Z
    bool is_identity() const;
    bool is_permutation() const;
    std::vector<int> to_permutation() const;          // one-line, 0-based images
    static Mat from_permutation(const std::vector<int>& images);  // 0-based
    static Mat transposition(int n, int i, int j);
    // reflection x -> x - alpha(x) coroot
    static Mat reflection(const IntVec& alpha, const IntVec& coroot);
};

// Root datum on X = Z^n: positive roots as integer covectors with matching
// integer coroots, a simple subsystem and the highest coroot (used for the
// affine generator).
struct RootDatum {
    int rank = 0;
    std::vector<IntVec> positive_roots;  // covectors alpha
    std::vector<IntVec> coroots;         // vectors alpha^vee
    std::vector<int> simple;             // indices into positive_roots
    int highest = -1;                    // index of the highest coroot
    bool is_gln = false;

    int root_index(const IntVec& alpha) const;  // -1 if absent
    void validate() const;
};

// Root datum of GL_n: Phi+ = { e_j - e_i : i < j }, Delta the adjacent
// differences, highest coroot e_n - e_1.
RootDatum gln_datum(int n);

// Interior rational point of the fundamental alcove; for GL_n this is
// ((2i-1)/(2n))_i. Generic data get a bounded denominator search.
Point base_point(const RootDatum& d);
bool is_interior_alcove_point(const RootDatum& d, const Point& p);

// Full enumeration of W0 by closure under the simple reflections.
std::vector<Mat> finite_weyl_elements(const RootDatum& d, std::size_t bound = 100000);

Rat eval_covector(const IntVec& alpha, const Point& p);
long long eval_covector_int(const IntVec& alpha, const IntVec& x);

}  // namespace phecke
