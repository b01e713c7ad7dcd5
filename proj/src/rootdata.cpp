#include "phecke/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace phecke {

Mat Mat::identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
    Mat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long long v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

IntVec Mat::apply(const IntVec& v) const {
    IntVec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Point Mat::apply(const Point& p) const {
    Point r(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != 0) r[i] += Rat(at(i, j)) * p[j];
    return r;
}

IntVec Mat::apply_covector(const IntVec& alpha) const {
    Mat inv = inverse();
    IntVec r(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) r[j] += alpha[i] * inv.at(i, j);
    return r;
}

Mat Mat::inverse() const {
    // Gauss-Jordan over rationals; result must be integral.
    int dim = n;
    std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(2 * dim, Rat(0)));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) m[i][j] = Rat(at(i, j));
        m[i][dim + i] = Rat(1);
    }
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int r = col; r < dim; ++r)
            if (!m[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("matrix not invertible");
        std::swap(m[col], m[pivot]);
        Rat inv = Rat(1) / m[col][col];
        for (int j = 0; j < 2 * dim; ++j) m[col][j] *= inv;
        for (int r = 0; r < dim; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rat f = m[r][col];
            for (int j = 0; j < 2 * dim; ++j) m[r][j] -= f * m[col][j];
        }
    }
    Mat out(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const Rat& v = m[i][dim + j];
            if (!v.is_integer()) throw std::domain_error("matrix inverse not integral");
            out.at(i, j) = v.num();
        }
    return out;
}

bool Mat::is_identity() const { return *this == identity(n); }

bool Mat::is_permutation() const {
    for (int j = 0; j < n; ++j) {
        int ones = 0;
        for (int i = 0; i < n; ++i) {
            long long v = at(i, j);
            if (v == 1) ++ones;
            else if (v != 0) return false;
        }
        if (ones != 1) return false;
    }
    for (int i = 0; i < n; ++i) {
        int ones = 0;
        for (int j = 0; j < n; ++j)
            if (at(i, j) == 1) ++ones;
        if (ones != 1) return false;
    }
    return true;
}

std::vector<int> Mat::to_permutation() const {
    if (!is_permutation()) throw std::domain_error("matrix is not a permutation");
    std::vector<int> images(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (at(i, j) == 1) images[j] = i;
    return images;
}

Mat Mat::from_permutation(const std::vector<int>& images) {
    Mat m(static_cast<int>(images.size()));
    for (int j = 0; j < m.n; ++j) m.at(images[j], j) = 1;
    return m;
}

Mat Mat::transposition(int n, int i, int j) {
    std::vector<int> images(n);
    for (int k = 0; k < n; ++k) images[k] = k;
    std::swap(images[i], images[j]);
    return from_permutation(images);
}

Mat Mat::reflection(const IntVec& alpha, const IntVec& coroot) {
    int n = static_cast<int>(alpha.size());
    Mat m = identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) -= coroot[i] * alpha[j];
    return m;
}

Rat eval_covector(const IntVec& alpha, const Point& p) {
    Rat r(0);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] != 0) r += Rat(alpha[i]) * p[i];
    return r;
}

long long eval_covector_int(const IntVec& alpha, const IntVec& x) {
    long long r = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) r += alpha[i] * x[i];
    return r;
}

int RootDatum::root_index(const IntVec& alpha) const {
    for (std::size_t i = 0; i < positive_roots.size(); ++i)
        if (positive_roots[i] == alpha) return static_cast<int>(i);
    return -1;
}

void RootDatum::validate() const {
    if (rank <= 0) throw std::invalid_argument("root datum: rank must be positive");
    if (positive_roots.size() != coroots.size())
        throw std::invalid_argument("root datum: root/coroot count mismatch");
    if (positive_roots.empty()) throw std::invalid_argument("root datum: no roots");
    for (std::size_t i = 0; i < positive_roots.size(); ++i) {
        if (positive_roots[i].size() != static_cast<std::size_t>(rank) ||
            coroots[i].size() != static_cast<std::size_t>(rank))
            throw std::invalid_argument("root datum: wrong vector length");
        if (eval_covector_int(positive_roots[i], coroots[i]) != 2)
            throw std::invalid_argument("root datum: <alpha, alpha^vee> != 2");
    }
    if (simple.empty()) throw std::invalid_argument("root datum: no simple roots");
    for (int s : simple)
        if (s < 0 || s >= static_cast<int>(positive_roots.size()))
            throw std::invalid_argument("root datum: bad simple index");
    if (highest < 0 || highest >= static_cast<int>(positive_roots.size()))
        throw std::invalid_argument("root datum: bad highest index");

    // Phi closed under the simple reflections, up to sign.
    for (int s : simple) {
        Mat refl = Mat::reflection(positive_roots[s], coroots[s]);
        for (const auto& alpha : positive_roots) {
            IntVec image = refl.apply_covector(alpha);
            IntVec neg(image.size());
            for (std::size_t i = 0; i < image.size(); ++i) neg[i] = -image[i];
            if (root_index(image) < 0 && root_index(neg) < 0)
                throw std::invalid_argument("root datum: Phi not reflection-closed");
        }
    }

    // Every positive root is a nonnegative integer combination of Delta,
    // checked by greedy descent through the simple coroots.
    for (const auto& alpha : positive_roots) {
        IntVec rem = alpha;
        bool progress = true;
        auto is_zero = [](const IntVec& v) {
            return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
        };
        int guard = 0;
        while (!is_zero(rem) && progress && guard++ < 1000) {
            progress = false;
            for (int s : simple) {
                // subtract a simple root while the remainder stays a root or zero
                IntVec next(rem.size());
                for (std::size_t i = 0; i < rem.size(); ++i)
                    next[i] = rem[i] - positive_roots[s][i];
                if (is_zero(next) || root_index(next) >= 0) {
                    rem = next;
                    progress = true;
                    break;
                }
            }
        }
        if (!is_zero(rem))
            throw std::invalid_argument("root datum: positive root not in N-span of Delta");
    }
}

RootDatum gln_datum(int n) {
    if (n < 2) throw std::invalid_argument("gln_datum: n must be >= 2");
    RootDatum d;
    d.rank = n;
    d.is_gln = true;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            IntVec alpha(n, 0);
            alpha[j] = 1;
            alpha[i] = -1;  // e_{j+1} - e_{i+1} in 1-based terms
            d.positive_roots.push_back(alpha);
            d.coroots.push_back(alpha);
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        IntVec alpha(n, 0);
        alpha[i + 1] = 1;
        alpha[i] = -1;
        d.simple.push_back(d.root_index(alpha));
    }
    IntVec top(n, 0);
    top[n - 1] = 1;
    top[0] = -1;
    d.highest = d.root_index(top);
    d.validate();
    return d;
}

bool is_interior_alcove_point(const RootDatum& d, const Point& p) {
    for (std::size_t i = 0; i < d.positive_roots.size(); ++i) {
        Rat v = eval_covector(d.positive_roots[i], p);
        if (v.is_integer()) return false;
        if (!(Rat(0) < v && v < Rat(1))) return false;
    }
    return true;
}

Point base_point(const RootDatum& d) {
    if (d.is_gln) {
        Point p(d.rank);
        for (int i = 0; i < d.rank; ++i) p[i] = Rat(2 * i + 1, 2 * d.rank);
        return p;
    }
    // bounded search over small-denominator rational points
    for (long long den = 2; den <= 64; ++den) {
        Point p(d.rank);
        std::vector<long long> num(d.rank, 0);
        // walk simple coordinates: try p_i = c_i/den with c_i in [0, den)
        std::function<bool(int)> rec = [&](int i) -> bool {
            if (i == d.rank) {
                for (int k = 0; k < d.rank; ++k) p[k] = Rat(num[k], den);
                return is_interior_alcove_point(d, p);
            }
            for (long long c = 0; c < den; ++c) {
                num[i] = c;
                if (rec(i + 1)) return true;
            }
            return false;
        };
        if (d.rank <= 4 && rec(0)) return p;
        if (d.rank > 4) break;
    }
    throw std::runtime_error("base_point: no interior rational point found");
}

std::vector<Mat> finite_weyl_elements(const RootDatum& d, std::size_t bound) {
    std::vector<Mat> gens;
    for (int s : d.simple)
        gens.push_back(Mat::reflection(d.positive_roots[s], d.coroots[s]));
    std::set<Mat> seen;
    std::vector<Mat> order;
    std::vector<Mat> frontier{Mat::identity(d.rank)};
    seen.insert(frontier[0]);
    order.push_back(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const auto& w : frontier) {
            for (const auto& g : gens) {
                Mat v = g * w;
                if (seen.insert(v).second) {
                    order.push_back(v);
                    next.push_back(v);
                    if (order.size() > bound)
                        throw std::runtime_error("finite_weyl_elements: group too large");
                }
            }
        }
        frontier = std::move(next);
    }
    return order;
}

}  // namespace phecke
