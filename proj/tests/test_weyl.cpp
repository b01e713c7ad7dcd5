#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "phecke/weyl.hpp"

using namespace phecke;

namespace {

WeylGroup make_w(int n) { return WeylGroup(gln_datum(n)); }

std::uint64_t rng_state = 99;
std::uint64_t next_rand() {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return rng_state >> 33;
}

WElem random_elem(const WeylGroup& W, int len) {
    WElem w = W.identity();
    for (int i = 0; i < len; ++i) {
        std::uint64_t pick = next_rand() % (W.num_generators() + 2);
        if (pick < static_cast<std::uint64_t>(W.num_generators()))
            w = W.mul(w, W.generator(static_cast<int>(pick)));
        else if (pick == static_cast<std::uint64_t>(W.num_generators()))
            w = W.mul(w, *W.omega_generator());
        else
            w = W.mul(w, W.inv(*W.omega_generator()));
    }
    return w;
}

}  // namespace

TEST_CASE("group operations and geometric action") {
    WeylGroup W = make_w(2);
    WElem s1 = W.generator(1);
    CHECK(W.mul(s1, s1) == W.identity());

    // s0 s1 = tau^{e2 - e1}
    WElem prod = W.mul(W.generator(0), W.generator(1));
    CHECK(prod == W.translation(IntVec{-1, 1}));

    WeylGroup W3 = make_w(3);
    WElem u = *W3.omega_generator();
    CHECK(u.x == IntVec{0, 0, 1});
    CHECK(W3.mul(W3.mul(u, W3.generator(1)), W3.inv(u)) == W3.generator(0));

    for (int trial = 0; trial < 50; ++trial) {
        WElem a = random_elem(W3, 4), b = random_elem(W3, 4);
        CHECK(W3.mul(W3.mul(a, b), W3.inv(b)) == a);
        Point p = W3.base();
        CHECK(W3.act(W3.mul(a, b), p) == W3.act(a, W3.act(b, p)));
    }
}

TEST_CASE("length") {
    WeylGroup W3 = make_w(3);
    CHECK(W3.length(W3.identity()) == 0);
    CHECK(W3.length(W3.translation(IntVec{1, 0, 0})) == 2);

    WeylGroup W2 = make_w(2);
    CHECK(W2.length(*W2.omega_generator()) == 0);
    for (int trial = 0; trial < 50; ++trial) {
        WElem a = random_elem(W3, 5);
        CHECK(W3.length(a) == W3.length(W3.inv(a)));
        WElem conj = W3.mul(W3.mul(*W3.omega_generator(), a), W3.inv(*W3.omega_generator()));
        CHECK(W3.length(conj) == W3.length(a));
    }
}

TEST_CASE("omega decomposition") {
    WeylGroup W2 = make_w(2);
    auto [id_aff, m0] = W2.omega_decompose(W2.identity());
    CHECK(id_aff == W2.identity());
    CHECK(m0 == 0);
    auto [u_aff, m1] = W2.omega_decompose(*W2.omega_generator());
    CHECK(u_aff == W2.identity());
    CHECK(m1 == 1);
    WElem te1 = W2.translation(IntVec{1, 0});
    auto [aff, m] = W2.omega_decompose(te1);
    CHECK(m == 1);
    CHECK(W2.length(aff) == W2.length(te1));
    CHECK(W2.length(te1) == 1);
}

TEST_CASE("reduced words") {
    WeylGroup W2 = make_w(2);
    auto empty = W2.reduced_word(W2.identity());
    CHECK(empty.letters.empty());
    CHECK(empty.m == 0);

    WElem t = W2.translation(IntVec{-1, 1});
    auto word = W2.reduced_word(t);
    CHECK(word.letters == std::vector<int>{0, 1});
    CHECK(word.m == 0);
    CHECK(W2.word_to_elem(word.letters, word.omega) == t);

    WeylGroup W3 = make_w(3);
    WElem central = W3.translation(IntVec{1, 1, 1});
    auto cw = W3.reduced_word(central);
    CHECK(cw.letters.empty());
    CHECK(cw.m == 3);

    // every reduced word of every sampled element multiplies back
    for (int trial = 0; trial < 30; ++trial) {
        WElem a = random_elem(W3, 4);
        auto w = W3.reduced_word(a);
        CHECK(static_cast<long long>(w.letters.size()) == W3.length(a));
        for (const auto& letters : W3.all_reduced_words(a))
            CHECK(W3.word_to_elem(letters, w.omega) == a);
    }
}

TEST_CASE("separating hyperplanes") {
    WeylGroup W2 = make_w(2);
    WElem s1 = W2.generator(1);
    CHECK(W2.separating(s1, s1).empty());
    HyperplaneSet sep = W2.separating(W2.identity(), s1);
    CHECK(sep == HyperplaneSet{Hyperplane{0, 0}});

    WeylGroup W3 = make_w(3);
    CHECK(W3.separating(W3.identity(), W3.translation(IntVec{1, 0, 0})).size() == 2);

    for (int trial = 0; trial < 50; ++trial) {
        WElem a = random_elem(W3, 4), b = random_elem(W3, 4);
        CHECK(static_cast<long long>(W3.separating(a, b).size()) ==
              W3.length(W3.mul(W3.inv(a), b)));
    }
}

TEST_CASE("double crossings") {
    WeylGroup W2 = make_w(2);
    WElem s1 = W2.generator(1);
    WElem s0 = W2.generator(0);
    CHECK(W2.double_crossings(W2.identity(), s1).empty());
    CHECK(W2.double_crossings(s1, s1) == HyperplaneSet{Hyperplane{0, 0}});
    CHECK(W2.double_crossings(s1, W2.mul(s1, s0)) == HyperplaneSet{Hyperplane{0, 0}});

    WeylGroup W3 = make_w(3);
    for (int trial = 0; trial < 60; ++trial) {
        WElem a = random_elem(W3, 4), b = random_elem(W3, 4);
        long long defect = W3.length(a) + W3.length(b) - W3.length(W3.mul(a, b));
        CHECK(defect >= 0);
        CHECK((defect == 0) == W3.double_crossings(a, b).empty());
    }
}

TEST_CASE("bruhat order") {
    WeylGroup W2 = make_w(2);
    WElem s1 = W2.generator(1);
    WElem s0s1 = W2.mul(W2.generator(0), s1);
    CHECK(!W2.bruhat_lt(s1, s1));
    CHECK(W2.bruhat_lt(s1, s0s1));
    CHECK(!W2.bruhat_lt(W2.mul(s1, *W2.omega_generator()), s0s1));
}

TEST_CASE("weak order matches nested separation sets") {
    WeylGroup W2 = make_w(2);
    for (int t1 = 0; t1 < 25; ++t1) {
        WElem a = random_elem(W2, 3), b = random_elem(W2, 4);
        bool weak = W2.length(b) == W2.length(a) + W2.length(W2.mul(W2.inv(a), b));
        HyperplaneSet sa = W2.separating(W2.identity(), a);
        HyperplaneSet sb = W2.separating(W2.identity(), b);
        bool nested = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
        CHECK(weak == nested);
    }
}

TEST_CASE("hyperplane action") {
    WeylGroup W2 = make_w(2);
    Hyperplane h{0, 0};
    CHECK(W2.hyperplane_action(W2.identity(), h) == h);
    CHECK(W2.hyperplane_action(W2.translation(IntVec{1, 0}), h) == Hyperplane{0, 1});
    CHECK(W2.hyperplane_action(W2.generator(1), h) == h);

    // conjugation of reflections matches the action on walls
    WeylGroup W3 = make_w(3);
    for (int trial = 0; trial < 25; ++trial) {
        WElem w = random_elem(W3, 4);
        Hyperplane g{static_cast<int>(next_rand() % 3),
                     static_cast<long long>(next_rand() % 5) - 2};
        WElem lhs = W3.mul(W3.mul(w, W3.reflection(g)), W3.inv(w));
        CHECK(lhs == W3.reflection(W3.hyperplane_action(w, g)));
    }
}

TEST_CASE("length oracle against BFS") {
    for (int n = 2; n <= 3; ++n) {
        WeylGroup W = make_w(n);
        std::map<WElem, long long> depth{{W.identity(), 0}};
        std::vector<WElem> frontier{W.identity()};
        for (int step = 1; step <= 6; ++step) {
            std::vector<WElem> next;
            for (const auto& v : frontier)
                for (int i = 0; i < W.num_generators(); ++i) {
                    WElem nv = W.mul(v, W.generator(i));
                    if (depth.emplace(nv, step).second) next.push_back(nv);
                }
            frontier = std::move(next);
        }
        for (const auto& [w, d] : depth) CHECK(W.length(w) == d);
    }
}

TEST_CASE("base point independence") {
    WeylGroup W3 = make_w(3);
    Point alt{Rat(1, 4), Rat(2, 4), Rat(3, 4)};
    REQUIRE(is_interior_alcove_point(W3.datum(), alt));
    for (int trial = 0; trial < 40; ++trial) {
        WElem a = random_elem(W3, 4), b = random_elem(W3, 4);
        CHECK(W3.length(a) == W3.length_at(a, alt));
        CHECK(W3.separating(a, b) == W3.separating_at(a, b, alt));
    }
}

TEST_CASE("dominant monoid generators for GL_2") {
    WeylGroup W2 = make_w(2);
    auto dom = W2.dominant_monoid_generators(Mat::identity(2), 3);
    REQUIRE(dom.kernel_basis.size() == 1);
    IntVec k = dom.kernel_basis[0];
    CHECK((k == IntVec{1, 1} || k == IntVec{-1, -1}));
    CHECK(!dom.minimal.empty());
    for (const auto& g : dom.minimal) {
        CHECK(g != IntVec{0, 0});
        // alpha(g) = g2 - g1 > 0 away from the kernel directions
        CHECK(g[1] - g[0] > 0);
    }
}

TEST_CASE("descents agree with length steps") {
    WeylGroup W3 = make_w(3);
    for (int trial = 0; trial < 60; ++trial) {
        WElem w = random_elem(W3, 4);
        for (int i = 0; i < W3.num_generators(); ++i) {
            bool ld = W3.left_descent(w, i);
            CHECK(ld == (W3.length(W3.mul(W3.generator(i), w)) < W3.length(w)));
            bool rd = W3.right_descent(w, i);
            CHECK(rd == (W3.length(W3.mul(w, W3.generator(i))) < W3.length(w)));
        }
    }
}

TEST_CASE("generic affine datum: geometry without a preset") {
    RootDatum b2;
    b2.rank = 2;
    b2.positive_roots = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}};
    b2.coroots = {{2, 0}, {-1, 1}, {0, 2}, {1, 1}};
    b2.simple = {0, 1};
    b2.highest = 3;
    WeylGroup W(b2);
    CHECK(W.num_generators() == 3);
    CHECK(!W.has_omega());
    CHECK_THROWS_AS(W.omega_decompose(W.identity()), std::domain_error);

    // BFS length oracle over the affine generators
    std::map<WElem, long long> depth{{W.identity(), 0}};
    std::vector<WElem> frontier{W.identity()};
    for (int step = 1; step <= 5; ++step) {
        std::vector<WElem> next;
        for (const auto& v : frontier)
            for (int i = 0; i < W.num_generators(); ++i) {
                WElem nv = W.mul(v, W.generator(i));
                if (depth.emplace(nv, step).second) next.push_back(nv);
            }
        frontier = std::move(next);
    }
    for (const auto& [w, d] : depth) {
        CHECK(W.length(w) == d);
        auto word = W.reduced_word(w);
        CHECK(static_cast<long long>(word.letters.size()) == d);
        CHECK(W.word_to_elem(word.letters, word.omega) == w);
    }
    // the translation by a vector outside the coroot lattice has length zero
    // remainder handling through reduced_word (nontrivial omega group)
    WElem tx = W.translation(IntVec{1, 1});
    auto word = W.reduced_word(tx);
    CHECK(W.word_to_elem(word.letters, word.omega) == tx);
}
