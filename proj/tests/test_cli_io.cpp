#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phecke/verify.hpp"

using namespace phecke;

TEST_CASE("element JSON round trips") {
    auto A = make_preset("yokonuma:2:2");
    const auto& G = A->group();
    const WeylGroup& W = A->weyl();
    ElementSampler sampler(G, 71);
    for (int trial = 0; trial < 40; ++trial) {
        WElem w = sampler.random_elem(4).w;
        CHECK(welem_from_json(W, welem_to_json(W, w)) == w);
        ProPElem g = sampler.random_elem(4);
        CHECK(propelem_from_json(G, propelem_to_json(G, g)) == g);
    }
    HeckeElem h = A->zero();
    for (int k = 0; k < 4; ++k) {
        HeckeElem part = A->scale(Poly::parse(A->vars(), k % 2 ? "3/2*u^-1" : "v - 2"),
                                  A->basis(sampler.random_elem(3)));
        h = A->add(h, part);
    }
    CHECK(hecke_from_json(*A, hecke_to_json(*A, h)) == h);
}

TEST_CASE("fixed JSON forms parse") {
    auto A = make_preset("yokonuma:2:2");
    ProPElem g = propelem_from_json(
        A->group(), Json::parse(R"({"t":[0,0],"x":[1,0],"sigma":[1,2]})"));
    CHECK(g.w.x == IntVec{1, 0});
    CHECK(g.w.sigma.is_identity());
    ProPElem swapped = propelem_from_json(
        A->group(), Json::parse(R"({"t":[1,0],"x":[0,0],"sigma":[2,1]})"));
    CHECK(swapped.w.sigma == Mat::transposition(2, 0, 1));
}

TEST_CASE("root datum JSON round trip") {
    RootDatum d = gln_datum(3);
    Json j = rootdatum_to_json(d);
    RootDatum back = rootdatum_from_json(j);
    CHECK(back.positive_roots == d.positive_roots);
    CHECK(back.simple == d.simple);
    CHECK(back.highest == d.highest);
}

TEST_CASE("orientation specs") {
    auto A = make_preset("gln:2:a1");
    const WeylGroup& W = A->weyl();
    Orientation sph = orientation_from_spec(W, "spherical:[1,2]");
    CHECK(sph.kind() == Orientation::Kind::Spherical);
    Orientation cham = orientation_from_spec(W, R"(chamber:{"x":[0,0],"sigma":[2,1]})");
    CHECK(cham.kind() == Orientation::Kind::Chamber);

    Orientation composite = orientation_from_spec(
        W, R"(spherical:[2,1].act({"x":[1,0],"sigma":[1,2]}).op)");
    CHECK(composite.is_opposite());
    CHECK(composite.shifts().size() == 1);
    // evaluation matches manual composition
    Orientation manual =
        Orientation::spherical(Mat::transposition(2, 0, 1))
            .acted(W.translation(IntVec{1, 0}))
            .opposite();
    ElementSampler sampler(A->group(), 73);
    for (int trial = 0; trial < 20; ++trial) {
        WElem w = sampler.random_elem(4).w;
        for (int s = 0; s < W.num_generators(); ++s)
            CHECK(composite.eval(W, w, s) == manual.eval(W, w, s));
    }

    CHECK_THROWS_AS(orientation_from_spec(W, "bogus"), std::invalid_argument);
    CHECK_THROWS_AS(orientation_from_spec(W, "spherical:[3,1]"), std::invalid_argument);
}

TEST_CASE("reports are deterministic under a fixed seed") {
    SuiteOptions opt;
    opt.seed = 12345;
    opt.trials = 20;
    opt.max_len = 3;
    SuiteReport r1 = run_suite("assoc", "gln:2:universal", opt);
    SuiteReport r2 = run_suite("assoc", "gln:2:universal", opt);
    CHECK(r1.to_json().dump() == r2.to_json().dump());
    CHECK(r1.ok());
}

TEST_CASE("suites cover the documented names") {
    SuiteOptions opt;
    opt.trials = 4;
    opt.max_len = 2;
    opt.box = 1;
    for (const auto& name : kSuiteNames) {
        std::string preset = name == "cocycle" || name == "jm-bernstein"
                                 ? "gln:2:laurent"
                                 : "gln:2:a1";
        SuiteReport r = run_suite(name, preset, opt);
        CHECK(r.ok());
    }
}
