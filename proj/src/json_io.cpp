#include "phecke/json_io.hpp"

#include <stdexcept>

namespace phecke {

namespace {

Json mat_to_json(const Mat& m) {
    if (m.is_permutation()) {
        Json arr = Json::array();
        for (int img : m.to_permutation()) arr.push_back(img + 1);  // one-line, 1-based
        return arr;
    }
    Json rows = Json::array();
    for (int i = 0; i < m.n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return Json{{"matrix", rows}};
}

Mat mat_from_json(int rank, const Json& j) {
    if (j.is_array()) {
        std::vector<int> images;
        for (const auto& v : j) images.push_back(v.get<int>() - 1);
        if (static_cast<int>(images.size()) != rank)
            throw std::invalid_argument("sigma permutation has wrong length");
        return Mat::from_permutation(images);
    }
    if (j.is_object() && j.contains("matrix")) {
        Mat m(rank);
        const Json& rows = j.at("matrix");
        for (int i = 0; i < rank; ++i)
            for (int c = 0; c < rank; ++c) m.at(i, c) = rows.at(i).at(c).get<long long>();
        return m;
    }
    throw std::invalid_argument("sigma must be a permutation array or a matrix object");
}

}  // namespace

Json welem_to_json(const WeylGroup& W, const WElem& w) {
    Json j;
    j["x"] = w.x;
    j["sigma"] = mat_to_json(w.sigma);
    return j;
}

WElem welem_from_json(const WeylGroup& W, const Json& j) {
    WElem w;
    w.x = j.at("x").get<IntVec>();
    if (w.x.size() != static_cast<std::size_t>(W.rank()))
        throw std::invalid_argument("x has wrong rank");
    w.sigma = mat_from_json(W.rank(), j.at("sigma"));
    return w;
}

Json propelem_to_json(const ProPGroup& G, const ProPElem& g) {
    Json j;
    j["t"] = g.t;
    j["x"] = g.w.x;
    j["sigma"] = mat_to_json(g.w.sigma);
    return j;
}

ProPElem propelem_from_json(const ProPGroup& G, const Json& j) {
    ProPElem g;
    g.t = G.torus().reduce(j.at("t").get<TElem>());
    g.w.x = j.at("x").get<IntVec>();
    g.w.sigma = mat_from_json(G.weyl().rank(), j.at("sigma"));
    return g;
}

Json hecke_to_json(const HeckeAlgebra& A, const HeckeElem& h) {
    Json terms = Json::array();
    for (const auto& [g, c] : h.terms) {
        Json t;
        t["coeff"] = c.str();
        t["elem"] = propelem_to_json(A.group(), g);
        terms.push_back(t);
    }
    return Json{{"terms", terms}};
}

HeckeElem hecke_from_json(const HeckeAlgebra& A, const Json& j) {
    HeckeElem h;
    for (const auto& t : j.at("terms")) {
        ProPElem g = propelem_from_json(A.group(), t.at("elem"));
        Poly c = Poly::parse(A.vars(), t.at("coeff").get<std::string>());
        if (c.is_zero()) continue;
        auto it = h.terms.find(g);
        if (it == h.terms.end()) h.terms.emplace(std::move(g), std::move(c));
        else {
            it->second += c;
            if (it->second.is_zero()) h.terms.erase(it);
        }
    }
    return h;
}

Json rootdatum_to_json(const RootDatum& d) {
    Json j;
    j["rank"] = d.rank;
    j["positive_roots"] = d.positive_roots;
    j["coroots"] = d.coroots;
    j["simple"] = d.simple;
    j["highest"] = d.highest;
    return j;
}

RootDatum rootdatum_from_json(const Json& j) {
    RootDatum d;
    d.rank = j.at("rank").get<int>();
    d.positive_roots = j.at("positive_roots").get<std::vector<IntVec>>();
    d.coroots = j.at("coroots").get<std::vector<IntVec>>();
    d.simple = j.at("simple").get<std::vector<int>>();
    d.highest = j.at("highest").get<int>();
    d.validate();
    return d;
}

Orientation orientation_from_spec(const WeylGroup& W, const std::string& spec) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("orientation spec '" + spec + "': " + why);
    };
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos) fail("missing ':'");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);

    // body runs to the first top-level '.' modifier
    auto body_end = [&](const std::string& s) {
        int depth = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            if (c == '{' || c == '[' || c == '(') ++depth;
            else if (c == '}' || c == ']' || c == ')') --depth;
            else if (c == '.' && depth == 0) return i;
        }
        return s.size();
    };
    std::size_t end = body_end(rest);
    std::string body = rest.substr(0, end);
    std::string mods = rest.substr(end);

    Orientation o = Orientation::chamber(W.identity());
    if (kind == "chamber") {
        o = Orientation::chamber(welem_from_json(W, Json::parse(body)));
    } else if (kind == "spherical") {
        Mat d = mat_from_json(W.rank(), Json::parse(body));
        if (W.finite_index(d) < 0) fail("spherical index is not a finite Weyl element");
        o = Orientation::spherical(d);
    } else {
        fail("unknown kind '" + kind + "'");
    }
    while (!mods.empty()) {
        if (mods.rfind(".op", 0) == 0) {
            o = o.opposite();
            mods = mods.substr(3);
        } else if (mods.rfind(".act(", 0) == 0) {
            int depth = 1;
            std::size_t i = 5;
            for (; i < mods.size() && depth > 0; ++i) {
                if (mods[i] == '(') ++depth;
                else if (mods[i] == ')') --depth;
            }
            if (depth != 0) fail("unbalanced parentheses in .act");
            std::string arg = mods.substr(5, i - 6);
            o = o.acted(welem_from_json(W, Json::parse(arg)));
            mods = mods.substr(i);
        } else {
            fail("unknown modifier near '" + mods + "'");
        }
    }
    return o;
}

}  // namespace phecke
