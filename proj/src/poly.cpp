#include "phecke/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace phecke {

VarTable::VarTable(std::vector<std::string> ns, std::vector<bool> units)
    : names(std::move(ns)), unit_flags(std::move(units)) {
    if (unit_flags.empty()) unit_flags.assign(names.size(), false);
    if (unit_flags.size() != names.size())
        throw std::invalid_argument("VarTable: unit flag count mismatch");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("VarTable: duplicate variable " + names[i]);
}

int VarTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

VarTablePtr make_vars(std::vector<std::string> names, std::vector<bool> units) {
    return std::make_shared<const VarTable>(std::move(names), std::move(units));
}

Poly Poly::constant(VarTablePtr vars, const Rat& c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_[Exponents(p.vars_->size(), 0)] = c;
    return p;
}

Poly Poly::variable(VarTablePtr vars, const std::string& name) {
    int i = vars->index_of(name);
    if (i < 0) throw std::invalid_argument("unknown variable " + name);
    Exponents e(vars->size(), 0);
    e[i] = 1;
    return monomial(std::move(vars), e, Rat(1));
}

Poly Poly::monomial(VarTablePtr vars, const Exponents& exps, const Rat& c) {
    if (exps.size() != vars->size())
        throw std::invalid_argument("monomial exponent length mismatch");
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] < 0 && !vars->is_unit(i))
            throw std::invalid_argument("negative exponent on non-unit variable " +
                                        vars->names[i]);
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_[exps] = c;
    return p;
}

bool Poly::is_one() const {
    return is_constant() && !terms_.empty() && terms_.begin()->second.is_one();
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat Poly::constant_value() const {
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

void Poly::check_same_ring(const Poly& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("polynomial ring mismatch");
}

void Poly::add_term(const Exponents& e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(o);
    Poly r(vars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    check_same_ring(o);
    return terms_ == o.terms_;
}

bool Poly::operator<(const Poly& o) const {
    check_same_ring(o);
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first;
        if (it->second != jt->second) return it->second < jt->second;
    }
    return jt != o.terms_.end();
}

bool Poly::is_unit() const {
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !vars_->is_unit(i)) return false;
    return true;
}

Poly Poly::inverse() const {
    if (!is_unit()) throw std::domain_error("polynomial is not a unit");
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return monomial(vars_, inv, Rat(1) / c);
}

Poly Poly::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Poly r = constant(vars_, Rat(1));
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

std::optional<Poly> Poly::monomial_sqrt() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    Exponents half(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] % 2 != 0) return std::nullopt;
        half[i] = e[i] / 2;
    }
    auto isqrt = [](long long v) -> long long {
        if (v < 0) return -1;
        long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r * r == v ? r : -1;
    };
    long long sn = isqrt(c.num()), sd = isqrt(c.den());
    if (sn < 0 || sd < 0) return std::nullopt;
    return monomial(vars_, half, Rat(sn, sd));
}

Poly Poly::specialize(const VarTablePtr& target,
                      const std::map<std::string, Poly>& assignment) const {
    std::vector<const Poly*> images(vars_->size(), nullptr);
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        auto it = assignment.find(vars_->names[i]);
        if (it == assignment.end())
            throw std::invalid_argument("specialize: variable " + vars_->names[i] +
                                        " not assigned");
        if (it->second.vars() != target)
            throw std::invalid_argument("specialize: assignment not in target ring");
        images[i] = &it->second;
    }
    Poly r = zero(target);
    for (const auto& [e, c] : terms_) {
        Poly term = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && !images[i]->is_unit())
                throw std::domain_error("non-invertible specialization of " +
                                        vars_->names[i]);
            term *= images[i]->pow(e[i]);
        }
        r += term;
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a.sign() < 0) { out << "-"; a = -a; }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        bool coeff_shown = !a.is_one() || !has_vars;
        if (coeff_shown) out << a.str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << vars_->names[i];
            if (e[i] != 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

namespace {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit PolyLexer(const std::string& text) : s(text) {}
    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    bool eof() { skip_ws(); return pos >= s.size(); }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    bool accept(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("poly parse: expected integer at position " +
                                        std::to_string(start));
        return std::stoll(s.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start)
            throw std::invalid_argument("poly parse: expected identifier at position " +
                                        std::to_string(start));
        return s.substr(start, pos - start);
    }
};

}  // namespace

Poly Poly::parse(VarTablePtr vars, const std::string& text) {
    PolyLexer lex(text);
    Poly result = Poly::zero(vars);
    bool first = true;
    while (!lex.eof()) {
        int sign = 1;
        if (lex.accept('-')) sign = -1;
        else if (lex.accept('+')) sign = 1;
        else if (!first)
            throw std::invalid_argument("poly parse: expected '+' or '-' at position " +
                                        std::to_string(lex.pos));
        first = false;

        Rat coeff(sign);
        Exponents e(vars->size(), 0);
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            long long n = lex.integer();
            long long d = 1;
            if (lex.accept('/')) d = lex.integer();
            coeff = coeff * Rat(n, d);
            saw_factor = true;
            if (!lex.accept('*')) {
                // bare constant term, unless a variable follows directly
                if (!std::isalpha(static_cast<unsigned char>(lex.peek())) && lex.peek() != '_') {
                    result += monomial(vars, e, coeff);
                    continue;
                }
            }
        }
        // variable factors
        while (std::isalpha(static_cast<unsigned char>(lex.peek())) || lex.peek() == '_') {
            std::string name = lex.ident();
            int idx = vars->index_of(name);
            if (idx < 0) throw std::invalid_argument("poly parse: unknown variable " + name);
            int exp = 1;
            if (lex.accept('^')) exp = static_cast<int>(lex.integer());
            e[idx] += exp;
            saw_factor = true;
            if (!lex.accept('*')) break;
        }
        if (!saw_factor)
            throw std::invalid_argument("poly parse: empty term at position " +
                                        std::to_string(lex.pos));
        result += monomial(vars, e, coeff);
    }
    return result;
}

}  // namespace phecke
