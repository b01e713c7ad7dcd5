#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "phecke/rational.hpp"

namespace phecke {

// Ordered variable list with per-variable Laurent (invertible) flags.
// Polynomials compare their tables by pointer identity: two values belong to
// the same ring exactly if they share the same VarTable object.
struct VarTable {
    std::vector<std::string> names;
    std::vector<bool> unit_flags;

    VarTable(std::vector<std::string> ns, std::vector<bool> units);
    std::size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;
    bool is_unit(std::size_t i) const { return unit_flags[i]; }
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names, std::vector<bool> units = {});

// Multivariate Laurent polynomial with rational coefficients. Terms are kept
// in canonical form (no zero coefficients), so structural equality is ring
// equality. Negative exponents are allowed only on unit-flagged variables.
class Poly {
public:
    using Exponents = std::vector<int>;

    Poly() = default;
    explicit Poly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static Poly zero(VarTablePtr vars) { return Poly(std::move(vars)); }
    static Poly constant(VarTablePtr vars, const Rat& c);
    static Poly variable(VarTablePtr vars, const std::string& name);
    static Poly monomial(VarTablePtr vars, const Exponents& exps, const Rat& c);

    const VarTablePtr& vars() const { return vars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;  // arbitrary total order for map keys

    // A unit is a single term whose variables are all unit-flagged
    // (coefficients are rational, hence always invertible).
    bool is_unit() const;
    Poly inverse() const;  // throws if not a unit
    Poly pow(int e) const; // negative e requires a unit

    // Monomial square root with the positive-coefficient convention
    // (exponents halved, coefficient a square of a rational).
    std::optional<Poly> monomial_sqrt() const;

    // Ring homomorphism determined by a full variable assignment into a
    // target ring. Unit variables must be assigned units.
    Poly specialize(const VarTablePtr& target,
                    const std::map<std::string, Poly>& assignment) const;

    std::string str() const;
    static Poly parse(VarTablePtr vars, const std::string& text);

private:
    void add_term(const Exponents& e, const Rat& c);
    void check_same_ring(const Poly& o) const;

    VarTablePtr vars_;
    std::map<Exponents, Rat> terms_;
};

}  // namespace phecke
