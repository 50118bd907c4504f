#pragma once

// Multivariate polynomials with exact rational coefficients over a fixed,
// ordered variable list. The two variable families ("u" parameters and "x"
// target coordinates) are kept distinct so a composition can never confuse
// them. Exponent vectors are dense (at most 16 variables anywhere in this
// project). No stored term has a zero coefficient.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hcw/rational.hpp"

namespace hcw {

enum class VarFamily : uint8_t { u, x };

struct VarId {
    VarFamily family;
    uint8_t index;  // 1-based

    bool operator==(const VarId& o) const { return family == o.family && index == o.index; }
    bool operator!=(const VarId& o) const { return !(*this == o); }
    std::string name() const {
        return (family == VarFamily::u ? "u" : "x") + std::to_string(index);
    }
};

using VarList = std::vector<VarId>;
using Expo = std::vector<uint8_t>;

VarList u_vars(int n);
VarList x_vars(int n);

class MultiPoly {
public:
    MultiPoly() = default;  // zero polynomial over an empty variable list
    explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(VarList vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(VarList vars, Rational c);
    static MultiPoly variable(const VarList& vars, const VarId& v);
    // variable by position in the list (0-based)
    static MultiPoly variable_at(const VarList& vars, int pos);
    static MultiPoly monomial(VarList vars, Expo e, Rational c);

    const VarList& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::map<Expo, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous(int degree) const;
    int term_count() const { return static_cast<int>(terms_.size()); }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const Rational& c) const;

    bool operator==(const MultiPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact value at a point; the point length must match the variable list.
    Rational eval(const std::vector<Rational>& point) const;
    double eval_double(const std::vector<double>& point) const;

    // Exact partial derivative with respect to a variable of this polynomial.
    MultiPoly partial(const VarId& v) const;
    MultiPoly partial_at(int pos) const;

    // Substitutes subst[i] for the i-th variable. All substituted polynomials
    // must share one variable list; the result lives over that list.
    MultiPoly compose(const std::vector<MultiPoly>& subst) const;

    // Coefficient-of-variable extraction for matrices linear in the u_k:
    // returns (coefficient of v, remainder independent of v); throws if the
    // polynomial has degree >= 2 in v.
    std::pair<Rational, bool> linear_coefficient(const VarId& v) const;

    // Deterministic human/machine readable form, e.g. "u1^2 - 2*u2*u3 + 1/2".
    std::string to_string() const;

    void add_term(const Expo& e, const Rational& c);

private:
    void check_same_vars(const MultiPoly& o, const char* op) const;
    int var_pos(const VarId& v) const;  // -1 if absent

    VarList vars_;
    std::map<Expo, Rational> terms_;
};

MultiPoly operator*(const Rational& c, const MultiPoly& p);

// Sum of u_i^2 over the given variable list.
MultiPoly norm_sq_poly(const VarList& vars);

}  // namespace hcw
