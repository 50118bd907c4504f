#include "hcw/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hcw {

VarList u_vars(int n) {
    VarList v;
    v.reserve(n);
    for (int i = 1; i <= n; ++i) v.push_back({VarFamily::u, static_cast<uint8_t>(i)});
    return v;
}

VarList x_vars(int n) {
    VarList v;
    v.reserve(n);
    for (int i = 1; i <= n; ++i) v.push_back({VarFamily::x, static_cast<uint8_t>(i)});
    return v;
}

MultiPoly MultiPoly::constant(VarList vars, Rational c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Expo(p.vars_.size(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(const VarList& vars, const VarId& v) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end())
        throw std::invalid_argument("MultiPoly: unknown variable " + v.name());
    return variable_at(vars, static_cast<int>(it - vars.begin()));
}

MultiPoly MultiPoly::variable_at(const VarList& vars, int pos) {
    if (pos < 0 || pos >= static_cast<int>(vars.size()))
        throw std::invalid_argument("MultiPoly: variable position out of range");
    MultiPoly p(vars);
    Expo e(vars.size(), 0);
    e[pos] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(VarList vars, Expo e, Rational c) {
    if (e.size() != vars.size())
        throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (uint8_t k : e) t += k;
        d = std::max(d, t);
    }
    return d;
}

bool MultiPoly::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (uint8_t k : e) t += k;
        if (t != degree) return false;
    }
    return true;
}

void MultiPoly::check_same_vars(const MultiPoly& o, const char* op) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument(std::string("MultiPoly: variable lists differ in ") + op);
}

int MultiPoly::var_pos(const VarId& v) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == v) return static_cast<int>(i);
    return -1;
}

void MultiPoly::add_term(const Expo& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_vars(o, "+");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_vars(o, "-");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_vars(o, "*");
    MultiPoly r(vars_);
    Expo e(vars_.size(), 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<uint8_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("MultiPoly: point arity mismatch in eval");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (uint8_t k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

double MultiPoly::eval_double(const std::vector<double>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("MultiPoly: point arity mismatch in eval");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (size_t i = 0; i < e.size(); ++i)
            for (uint8_t k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::partial(const VarId& v) const {
    int pos = var_pos(v);
    if (pos < 0)
        throw std::invalid_argument("MultiPoly: unknown variable " + v.name() + " in partial");
    return partial_at(pos);
}

MultiPoly MultiPoly::partial_at(int pos) const {
    if (pos < 0 || pos >= nvars())
        throw std::invalid_argument("MultiPoly: variable position out of range in partial");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[pos] == 0) continue;
        Expo d = e;
        d[pos] -= 1;
        r.add_term(d, c * Rational(e[pos]));
    }
    return r;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& subst) const {
    if (subst.size() != vars_.size())
        throw std::invalid_argument("MultiPoly: substitution arity mismatch in compose");
    VarList target = subst.empty() ? VarList{} : subst.front().vars();
    for (const auto& s : subst)
        if (s.vars() != target)
            throw std::invalid_argument("MultiPoly: substitution polynomials over mixed variable lists");

    // Power cache per variable, built on demand.
    std::vector<std::vector<MultiPoly>> pows(subst.size());
    auto power = [&](size_t i, uint8_t k) -> const MultiPoly& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rational(1)));
        while (cache.size() <= k) cache.push_back(cache.back() * subst[i]);
        return cache[k];
    };

    MultiPoly acc(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        acc += t;
    }
    return acc;
}

std::pair<Rational, bool> MultiPoly::linear_coefficient(const VarId& v) const {
    int pos = var_pos(v);
    if (pos < 0)
        throw std::invalid_argument("MultiPoly: unknown variable " + v.name());
    Rational coeff(0);
    bool found = false;
    for (const auto& [e, c] : terms_) {
        if (e[pos] == 0) continue;
        if (e[pos] > 1)
            throw std::invalid_argument("MultiPoly: nonlinear dependence on " + v.name());
        int others = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != pos) others += e[i];
        if (others > 0)
            throw std::invalid_argument("MultiPoly: mixed term involving " + v.name());
        coeff = c;
        found = true;
    }
    return {coeff, found};
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";

    // Highest total degree first, then reverse-lexicographic on exponents,
    // so "u1^2 - u2^2" prints in the order people expect.
    std::vector<const std::pair<const Expo, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        int da = 0, db = 0;
        for (uint8_t k : a->first) da += k;
        for (uint8_t k : b->first) db += k;
        if (da != db) return da > db;
        return a->first > b->first;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool any_var = false;
        std::ostringstream mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << "*";
            mono << vars_[i].name();
            if (e[i] > 1) mono << "^" << static_cast<int>(e[i]);
            any_var = true;
        }
        if (!any_var) {
            os << a.to_string();
        } else if (a.is_one()) {
            os << mono.str();
        } else {
            os << a.to_string() << "*" << mono.str();
        }
    }
    return os.str();
}

MultiPoly norm_sq_poly(const VarList& vars) {
    MultiPoly s(vars);
    for (int i = 0; i < static_cast<int>(vars.size()); ++i) {
        MultiPoly v = MultiPoly::variable_at(vars, i);
        s += v * v;
    }
    return s;
}

}  // namespace hcw
