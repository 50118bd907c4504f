#include "hcw/cayley.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "hcw/hurwitz.hpp"
#include "hcw/linalg.hpp"

namespace hcw::cayley {

namespace {

std::mutex cache_mutex;

MultiPoly skew_norm_sq(const VarList& vars) {
    // sum of u_i^2 for i >= 2
    MultiPoly s = MultiPoly::zero(vars);
    for (int i = 1; i < static_cast<int>(vars.size()); ++i) {
        MultiPoly v = MultiPoly::variable_at(vars, i);
        s += v * v;
    }
    return s;
}

}  // namespace

bool supported_dim(int n) { return n == 2 || n == 3 || n == 5 || n == 7 || n == 9; }

ScaledOrthogonal cayley_transform(int n, const ParamVector& u) {
    if (!supported_dim(n))
        throw std::invalid_argument("cayley: unsupported dimension " + std::to_string(n));
    check_param_length(u, hurwitz::minor_param_count(n), "cayley::cayley_transform");
    if (is_zero_vector(u)) throw std::domain_error("cayley: degenerate parameter u = 0");
    // For odd minors det(u1 I + S) carries a factor u1; u1 != 0 makes every
    // remaining factor a positive sum of squares.
    if (n % 2 == 1 && u[0].is_zero())
        throw std::domain_error(
            "cayley: degenerate parameter, u_1 = 0 makes u_1 I + S singular for odd n");

    Rational r = norm_sq(u);
    ExactMatrix a = hurwitz::minor_full(n, u);       // u1 I + S
    ExactMatrix rhs = a.transpose().scale(r);        // |u|^2 (u1 I - S)
    ExactMatrix o;
    try {
        o = solve_linear(a, rhs);
    } catch (const std::domain_error&) {
        throw std::runtime_error("cayley: internal error, singular pivot at an admissible point");
    }
    return {n, std::move(o), std::move(r)};
}

const ScaledOrthogonalSym& cayley_transform_symbolic(int n) {
    if (!supported_dim(n))
        throw std::invalid_argument("cayley: unsupported dimension " + std::to_string(n));

    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<int, ScaledOrthogonalSym> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const int np = hurwitz::minor_param_count(n);
    VarList vars = u_vars(np);

    auto unit = [&](int k) {
        ParamVector u(np, Rational(0));
        u[k] = Rational(1);
        return u;
    };
    auto add = [&](ParamVector a, const ParamVector& b) {
        for (int i = 0; i < np; ++i) a[i] += b[i];
        return a;
    };
    auto sub = [&](ParamVector a, const ParamVector& b) {
        for (int i = 0; i < np; ++i) a[i] -= b[i];
        return a;
    };
    auto value = [&](const ParamVector& u) { return cayley_transform(n, u).matrix; };

    // Entries are homogeneous quadratic forms, so exact evaluations at
    // e1, e1 +/- ek, e1 + ek + el recover every coefficient.
    ExactMatrix base = value(unit(0));
    std::map<std::pair<int, int>, ExactMatrix> plus, minus, mixed;
    for (int k = 1; k < np; ++k) {
        plus[{k, k}] = value(add(unit(0), unit(k)));
        minus[{k, k}] = value(sub(unit(0), unit(k)));
    }
    for (int k = 1; k < np; ++k)
        for (int l = k + 1; l < np; ++l)
            mixed[{k, l}] = value(add(add(unit(0), unit(k)), unit(l)));

    MultiPoly zero = MultiPoly::zero(vars);
    PolyMatrix o(n, n, zero);
    Rational half(1, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            MultiPoly q = zero;
            auto mono = [&](int a, int b, const Rational& c) {
                if (c.is_zero()) return;
                Expo e(np, 0);
                e[a] += 1;
                e[b] += 1;
                q.add_term(e, c);
            };
            Rational c11 = base.at(i, j);
            mono(0, 0, c11);
            std::vector<Rational> ckk(np, Rational(0)), c1k(np, Rational(0));
            for (int k = 1; k < np; ++k) {
                Rational p = plus[{k, k}].at(i, j);
                Rational m = minus[{k, k}].at(i, j);
                ckk[k] = (p + m) * half - c11;
                c1k[k] = (p - m) * half;
                mono(k, k, ckk[k]);
                mono(0, k, c1k[k]);
            }
            for (int k = 1; k < np; ++k)
                for (int l = k + 1; l < np; ++l) {
                    Rational v = mixed[{k, l}].at(i, j);
                    Rational ckl = v - c11 - ckk[k] - ckk[l] - c1k[k] - c1k[l];
                    mono(k, l, ckl);
                }
            o.at(i, j) = std::move(q);
        }
    }

    // Certificate: the reconstructed matrix must satisfy both defining
    // relations exactly as polynomial identities. When the certificate
    // fails, the entries are not quadratic forms at all; produce an exact
    // parallelogram-law witness so the rejection carries its own proof.
    PolyMatrix a = hurwitz::minor_full_symbolic(n);  // u1 I + S
    MultiPoly r = norm_sq_poly(vars);
    PolyMatrix rhs = a.transpose().scale(r);
    if (!((a * o) == rhs && (o * a) == rhs))
        throw std::domain_error("cayley: entries of the scaled transform are not polynomial "
                                "for n = " + std::to_string(n) + " (" +
                                nonquadratic_witness(n) + "); only the last row and column "
                                "are quadratic forms");

    auto [pos, inserted] = cache.emplace(n, ScaledOrthogonalSym{n, std::move(o), std::move(r)});
    return pos->second;
}

std::string nonquadratic_witness(int n) {
    // For a quadratic form Q, Q(a+b) + Q(a-b) = 2Q(a) + 2Q(b). Points are
    // chosen with nonzero leading parameter so every evaluation is defined.
    const int np = hurwitz::minor_param_count(n);
    auto point = [&](long c1, int k, long ck, int l, long cl) {
        ParamVector u(np, Rational(0));
        u[0] = Rational(c1);
        if (k >= 0) u[k] += Rational(ck);
        if (l >= 0) u[l] += Rational(cl);
        return u;
    };
    for (int k = 1; k < np; ++k) {
        for (int l = 1; l < np; ++l) {
            if (l == k) continue;
            ExactMatrix qa = cayley_transform(n, point(3, k, 1, -1, 0)).matrix;
            ExactMatrix qb = cayley_transform(n, point(1, l, 1, -1, 0)).matrix;
            ExactMatrix qs = cayley_transform(n, point(4, k, 1, l, 1)).matrix;
            ExactMatrix qd = cayley_transform(n, point(2, k, 1, l, -1)).matrix;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rational lhs = qs.at(i, j) + qd.at(i, j);
                    Rational rhs = Rational(2) * (qa.at(i, j) + qb.at(i, j));
                    if (lhs != rhs)
                        return "parallelogram law fails at entry (" + std::to_string(i + 1) +
                               "," + std::to_string(j + 1) + ") for parameters u" +
                               std::to_string(k + 1) + ", u" + std::to_string(l + 1);
                }
        }
    }
    return "no two-parameter witness found";
}

const PolyMatrix& weyl_form_symbolic(int n) {
    if (n != 3 && n != 7)
        throw std::invalid_argument("cayley: closed quadratic form defined for n in {3, 7}, got " +
                                    std::to_string(n));

    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<int, PolyMatrix> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const int np = hurwitz::minor_param_count(n);
    VarList vars = u_vars(np);
    PolyMatrix s = hurwitz::minor_skew_symbolic(n);
    PolyMatrix s2 = s * s;

    // The closed form rests on S^3 = -(|u|^2 - u1^2) S; verify it rather
    // than assume it.
    MultiPoly sigma2 = skew_norm_sq(vars);
    if (!((s2 * s) == s.scale(-sigma2)))
        throw std::runtime_error("cayley: skew minor fails its cubic relation");

    MultiPoly r = norm_sq_poly(vars);
    MultiPoly u1 = MultiPoly::variable_at(vars, 0);
    PolyMatrix w = PolyMatrix::identity(n, MultiPoly::zero(vars)).scale(r) -
                   s.scale(Rational(2) * u1) + s2.scale(MultiPoly::constant(vars, Rational(2)));
    auto [pos, inserted] = cache.emplace(n, std::move(w));
    return pos->second;
}

ExactMatrix weyl_form(int n, const ParamVector& u) {
    const PolyMatrix& w = weyl_form_symbolic(n);
    check_param_length(u, hurwitz::minor_param_count(n), "cayley::weyl_form");
    return eval_matrix(w, u);
}

std::vector<MultiPoly> kernel_vector(int n) {
    if (n != 3 && n != 7)
        throw std::invalid_argument("cayley: kernel vector defined for n in {3, 7}");
    const int np = hurwitz::minor_param_count(n);
    VarList vars = u_vars(np);
    auto v = [&](int k, int sign) {
        MultiPoly p = MultiPoly::variable_at(vars, k - 1);
        return sign > 0 ? p : -p;
    };
    if (n == 3) return {v(4, 1), v(3, -1), v(2, 1)};
    return {v(8, 1), v(7, 1), v(6, -1), v(5, -1), v(4, 1), v(3, 1), v(2, -1)};
}

namespace {

PolyMatrix block_factor(int n, int vsign) {
    const int np = hurwitz::minor_param_count(n);
    VarList vars = u_vars(np);
    PolyMatrix ht = hurwitz::minor_full_symbolic(n).transpose();
    std::vector<MultiPoly> v = kernel_vector(n);
    PolyMatrix f(n + 1, n + 1, MultiPoly::zero(vars));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f.at(i, j) = ht.at(i, j);
    for (int i = 0; i < n; ++i) {
        MultiPoly vi = v[i];
        f.at(i, n) = vsign > 0 ? vi : -vi;    // last column: +/- V^t
        f.at(n, i) = vsign > 0 ? -vi : vi;    // last row: -/+ V
    }
    f.at(n, n) = MultiPoly::variable_at(vars, 0);
    return f;
}

}  // namespace

BlockIdentityReport block_identity(int n) {
    const int np = hurwitz::minor_param_count(n);
    VarList vars = u_vars(np);
    PolyMatrix product = block_factor(n, +1) * block_factor(n, -1);

    PolyMatrix expected(n + 1, n + 1, MultiPoly::zero(vars));
    const PolyMatrix& o = cayley_transform_symbolic(n).matrix;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) expected.at(i, j) = o.at(i, j);
    expected.at(n, n) = norm_sq_poly(vars);

    PolyMatrix residual = product - expected;
    bool passed = residual.is_zero();
    return {n, std::move(product), std::move(residual), passed};
}

ExactMatrix block_identity_product(int n, const ParamVector& u) {
    check_param_length(u, hurwitz::minor_param_count(n), "cayley::block_identity_product");
    PolyMatrix product = block_factor(n, +1) * block_factor(n, -1);
    return eval_matrix(product, u);
}

}  // namespace hcw::cayley
