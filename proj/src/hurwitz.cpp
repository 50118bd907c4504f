#include "hcw/hurwitz.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace hcw::hurwitz {

namespace {

// Shift parameter indices by m (u_k -> u_{k+m}).
Pattern shift_vars(const Pattern& p, int m) {
    Pattern q = p;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j)
            q.at(i, j) = p.at(i, j) > 0 ? p.at(i, j) + m : p.at(i, j) - m;
    return q;
}

// E = diag(1, -1, ..., -1) applied on the left (negate rows 2..m).
Pattern conj_rows(const Pattern& p) {
    Pattern q = p;
    for (int i = 1; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) q.at(i, j) = -p.at(i, j);
    return q;
}

// E ... E on both sides: negate exactly the first row and first column
// except the (1,1) corner.
Pattern conj_both(const Pattern& p) {
    Pattern q = p;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j)
            if ((i == 0) != (j == 0)) q.at(i, j) = -p.at(i, j);
    return q;
}

Pattern transpose(const Pattern& p) { return p.transpose(); }

Pattern negate(const Pattern& p) {
    Pattern q = p;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) q.at(i, j) = -p.at(i, j);
    return q;
}

// One doubling step: given the m x m pattern A in u_1..u_m, produce the
// 2m x 2m pattern in u_1..u_2m with blocks
//   [ A          B      ]
//   [ -B^t   E A^t E    ]      B = E * A(u_{m+1}..u_{2m}).
Pattern double_pattern(const Pattern& a) {
    const int m = a.dim();
    Pattern b = conj_rows(shift_vars(a, m));
    Pattern d = conj_both(transpose(a));
    Pattern nbt = negate(transpose(b));

    Pattern out(2 * m, 2 * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            out.at(i, j) = a.at(i, j);
            out.at(i, j + m) = b.at(i, j);
            out.at(i + m, j) = nbt.at(i, j);
            out.at(i + m, j + m) = d.at(i, j);
        }
    return out;
}

bool poly_orthogonality_holds(const PolyMatrix& h, int nparams) {
    VarList vars = u_vars(nparams);
    MultiPoly r = norm_sq_poly(vars);
    PolyMatrix target = PolyMatrix::identity(h.dim(), MultiPoly::zero(vars)).scale(r);
    return h * h.transpose() == target;
}

bool numeric_orthogonality_holds(const Pattern& p, const ParamVector& u) {
    ExactMatrix h = eval_pattern(p, u);
    ExactMatrix target = ExactMatrix::identity(h.dim(), Rational(0)).scale(norm_sq(u));
    return h * h.transpose() == target;
}

}  // namespace

const Pattern& pattern(int m) {
    static const std::map<int, Pattern> cache = [] {
        std::map<int, Pattern> c;
        Pattern h2(2, 2, 0);
        h2.at(0, 0) = 1;
        h2.at(0, 1) = 2;
        h2.at(1, 0) = -2;
        h2.at(1, 1) = 1;
        c.emplace(2, h2);
        c.emplace(4, double_pattern(c.at(2)));
        c.emplace(8, double_pattern(c.at(4)));
        c.emplace(16, double_pattern(c.at(8)));
        return c;
    }();
    auto it = cache.find(m);
    if (it == cache.end())
        throw std::invalid_argument("hurwitz: unsupported dimension " + std::to_string(m));
    return it->second;
}

int ambient_dim(int n) {
    for (int m : {2, 4, 8, 16})
        if (n <= m) return m;
    throw std::invalid_argument("hurwitz: no ambient pattern for n = " + std::to_string(n));
}

int minor_param_count(int n) {
    Pattern p = principal_minor_pattern(n);
    int maxk = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) maxk = std::max(maxk, std::abs(p.at(i, j)));
    return maxk;
}

Pattern principal_minor_pattern(int n) {
    const Pattern& amb = pattern(ambient_dim(n));
    Pattern p(n, n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.at(i, j) = amb.at(i, j);
    return p;
}

ExactMatrix eval_pattern(const Pattern& p, const ParamVector& u) {
    ExactMatrix m(p.rows(), p.cols(), Rational(0));
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) {
            int s = p.at(i, j);
            if (s == 0) continue;
            int k = std::abs(s);
            if (k > static_cast<int>(u.size()))
                throw std::invalid_argument("hurwitz: parameter vector too short for pattern");
            m.at(i, j) = s > 0 ? u[k - 1] : -u[k - 1];
        }
    return m;
}

PolyMatrix pattern_to_poly(const Pattern& p, int nparams) {
    VarList vars = u_vars(nparams);
    MultiPoly z = MultiPoly::zero(vars);
    PolyMatrix m(p.rows(), p.cols(), z);
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) {
            int s = p.at(i, j);
            if (s == 0) continue;
            MultiPoly v = MultiPoly::variable_at(vars, std::abs(s) - 1);
            m.at(i, j) = s > 0 ? v : -v;
        }
    return m;
}

bool doubling_is_orthogonal() {
    static std::once_flag flag;
    static bool result = false;
    std::call_once(flag, [] {
        // Candidate sign variants around the canonical doubling: the B block
        // may carry the row conjugation on either side, either sign, with or
        // without a transpose, and the diagonal block may repeat A itself.
        const Pattern a = pattern(8);
        const int m = 8;
        Pattern hb = shift_vars(a, m);
        std::vector<Pattern> bs;
        for (const Pattern& base : {conj_rows(hb), conj_rows(transpose(hb)),
                                    transpose(conj_rows(hb)), hb, transpose(hb)}) {
            bs.push_back(base);
            bs.push_back(negate(base));
        }
        std::vector<Pattern> ds = {conj_both(transpose(a)), a, conj_both(a), transpose(a)};

        // Cheap numeric rejection at fixed probe points, then the symbolic
        // identity for any survivor.
        ParamVector probe1, probe2;
        for (int i = 0; i < 16; ++i) {
            probe1.push_back(Rational(2 * i + 1, i + 2));
            probe2.push_back(Rational((i % 5) - 2, 1 + (i % 3)));
        }
        for (const Pattern& b : bs) {
            for (const Pattern& d : ds) {
                Pattern cand(16, 16, 0);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        cand.at(i, j) = a.at(i, j);
                        cand.at(i, j + m) = b.at(i, j);
                        cand.at(i + m, j) = -b.at(j, i);
                        cand.at(i + m, j + m) = d.at(i, j);
                    }
                if (!numeric_orthogonality_holds(cand, probe1)) continue;
                if (!numeric_orthogonality_holds(cand, probe2)) continue;
                if (poly_orthogonality_holds(pattern_to_poly(cand, 16), 16)) {
                    result = true;
                    return;
                }
            }
        }
        result = false;
    });
    return result;
}

namespace {

void check_supported_build(int n) {
    if (n != 2 && n != 4 && n != 8 && n != 16)
        throw std::invalid_argument("hurwitz: unsupported dimension " + std::to_string(n));
    if (n == 16 && !doubling_is_orthogonal())
        throw std::domain_error(
            "hurwitz: no sign variant of the 16x16 block doubling satisfies "
            "H*H^t = |u|^2 I; a bilinear sixteen-square composition does not "
            "exist, so the n = 16 build is rejected");
}

}  // namespace

ExactMatrix build_hurwitz(int n, const ParamVector& u) {
    check_supported_build(n);
    check_param_length(u, n, "hurwitz::build_hurwitz");
    return eval_pattern(pattern(n), u);
}

PolyMatrix build_hurwitz_symbolic(int n) {
    check_supported_build(n);
    return pattern_to_poly(pattern(n), n);
}

ExactMatrix skew_part(int n, const ParamVector& u) {
    check_supported_build(n);
    check_param_length(u, n, "hurwitz::skew_part");
    ParamVector v = u;
    v[0] = Rational(0);
    return eval_pattern(pattern(n), v);
}

PolyMatrix skew_part_symbolic(int n) {
    check_supported_build(n);
    Pattern p = pattern(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(p.at(i, j)) == 1) p.at(i, j) = 0;
    return pattern_to_poly(p, n);
}

namespace {

void check_minor_dim(int n) {
    if (n != 2 && n != 3 && n != 5 && n != 7 && n != 9)
        throw std::invalid_argument("hurwitz: unsupported minor dimension " + std::to_string(n));
}

}  // namespace

PolyMatrix minor_skew_symbolic(int n) {
    check_minor_dim(n);
    Pattern p = principal_minor_pattern(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(p.at(i, j)) == 1) p.at(i, j) = 0;
    return pattern_to_poly(p, minor_param_count(n));
}

ExactMatrix minor_skew(int n, const ParamVector& u) {
    check_minor_dim(n);
    check_param_length(u, minor_param_count(n), "hurwitz::minor_skew");
    ParamVector v = u;
    v[0] = Rational(0);
    return eval_pattern(principal_minor_pattern(n), v);
}

PolyMatrix minor_full_symbolic(int n) {
    check_minor_dim(n);
    return pattern_to_poly(principal_minor_pattern(n), minor_param_count(n));
}

ExactMatrix minor_full(int n, const ParamVector& u) {
    check_minor_dim(n);
    check_param_length(u, minor_param_count(n), "hurwitz::minor_full");
    return eval_pattern(principal_minor_pattern(n), u);
}

ExactMatrix coefficient_matrix(const Pattern& p, int k) {
    ExactMatrix c(p.rows(), p.cols(), Rational(0));
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) {
            if (p.at(i, j) == k) c.at(i, j) = Rational(1);
            else if (p.at(i, j) == -k) c.at(i, j) = Rational(-1);
        }
    return c;
}

std::vector<ExactMatrix> clifford_factors(int n) {
    if (n != 4 && n != 8 && n != 16)
        throw std::invalid_argument("hurwitz: clifford factors need n in {4, 8, 16}, got " +
                                    std::to_string(n));
    if (n == 16 && !doubling_is_orthogonal())
        throw std::domain_error(
            "hurwitz: the 16x16 doubling is not orthogonal, so no family of 15 "
            "anticommuting factors exists; n = 16 is rejected");
    const Pattern& p = pattern(n);
    std::vector<ExactMatrix> gammas;
    gammas.reserve(n - 1);
    for (int k = 2; k <= n; ++k)
        gammas.push_back((-coefficient_matrix(p, k)).transpose());
    return gammas;
}

}  // namespace hcw::hurwitz
