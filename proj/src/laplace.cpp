#include "hcw/laplace.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "hcw/linalg.hpp"
#include "hcw/matrix.hpp"

namespace hcw::laplace {

MultiPoly laplacian(const MultiPoly& p) {
    MultiPoly acc = MultiPoly::zero(p.vars());
    for (int i = 0; i < p.nvars(); ++i) acc += p.partial_at(i).partial_at(i);
    return acc;
}

MultiPoly laplacian(const MultiPoly& p, const std::vector<VarId>& vars) {
    MultiPoly acc = MultiPoly::zero(p.vars());
    for (const VarId& v : vars) acc += p.partial(v).partial(v);
    return acc;
}

bool supported_target(int n) { return n == 2 || n == 3 || n == 5 || n == 9; }

const ksmap::QuadraticMap& map_for(int n, Side side) {
    if (!supported_target(n))
        throw std::invalid_argument("laplace: unsupported target dimension " + std::to_string(n));
    if (n == 2) return ksmap::levi_civita_map(side);
    return ksmap::map_for(n, side);
}

namespace {

// Memoized composition engine for one quadratic map: caches x^alpha o map
// and the u-Laplacian of each cached composition.
class FactorizationEngine {
public:
    explicit FactorizationEngine(const ksmap::QuadraticMap& map) : map_(map) {
        uvars_ = map.components.front().vars();
    }

    LaplaceReport verify(const MultiPoly& f) {
        VarList expect = x_vars(map_.n_target);
        if (f.vars() != expect)
            throw std::invalid_argument("laplace: test polynomial must live over x_1..x_" +
                                        std::to_string(map_.n_target));

        MultiPoly lhs = MultiPoly::zero(uvars_);
        for (const auto& [e, c] : f.terms()) lhs += lap_comp(e) * c;

        MultiPoly g = laplacian(f);
        MultiPoly composed_g = MultiPoly::zero(uvars_);
        for (const auto& [e, c] : g.terms()) composed_g += comp(e) * c;
        MultiPoly rhs = norm_sq_poly(uvars_) * Rational(4) * composed_g;

        MultiPoly residual = lhs - rhs;
        bool passed = residual.is_zero();
        return {map_.n_target, map_.side, f, std::move(lhs), std::move(rhs),
                std::move(residual), passed};
    }

private:
    const MultiPoly& comp(const Expo& e) {
        auto it = comp_.find(e);
        if (it != comp_.end()) return it->second;
        MultiPoly value = MultiPoly::zero(uvars_);
        bool all_zero = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                Expo d = e;
                d[i] -= 1;
                value = comp(d) * map_.components[i];
                all_zero = false;
                break;
            }
        }
        if (all_zero) value = MultiPoly::constant(uvars_, Rational(1));
        return comp_.emplace(e, std::move(value)).first->second;
    }

    const MultiPoly& lap_comp(const Expo& e) {
        auto it = lap_.find(e);
        if (it != lap_.end()) return it->second;
        MultiPoly value = laplacian(comp(e));
        return lap_.emplace(e, std::move(value)).first->second;
    }

    const ksmap::QuadraticMap& map_;
    VarList uvars_;
    std::map<Expo, MultiPoly> comp_;
    std::map<Expo, MultiPoly> lap_;
};

std::mutex engine_mutex;

}  // namespace

LaplaceReport verify_factorization(int n, Side side, const MultiPoly& f) {
    const ksmap::QuadraticMap& map = laplace::map_for(n, side);
    std::lock_guard<std::mutex> lock(engine_mutex);
    static std::map<std::pair<int, int>, FactorizationEngine> engines;
    auto key = std::make_pair(n, static_cast<int>(side));
    auto it = engines.find(key);
    if (it == engines.end()) it = engines.emplace(key, FactorizationEngine(map)).first;
    return it->second.verify(f);
}

LaplaceReport verify_factorization_with_map(const ksmap::QuadraticMap& map, const MultiPoly& f) {
    FactorizationEngine engine(map);
    return engine.verify(f);
}

std::vector<MultiPoly> harmonic_monomial_suite(int n, int max_degree) {
    if (max_degree > 3) throw std::invalid_argument("laplace: out of desk scale (degree > 3)");
    if (max_degree < 1) throw std::invalid_argument("laplace: max_degree must be at least 1");
    if (n < 2) throw std::invalid_argument("laplace: need at least two variables");

    VarList vars = x_vars(n);
    std::vector<MultiPoly> out;

    for (int i = 0; i < n; ++i) out.push_back(MultiPoly::variable_at(vars, i));

    if (max_degree >= 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                out.push_back(MultiPoly::variable_at(vars, i) * MultiPoly::variable_at(vars, j));
        for (int i = 0; i + 1 < n; ++i) {
            MultiPoly a = MultiPoly::variable_at(vars, i);
            MultiPoly b = MultiPoly::variable_at(vars, i + 1);
            out.push_back(a * a - b * b);
        }
    }

    if (max_degree >= 3) {
        // Exact null space of the Laplacian on the degree-3 monomial space.
        std::vector<Expo> monos;
        Expo e(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                for (int k = j; k < n; ++k) {
                    std::fill(e.begin(), e.end(), 0);
                    e[i] += 1;
                    e[j] += 1;
                    e[k] += 1;
                    monos.push_back(e);
                }
        ExactMatrix lap(n, static_cast<int>(monos.size()), Rational(0));
        for (size_t c = 0; c < monos.size(); ++c) {
            const Expo& m = monos[c];
            for (int i = 0; i < n; ++i) {
                if (m[i] < 2) continue;
                // second derivative drops two powers of x_i, leaving x_k
                int rest = -1;
                for (int k = 0; k < n; ++k) {
                    int deg = m[k] - (k == i ? 2 : 0);
                    if (deg == 1) rest = k;
                }
                lap.at(rest, static_cast<int>(c)) += Rational(m[i] * (m[i] - 1));
            }
        }
        for (const auto& coeffs : null_space(lap)) {
            MultiPoly p = MultiPoly::zero(vars);
            for (size_t i = 0; i < coeffs.size(); ++i)
                if (!coeffs[i].is_zero()) p.add_term(monos[i], coeffs[i]);
            out.push_back(std::move(p));
        }
    }
    return out;
}

ksmap::QuadraticMap corrupted_map_n3() {
    ksmap::QuadraticMap m = ksmap::last_column_map(3);
    VarList vars = u_vars(4);
    MultiPoly u1 = MultiPoly::variable_at(vars, 0);
    MultiPoly u2 = MultiPoly::variable_at(vars, 1);
    MultiPoly u3 = MultiPoly::variable_at(vars, 2);
    MultiPoly u4 = MultiPoly::variable_at(vars, 3);
    // genuine first component: -2 u1 u3 + 2 u2 u4; flip the second sign
    m.components[0] = u1 * u3 * Rational(-2) - u2 * u4 * Rational(2);
    return m;
}

PolyMatrix jacobian_gram(const ksmap::QuadraticMap& map) {
    const VarList& vars = map.components.front().vars();
    const int n = static_cast<int>(map.components.size());
    const int N = static_cast<int>(vars.size());

    std::vector<std::vector<MultiPoly>> jac(n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < N; ++i) jac[k].push_back(map.components[k].partial_at(i));

    PolyMatrix g(n, n, MultiPoly::zero(vars));
    for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l) {
            MultiPoly s = MultiPoly::zero(vars);
            for (int i = 0; i < N; ++i) s += jac[k][i] * jac[l][i];
            g.at(k, l) = s;
            if (l != k) g.at(l, k) = std::move(s);
        }
    return g;
}

}  // namespace hcw::laplace
