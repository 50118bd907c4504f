#include "hcw/ksmap.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "hcw/hurwitz.hpp"
#include "hcw/matrix.hpp"

namespace hcw::ksmap {

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

bool supported_target(int n) { return n == 3 || n == 5 || n == 9; }

MultiPoly first_half_norm_sq(const VarList& vars) {
    MultiPoly s = MultiPoly::zero(vars);
    for (int i = 0; i < static_cast<int>(vars.size()) / 2; ++i) {
        MultiPoly v = MultiPoly::variable_at(vars, i);
        s += v * v;
    }
    return s;
}

MultiPoly second_half_norm_sq(const VarList& vars) {
    MultiPoly s = MultiPoly::zero(vars);
    for (int i = static_cast<int>(vars.size()) / 2; i < static_cast<int>(vars.size()); ++i) {
        MultiPoly v = MultiPoly::variable_at(vars, i);
        s += v * v;
    }
    return s;
}

namespace {

QuadraticMap build_map(int n, Side side) {
    const int m = n - 1;
    const int N = 2 * m;
    VarList vars = u_vars(N);

    PolyMatrix h = hurwitz::pattern_to_poly(hurwitz::pattern(m), N);
    PolyMatrix v(m, 1, MultiPoly::zero(vars));
    for (int i = 0; i < m; ++i) v.at(i, 0) = MultiPoly::variable_at(vars, m + i);

    PolyMatrix top = (side == Side::right) ? h.transpose() * v : h * v;
    Rational factor(side == Side::right ? -2 : 2);

    QuadraticMap q{n, N, side, {}};
    q.components.reserve(n);
    for (int i = 0; i < m; ++i) q.components.push_back(top.at(i, 0) * factor);
    q.components.push_back(first_half_norm_sq(vars) - second_half_norm_sq(vars));
    return q;
}

QuadraticMap build_levi_civita(Side side) {
    VarList vars = u_vars(2);
    MultiPoly u1 = MultiPoly::variable_at(vars, 0);
    MultiPoly u2 = MultiPoly::variable_at(vars, 1);
    QuadraticMap q{2, 2, side, {}};
    MultiPoly cross = u1 * u2 * Rational(2);
    q.components.push_back(side == Side::right ? -cross : cross);
    q.components.push_back(u1 * u1 - u2 * u2);
    return q;
}

std::mutex cache_mutex;

}  // namespace

const QuadraticMap& map_for(int n, Side side) {
    if (!supported_target(n))
        throw std::invalid_argument("ksmap: unsupported target dimension " + std::to_string(n));
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<std::pair<int, int>, QuadraticMap> cache;
    auto key = std::make_pair(n, static_cast<int>(side));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_map(n, side)).first;
    return it->second;
}

const QuadraticMap& last_column_map(int n) { return map_for(n, Side::right); }
const QuadraticMap& last_row_map(int n) { return map_for(n, Side::left); }

const QuadraticMap& levi_civita_map(Side side) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<int, QuadraticMap> cache;
    auto it = cache.find(static_cast<int>(side));
    if (it == cache.end())
        it = cache.emplace(static_cast<int>(side), build_levi_civita(side)).first;
    return it->second;
}

std::vector<Rational> apply_map(const QuadraticMap& m, const ParamVector& u) {
    check_param_length(u, m.n_source, "ksmap::apply_map");
    std::vector<Rational> x;
    x.reserve(m.components.size());
    for (const auto& c : m.components) x.push_back(c.eval(u));
    return x;
}

std::vector<double> apply_map(const QuadraticMap& m, const std::vector<double>& u) {
    if (static_cast<int>(u.size()) != m.n_source)
        throw std::invalid_argument("ksmap: point length mismatch");
    std::vector<double> x;
    x.reserve(m.components.size());
    for (const auto& c : m.components) x.push_back(c.eval_double(u));
    return x;
}

}  // namespace hcw::ksmap
