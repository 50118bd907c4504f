#include "hcw/cartanweyl.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace hcw::cartanweyl {

AdjointElement sigma(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument("sigma: need 1 <= i < j <= n");
    return {n, i, j, sigma_matrix(n, i, j)};
}

ExactMatrix sigma_matrix(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument("sigma: need 1 <= i < j <= n");
    ExactMatrix m(n, n, Rational(0));
    m.at(i - 1, j - 1) = Rational(1);
    m.at(j - 1, i - 1) = Rational(-1);
    return m;
}

ExactMatrix sigma_signed(int n, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("sigma_signed: bad indices");
    ExactMatrix m(n, n, Rational(0));
    m.at(i - 1, j - 1) = Rational(1);
    m.at(j - 1, i - 1) = Rational(-1);
    return m;
}

ExactMatrix GeneratingMatrix::evaluate(const ParamVector& u) const {
    check_param_length(u, n, "GeneratingMatrix::evaluate");
    ExactMatrix m(n, n, Rational(0));
    for (int i = 0; i < n; ++i) m.at(i, i) = diag[i] * u[0];
    for (const auto& [k, combo] : coeffs)
        for (const auto& s : combo) {
            m.at(s.i - 1, s.j - 1) += s.coeff * u[k - 1];
            m.at(s.j - 1, s.i - 1) -= s.coeff * u[k - 1];
        }
    return m;
}

PolyMatrix GeneratingMatrix::to_poly() const {
    VarList vars = u_vars(n);
    PolyMatrix m(n, n, MultiPoly::zero(vars));
    MultiPoly u1 = MultiPoly::variable_at(vars, 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = u1 * diag[i];
    for (const auto& [k, combo] : coeffs) {
        MultiPoly uk = MultiPoly::variable_at(vars, k - 1);
        for (const auto& s : combo) {
            m.at(s.i - 1, s.j - 1) += uk * s.coeff;
            m.at(s.j - 1, s.i - 1) -= uk * s.coeff;
        }
    }
    return m;
}

ExactMatrix GeneratingMatrix::skew_coefficient(int k) const {
    ExactMatrix m(n, n, Rational(0));
    auto it = coeffs.find(k);
    if (it == coeffs.end()) return m;
    for (const auto& s : it->second) {
        m.at(s.i - 1, s.j - 1) += s.coeff;
        m.at(s.j - 1, s.i - 1) -= s.coeff;
    }
    return m;
}

GeneratingMatrix decompose_adjoint(const PolyMatrix& h) {
    const int n = h.dim();
    VarList vars = u_vars(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (h.at(i, j).vars() != vars)
                throw std::invalid_argument("decompose_adjoint: entries must live over u_1..u_n");
            for (const auto& [e, c] : h.at(i, j).terms()) {
                int deg = 0;
                for (uint8_t k : e) deg += k;
                if (deg != 1)
                    throw std::invalid_argument(
                        "decompose_adjoint: nonlinear or constant dependence on parameters");
            }
        }

    // coefficient matrix of u_k
    auto coeff_matrix = [&](int k) {
        ExactMatrix c(n, n, Rational(0));
        Expo e(n, 0);
        e[k - 1] = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto it = h.at(i, j).terms().find(e);
                if (it != h.at(i, j).terms().end()) c.at(i, j) = it->second;
            }
        return c;
    };

    GeneratingMatrix g;
    g.n = n;
    ExactMatrix c1 = coeff_matrix(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !c1.at(i, j).is_zero())
                throw std::invalid_argument("decompose_adjoint: u_1 coefficient is not diagonal");
    g.diag.reserve(n);
    for (int i = 0; i < n; ++i) g.diag.push_back(c1.at(i, i));

    for (int k = 2; k <= n; ++k) {
        ExactMatrix ck = coeff_matrix(k);
        if (!ck.is_antisymmetric())
            throw std::invalid_argument("decompose_adjoint: coefficient of u_" +
                                        std::to_string(k) + " is not antisymmetric");
        std::vector<SignedSigma> combo;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!ck.at(i, j).is_zero()) combo.push_back({i + 1, j + 1, ck.at(i, j)});
        if (!combo.empty()) g.coeffs.emplace(k, std::move(combo));
    }

    if (g.to_poly() != h)
        throw std::invalid_argument("decompose_adjoint: rebuild does not reproduce the input");
    return g;
}

ExactMatrix hadamard_sylvester(int m) {
    if (m < 1 || m > 4)
        throw std::invalid_argument("hadamard_sylvester: order exponent must be in [1, 4]");
    ExactMatrix h(2, 2, Rational(1));
    h.at(1, 1) = Rational(-1);
    for (int step = 1; step < m; ++step) {
        int d = h.dim();
        ExactMatrix next(2 * d, 2 * d, Rational(0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                next.at(i, j) = h.at(i, j);
                next.at(i, j + d) = h.at(i, j);
                next.at(i + d, j) = h.at(i, j);
                next.at(i + d, j + d) = -h.at(i, j);
            }
        h = std::move(next);
    }
    return h;
}

const hurwitz::Pattern& canonical_h8_pattern() {
    static const hurwitz::Pattern p = [] {
        const int rows[8][8] = {
            {1, -2, -3, -4, 5, -6, -7, -8},
            {2, 1, 4, -3, 6, 5, -8, 7},
            {3, -4, 1, 2, 7, 8, 5, -6},
            {4, 3, -2, 1, 8, -7, 6, 5},
            {-5, -6, -7, -8, 1, 2, 3, 4},
            {6, -5, -8, 7, -2, 1, -4, 3},
            {7, 8, -5, -6, -3, 4, 1, -2},
            {8, -7, 6, -5, -4, -3, 2, 1},
        };
        hurwitz::Pattern q(8, 8, 0);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) q.at(i, j) = rows[i][j];
        return q;
    }();
    return p;
}

PolyMatrix canonical_h8_poly() { return hurwitz::pattern_to_poly(canonical_h8_pattern(), 8); }

ExactMatrix printed_sign_matrix(int which) {
    if (which != 1 && which != 2)
        throw std::invalid_argument("printed_sign_matrix: which must be 1 or 2");
    const int m1[4][4] = {{1, 1, 1, 1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}};
    const int m2[4][4] = {{1, 1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}};
    ExactMatrix m(4, 4, Rational(0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = Rational(which == 1 ? m1[i][j] : m2[i][j]);
    return m;
}

const std::vector<std::pair<int, int>>& canonical_slots(int k) {
    static const std::map<int, std::vector<std::pair<int, int>>> slots = {
        {2, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}}, {3, {{1, 3}, {2, 4}, {5, 7}, {6, 8}}},
        {4, {{1, 4}, {2, 3}, {6, 7}, {5, 8}}}, {5, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}},
        {6, {{1, 6}, {2, 5}, {3, 8}, {4, 7}}}, {7, {{1, 7}, {2, 8}, {3, 5}, {4, 6}}},
        {8, {{1, 8}, {2, 7}, {3, 6}, {4, 5}}},
    };
    auto it = slots.find(k);
    if (it == slots.end())
        throw std::invalid_argument("canonical_slots: k must be in 2..8");
    return it->second;
}

namespace {

// Spin-pair generating matrices fixed by the printed 4x4 blocks.
GeneratingMatrix spin_pair_matrix(int which) {
    GeneratingMatrix g;
    g.n = 4;
    g.diag.assign(4, Rational(1));
    Rational one(1), neg(-1);
    if (which == 1) {  // u2 S12+S34, u3 S13-S24, u4 S14+S23
        g.coeffs[2] = {{1, 2, one}, {3, 4, one}};
        g.coeffs[3] = {{1, 3, one}, {2, 4, neg}};
        g.coeffs[4] = {{1, 4, one}, {2, 3, one}};
    } else {  // u2 S12-S34, u3 S13+S24, u4 S14-S23
        g.coeffs[2] = {{1, 2, one}, {3, 4, neg}};
        g.coeffs[3] = {{1, 3, one}, {2, 4, one}};
        g.coeffs[4] = {{1, 4, one}, {2, 3, neg}};
    }
    return g;
}

// Canonical bracket signs of the printed 8x8 matrix, rows of the two sign
// matrices in parameter order.
std::vector<Rational> sign_row(const ExactMatrix& m, int row) {
    std::vector<Rational> r;
    for (int j = 0; j < m.cols(); ++j) r.push_back(m.at(row, j));
    return r;
}

std::vector<GeneratingMatrix> build_generating_8() {
    ExactMatrix m1 = printed_sign_matrix(1);
    ExactMatrix m2 = printed_sign_matrix(2);
    std::vector<GeneratingMatrix> out;
    for (int i = 0; i < 4; ++i) {
        GeneratingMatrix g;
        g.n = 8;
        // u1 bracket: diagonal pairs (j, j), (j+4, j+4) with the cycled sign
        // row of the first group.
        std::vector<Rational> drow = sign_row(m1, i % 4);
        g.diag.assign(8, Rational(0));
        for (int j = 0; j < 4; ++j) {
            g.diag[j] = drow[j];
            g.diag[j + 4] = drow[j];
        }
        for (int k = 2; k <= 8; ++k) {
            int pos = (k - 1) % 4;  // row of the group's sign matrix for H^1
            const ExactMatrix& m = (k <= 4) ? m1 : m2;
            std::vector<Rational> row = sign_row(m, (pos + i) % 4);
            std::vector<SignedSigma> combo;
            const auto& slots = canonical_slots(k);
            for (int s = 0; s < 4; ++s)
                combo.push_back({slots[s].first, slots[s].second, row[s]});
            g.coeffs.emplace(k, std::move(combo));
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<GeneratingMatrix> build_generating_16() {
    // Slot groups from the block doubling of the canonical 8x8 pattern,
    // scanned row-major; signs replaced by Sylvester-Hadamard rows, cycled.
    hurwitz::Pattern a = canonical_h8_pattern();
    hurwitz::Pattern p(16, 16, 0);
    // same doubling rule as the parameter patterns: B = E A(b), D = E A^t E
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int av = a.at(i, j);
            int bv = (av > 0 ? av + 8 : av - 8);
            if (i > 0) bv = -bv;  // E on the left
            p.at(i, j) = av;
            p.at(i, j + 8) = bv;
            p.at(j + 8, i) = -bv;
            int dv = a.at(j, i);
            if ((i == 0) != (j == 0)) dv = -dv;  // E ... E
            p.at(i + 8, j + 8) = dv;
        }

    std::map<int, std::vector<std::pair<int, int>>> slots;
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) {
            int k = std::abs(p.at(i, j));
            if (k >= 2) slots[k].push_back({i + 1, j + 1});
        }

    ExactMatrix had = hadamard_sylvester(3);  // 8x8 sign rows, one per slot
    std::vector<GeneratingMatrix> out;
    for (int i = 0; i < 8; ++i) {
        GeneratingMatrix g;
        g.n = 16;
        std::vector<Rational> drow = sign_row(had, i % 8);
        g.diag.assign(16, Rational(0));
        for (int j = 0; j < 8; ++j) {
            g.diag[j] = drow[j];
            g.diag[j + 8] = drow[j];
        }
        for (int k = 2; k <= 16; ++k) {
            int pos = (k - 1) % 8;
            std::vector<Rational> row = sign_row(had, (pos + i) % 8);
            const auto& sl = slots.at(k);
            std::vector<SignedSigma> combo;
            for (int s = 0; s < 8; ++s) combo.push_back({sl[s].first, sl[s].second, row[s]});
            g.coeffs.emplace(k, std::move(combo));
        }
        out.push_back(std::move(g));
    }
    return out;
}

void check_span(int n, const std::vector<GeneratingMatrix>& mats) {
    SpanTracker tracker(n * n);
    for (const auto& g : mats)
        for (int k = 2; k <= n; ++k) tracker.insert(flatten(g.skew_coefficient(k)));
    int expected = n * (n - 1) / 2;
    if (tracker.rank() != expected)
        throw std::runtime_error("generating_matrices: extracted generators span rank " +
                                 std::to_string(tracker.rank()) + " instead of " +
                                 std::to_string(expected) + "; construction rejected");
}

std::mutex cache_mutex;

}  // namespace

const std::vector<GeneratingMatrix>& generating_matrices(int n) {
    if (n != 4 && n != 8 && n != 16)
        throw std::invalid_argument("generating_matrices: n must be 4, 8 or 16");
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<int, std::vector<GeneratingMatrix>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<GeneratingMatrix> mats;
    if (n == 4) mats = {spin_pair_matrix(1), spin_pair_matrix(2)};
    else if (n == 8) mats = build_generating_8();
    else mats = build_generating_16();
    check_span(n, mats);
    return cache.emplace(n, std::move(mats)).first->second;
}

ExactMatrix hat_S(int a, int n) {
    if (a < 1 || a > 3 || n < 4) throw std::invalid_argument("hat_S: bad arguments");
    ExactMatrix m(n, n, Rational(0));
    auto put = [&](int i, int j, int s) {
        m.at(i - 1, j - 1) = Rational(s);
        m.at(j - 1, i - 1) = Rational(-s);
    };
    if (a == 3) { put(1, 2, 1); put(3, 4, 1); }
    else if (a == 2) { put(1, 3, 1); put(2, 4, -1); }
    else { put(1, 4, 1); put(2, 3, 1); }
    return m;
}

ExactMatrix hat_T(int a, int n) {
    if (a < 1 || a > 3 || n < 4) throw std::invalid_argument("hat_T: bad arguments");
    ExactMatrix m(n, n, Rational(0));
    auto put = [&](int i, int j, int s) {
        m.at(i - 1, j - 1) = Rational(s);
        m.at(j - 1, i - 1) = Rational(-s);
    };
    if (a == 3) { put(1, 2, 1); put(3, 4, -1); }
    else if (a == 2) { put(1, 3, 1); put(2, 4, 1); }
    else { put(1, 4, 1); put(2, 3, -1); }
    return m;
}

GeneratorSet so5_generators() {
    GeneratorSet g;
    g.n = 5;
    auto add = [&](const std::string& label, ExactMatrix m) {
        g.labels.push_back(label);
        g.generators.push_back(std::move(m));
    };
    // spins from the rotation planes: S_a self-paired, T_a with the mirror
    // sign, and the four fifth-axis rotations
    add("S_1", sigma_matrix(5, 2, 3) + sigma_matrix(5, 1, 4));
    add("S_2", -sigma_matrix(5, 1, 3) + sigma_matrix(5, 2, 4));
    add("S_3", sigma_matrix(5, 1, 2) + sigma_matrix(5, 3, 4));
    add("T_1", sigma_matrix(5, 2, 3) - sigma_matrix(5, 1, 4));
    add("T_2", -sigma_matrix(5, 1, 3) - sigma_matrix(5, 2, 4));
    add("T_3", sigma_matrix(5, 1, 2) - sigma_matrix(5, 3, 4));
    add("U_1", sigma_matrix(5, 1, 5));
    add("U_2", sigma_matrix(5, 2, 5));
    add("V_1", sigma_matrix(5, 3, 5));
    add("V_2", sigma_matrix(5, 4, 5));
    return g;
}

GeneratorSet generators_from_generating_matrices(int n) {
    const auto& mats = generating_matrices(n);
    GeneratorSet g;
    g.n = n;
    for (size_t i = 0; i < mats.size(); ++i)
        for (int k = 2; k <= n; ++k) {
            g.labels.push_back("G[" + std::to_string(i + 1) + "][u_" + std::to_string(k) + "]");
            g.generators.push_back(mats[i].skew_coefficient(k));
        }
    return g;
}

CommutatorTable commutator_table(const GeneratorSet& g) {
    const int n = g.n;
    SpanTracker tracker(n * n);
    for (const auto& m : g.generators) {
        if (!m.is_antisymmetric())
            throw std::invalid_argument("commutator_table: generators must be antisymmetric");
        tracker.insert(flatten(m));
    }

    CommutatorTable table;
    table.size = static_cast<int>(g.generators.size());
    table.closed = true;
    for (int a = 0; a < table.size; ++a)
        for (int b = a + 1; b < table.size; ++b) {
            ExactMatrix comm = g.generators[a] * g.generators[b] - g.generators[b] * g.generators[a];
            auto coords = tracker.coordinates(flatten(comm));
            CommutatorEntry e;
            e.a = a;
            e.b = b;
            e.in_span = coords.has_value();
            if (coords) e.coeffs = std::move(*coords);
            else table.closed = false;
            table.entries.push_back(std::move(e));
        }
    return table;
}

int lie_closure_rank(const GeneratorSet& g) {
    if (g.generators.empty()) throw std::invalid_argument("lie_closure_rank: empty set");
    const int n = g.n;
    const int full_skew = n * (n - 1) / 2;
    bool all_skew = true;
    for (const auto& m : g.generators) all_skew = all_skew && m.is_antisymmetric();

    SpanTracker tracker(n * n);
    std::vector<ExactMatrix> basis;
    for (const auto& m : g.generators)
        if (tracker.insert(flatten(m))) basis.push_back(m);

    size_t processed = 0;
    while (true) {
        if (all_skew && tracker.rank() == full_skew) break;  // already the whole skew space
        size_t old_size = basis.size();
        for (size_t a = 0; a < old_size; ++a) {
            size_t b_start = (a >= processed) ? a + 1 : processed;
            for (size_t b = b_start; b < old_size; ++b) {
                ExactMatrix comm = basis[a] * basis[b] - basis[b] * basis[a];
                if (tracker.insert(flatten(comm))) basis.push_back(comm);
            }
        }
        if (basis.size() == old_size) break;
        processed = old_size;
    }
    return tracker.rank();
}

namespace {

GaussMatrix realized_l(int n, int i, int j) {
    // L_ij = -i Sigma_ij, antisymmetric extension for any i != j; zero for
    // i == j.
    GaussMatrix m(n, n, GaussianRational(0));
    if (i == j) return m;
    GaussianRational minus_i(Rational(0), Rational(-1));
    ExactMatrix s = sigma_signed(n, i, j);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!s.at(r, c).is_zero()) m.at(r, c) = minus_i * GaussianRational(s.at(r, c));
    return m;
}

int rule_mismatches(int n, bool corrected) {
    GaussianRational iota(Rational(0), Rational(1));
    int mismatches = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    GaussMatrix lij = realized_l(n, i, j);
                    GaussMatrix lkl = realized_l(n, k, l);
                    GaussMatrix truth = lij * lkl - lkl * lij;
                    auto delta = [](int a, int b) { return a == b ? 1 : 0; };
                    GaussMatrix rhs(n, n, GaussianRational(0));
                    if (corrected) {
                        // delta_ik L_jl + delta_jl L_ik - delta_il L_jk - delta_jk L_il
                        if (delta(i, k)) rhs = rhs + realized_l(n, j, l);
                        if (delta(j, l)) rhs = rhs + realized_l(n, i, k);
                        if (delta(i, l)) rhs = rhs - realized_l(n, j, k);
                        if (delta(j, k)) rhs = rhs - realized_l(n, i, l);
                    } else {
                        // as printed: delta_ik L_jl + delta_jk L_ik
                        //             - delta_il L_jk - delta_jl L_il
                        if (delta(i, k)) rhs = rhs + realized_l(n, j, l);
                        if (delta(j, k)) rhs = rhs + realized_l(n, i, k);
                        if (delta(i, l)) rhs = rhs - realized_l(n, j, k);
                        if (delta(j, l)) rhs = rhs - realized_l(n, i, l);
                    }
                    GaussMatrix scaled(n, n, GaussianRational(0));
                    for (int r = 0; r < n; ++r)
                        for (int c = 0; c < n; ++c) scaled.at(r, c) = iota * rhs.at(r, c);
                    if (!(truth == scaled)) ++mismatches;
                }
    return mismatches;
}

}  // namespace

int printed_rule_mismatch_count(int n) { return rule_mismatches(n, false); }
int corrected_rule_mismatch_count(int n) { return rule_mismatches(n, true); }

}  // namespace hcw::cartanweyl
