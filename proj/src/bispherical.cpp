#include "hcw/bispherical.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hcw::bispherical {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void check_l(int l) {
    if (l < 0 || l > 2) throw std::invalid_argument("bispherical: out of desk scale (l > 2)");
}

using RealMat = std::vector<std::vector<double>>;

RealMat real_identity(int d) {
    RealMat m(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i) m[i][i] = 1.0;
    return m;
}

RealMat real_mul(const RealMat& a, const RealMat& b) {
    int d = static_cast<int>(a.size());
    RealMat c(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

}  // namespace

namespace {

RealMat small_d_any(int l, double theta) {
    const int d = 2 * l + 1;
    // M = (theta / 2) (J_- - J_+): real, and exp(M) = exp(-i theta J_y)
    RealMat m(d, std::vector<double>(d, 0.0));
    for (int r = 0; r + 1 < d; ++r) {
        int mm = l - r;  // row r holds m = l - r
        // raising connects m-1 -> m: entry (r, r+1)
        double cp = std::sqrt(static_cast<double>(l * (l + 1) - (mm - 1) * mm));
        // lowering connects m -> m-1: entry (r+1, r)
        double cm = std::sqrt(static_cast<double>(l * (l + 1) - mm * (mm - 1)));
        m[r][r + 1] = -(theta / 2) * cp;
        m[r + 1][r] = (theta / 2) * cm;
    }

    // scaling and squaring with a plain Taylor series; dimensions <= 5
    double norm = 0.0;
    for (const auto& row : m) {
        double s = 0.0;
        for (double v : row) s += std::fabs(v);
        norm = std::max(norm, s);
    }
    int squarings = 0;
    while (norm > 0.5) {
        norm /= 2;
        ++squarings;
    }
    double scale = std::ldexp(1.0, -squarings);
    for (auto& row : m)
        for (double& v : row) v *= scale;

    RealMat result = real_identity(d);
    RealMat term = real_identity(d);
    double factorial = 1.0;
    for (int k = 1; k <= 24; ++k) {
        term = real_mul(term, m);
        factorial *= k;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) result[i][j] += term[i][j] / factorial;
    }
    for (int s = 0; s < squarings; ++s) result = real_mul(result, result);
    return result;
}

std::vector<std::vector<std::complex<double>>> wigner_D_any(int l, double psi, double theta,
                                                            double phi) {
    const int d = 2 * l + 1;
    RealMat small = small_d_any(l, theta);
    std::vector<std::vector<std::complex<double>>> out(
        d, std::vector<std::complex<double>>(d, 0.0));
    for (int r = 0; r < d; ++r) {
        int mr = l - r;
        for (int c = 0; c < d; ++c) {
            int mc = l - c;
            std::complex<double> row_phase(std::cos(mr * psi), -std::sin(mr * psi));
            std::complex<double> col_phase(std::cos(mc * phi), -std::sin(mc * phi));
            out[r][c] = row_phase * small[r][c] * col_phase;
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<double>> small_d_matrix(int l, double theta) {
    check_l(l);
    return small_d_any(l, theta);
}

std::vector<std::vector<std::complex<double>>> wigner_D_matrix(int l, double psi, double theta,
                                                               double phi) {
    check_l(l);
    return wigner_D_any(l, psi, theta, phi);
}

std::complex<double> wigner_D(const WignerIndex& idx, double psi, double theta, double phi) {
    check_l(idx.l);
    if (std::abs(idx.m_row) > idx.l || std::abs(idx.m_col) > idx.l)
        throw std::invalid_argument("bispherical: |m| must not exceed l");
    auto mat = wigner_D_matrix(idx.l, psi, theta, phi);
    return mat[idx.l - idx.m_row][idx.l - idx.m_col];
}

double clebsch_gordan(int l1, int m1, int l2, int m2, int l, int m) {
    if (l1 < 0 || l2 < 0 || l1 > 2 || l2 > 2)
        throw std::invalid_argument("bispherical: out of desk scale (l > 2)");
    if (std::abs(m1) > l1 || std::abs(m2) > l2) return 0.0;
    if (m1 + m2 != m || std::abs(m) > l) return 0.0;
    if (l < std::abs(l1 - l2) || l > l1 + l2) return 0.0;

    auto raise = [](int j, int mm) {  // J+ coefficient from m
        return std::sqrt(static_cast<double>(j * (j + 1) - mm * (mm + 1)));
    };
    auto lower = [](int j, int mm) {  // J- coefficient from m
        return std::sqrt(static_cast<double>(j * (j + 1) - mm * (mm - 1)));
    };

    // Entries are indexed by m1 over the full range [-l1, l1]; the window of
    // physically valid m1 widens while lowering, so zero padding is kept.
    const int lo = std::max(-l1, l - l2);
    const int hi = std::min(l1, l + l2);
    auto slot = [l1](int b) { return b + l1; };

    // top state: J+ annihilation fixes the ratios
    std::vector<double> cur(2 * l1 + 1, 0.0);
    cur[slot(lo)] = 1.0;
    for (int b = lo + 1; b <= hi; ++b)
        cur[slot(b)] = -cur[slot(b - 1)] * raise(l1, b - 1) / raise(l2, l - b);
    double nrm = 0.0;
    for (double v : cur) nrm += v * v;
    nrm = std::sqrt(nrm);
    double sign = cur[slot(hi)] > 0 ? 1.0 : -1.0;  // highest m1 positive
    for (double& v : cur) v *= sign / nrm;

    // lower with J- down to the requested m
    for (int mm = l; mm > m; --mm) {
        std::vector<double> next(cur.size(), 0.0);
        for (int b = -l1; b <= l1; ++b) {
            double acc = 0.0;
            if (b + 1 <= l1) acc += cur[slot(b + 1)] * lower(l1, b + 1);
            int m2 = mm - b;
            if (std::abs(m2) <= l2) acc += cur[slot(b)] * lower(l2, m2);
            next[slot(b)] = acc / lower(l, mm);
        }
        cur = std::move(next);
    }
    if (std::abs(m - m1) > l2) return 0.0;
    return cur[slot(m1)];
}

ProductReport verify_bispherical_product(int l1, int l2, int trials, uint64_t seed) {
    if (l1 < 0 || l2 < 0 || l1 > 2 || l2 > 2)
        throw std::invalid_argument("bispherical: out of desk scale (l > 2)");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);

    ProductReport rep;
    rep.l1 = l1;
    rep.l2 = l2;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        double psi = ang(rng), theta = ang(rng), phi = ang(rng);
        auto d1 = wigner_D_matrix(l1, psi, theta, phi);
        auto d2 = wigner_D_matrix(l2, psi, theta, phi);
        for (int m1 = -l1; m1 <= l1; ++m1)
            for (int m2 = -l2; m2 <= l2; ++m2) {
                std::complex<double> lhs = d1[l1][l1 - m1] * d2[l2 - m2][l2];
                std::complex<double> rhs = 0.0;
                for (int l = std::abs(l1 - l2); l <= l1 + l2; ++l) {
                    double c1 = clebsch_gordan(l1, 0, l2, m2, l, m2);
                    double c2 = clebsch_gordan(l1, m1, l2, 0, l, m1);
                    if (c1 == 0.0 || c2 == 0.0) continue;
                    auto dl = wigner_D_any(l, psi, theta, phi);
                    rhs += c1 * c2 * dl[l - m2][l - m1];
                }
                rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs));
            }
    }
    return rep;
}

double max_unitarity_residual(int lmax, int trials, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        double psi = ang(rng), theta = ang(rng), phi = ang(rng);
        for (int l = 0; l <= lmax; ++l) {
            auto d = wigner_D_matrix(l, psi, theta, phi);
            int dim = 2 * l + 1;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    std::complex<double> acc = 0.0;
                    for (int k = 0; k < dim; ++k) acc += d[i][k] * std::conj(d[j][k]);
                    worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
                }
        }
    }
    return worst;
}

double max_cg_orthogonality_residual(int lmax) {
    double worst = 0.0;
    for (int l1 = 0; l1 <= lmax; ++l1)
        for (int l2 = 0; l2 <= lmax; ++l2)
            for (int l = std::abs(l1 - l2); l <= l1 + l2; ++l)
                for (int lp = std::abs(l1 - l2); lp <= l1 + l2; ++lp)
                    for (int m = -l; m <= l; ++m)
                        for (int mp = -lp; mp <= lp; ++mp) {
                            double acc = 0.0;
                            for (int m1 = -l1; m1 <= l1; ++m1)
                                for (int m2 = -l2; m2 <= l2; ++m2)
                                    acc += clebsch_gordan(l1, m1, l2, m2, l, m) *
                                           clebsch_gordan(l1, m1, l2, m2, lp, mp);
                            double expect = (l == lp && m == mp) ? 1.0 : 0.0;
                            worst = std::max(worst, std::fabs(acc - expect));
                        }
    return worst;
}

}  // namespace hcw::bispherical
