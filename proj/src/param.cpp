#include "hcw/param.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hcw::param {

namespace {

using Cplx = std::complex<double>;

constexpr double kTwoPi = 6.28318530717958647692;

Cplx polar1(double angle) { return {std::cos(angle), std::sin(angle)}; }

struct Mat2 {
    Cplx a, b, c, d;  // [[a, b], [c, d]]
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

Mat2 su2_block(Cplx t_cos, Cplx t_sin) {
    return {t_cos, t_sin, -std::conj(t_sin), std::conj(t_cos)};
}

}  // namespace

std::vector<double> cayley_klein(const AngleSet& a) {
    double s = std::sqrt(a.r);
    double sh = std::sin(a.theta / 2), ch = std::cos(a.theta / 2);
    return {s * sh * std::cos(a.psi - a.phi), s * sh * std::sin(a.psi - a.phi),
            s * ch * std::cos(a.psi + a.phi), s * ch * std::sin(a.psi + a.phi)};
}

std::vector<double> param_r8(const AngleSet& a) {
    double s = std::sqrt(a.r);
    Cplx t1 = polar1(-a.psi / 2) * std::cos(a.theta / 2);
    Cplx t2 = polar1(a.psi / 2) * std::sin(a.theta / 2);
    // psi' orientation fixed by the round trip (see header)
    Cplx t3 = polar1(a.psi_p / 2) * std::cos(a.theta_p / 2);
    Cplx t4 = polar1(-a.psi_p / 2) * std::sin(a.theta_p / 2);
    Cplx em = polar1(-a.chi / 2), ep = polar1(a.chi / 2);

    double ch = std::cos(a.eta / 2), sh = std::sin(a.eta / 2);
    Cplx z1 = s * ch * (t1 * t3 * em - t2 * std::conj(t4) * ep);
    Cplx z2 = s * ch * (t1 * t4 * em + t2 * std::conj(t3) * ep);
    Cplx z3 = s * sh * (t1 * t3 * ep - t2 * std::conj(t4) * em);
    Cplx z4 = s * sh * (t1 * t4 * ep + t2 * std::conj(t3) * em);
    return {z1.real(), z1.imag(), z2.real(), z2.imag(),
            z3.real(), z3.imag(), z4.real(), z4.imag()};
}

std::vector<double> spherical_target(const AngleSet& a) {
    double se = std::sin(a.eta), sc = std::sin(a.chi);
    double st = std::sin(a.theta_p);
    return {a.r * se * std::cos(a.chi), a.r * se * sc * std::cos(a.theta_p),
            a.r * se * sc * st * std::sin(a.psi_p), a.r * se * sc * st * std::cos(a.psi_p),
            a.r * std::cos(a.eta)};
}

std::array<Cplx, 4> w_factors(const AngleSet& a) {
    Cplx t1 = polar1(-a.psi / 2) * std::cos(a.theta / 2);
    Cplx t2 = polar1(a.psi / 2) * std::sin(a.theta / 2);
    Cplx t3 = polar1(-a.psi_p / 2) * std::cos(a.theta_p / 2);
    Cplx t4 = polar1(a.psi_p / 2) * std::sin(a.theta_p / 2);
    Cplx t5 = polar1(-a.chi / 2);

    Mat2 left = su2_block(t1, t2) * Mat2{t5, 0.0, 0.0, std::conj(t5)} * su2_block(t3, t4);
    Mat2 right = su2_block(t1, t2) * Mat2{std::conj(t5), 0.0, 0.0, t5} * su2_block(t3, t4);
    return {left.a, left.b, right.a, right.b};  // w1, w2, w3, w4
}

double eq_left_product_residual(const AngleSet& a) {
    auto w = w_factors(a);
    Cplx lhs = std::conj(w[0]) * w[2] + w[1] * std::conj(w[3]);
    Cplx rhs = {std::cos(a.chi), std::sin(a.chi) * std::cos(a.theta_p)};
    return std::abs(lhs - rhs);
}

std::array<Cplx, 4> right_side_product(const AngleSet& a) {
    auto w = w_factors(a);
    Mat2 m1{w[0], w[1], -std::conj(w[1]), std::conj(w[0])};
    Mat2 m2{std::conj(w[2]), -w[3], std::conj(w[3]), std::conj(w[2])};
    Mat2 p = m1 * m2;
    return {p.a, p.b, p.c, p.d};
}

std::vector<double> hyperspherical(int n, const std::vector<double>& angles, SphereVariant v) {
    if (n < 2) throw std::invalid_argument("hyperspherical: need n >= 2");
    auto sphere = [](const std::vector<double>& th) {
        // th_1..th_m -> m+1 components, cos of the last angle last
        const int m = static_cast<int>(th.size());
        std::vector<double> x(m + 1, 1.0);
        for (int i = 0; i <= m; ++i) {
            double t = (i == 0) ? 1.0 : std::cos(th[i - 1]);
            for (int j = i; j < m; ++j) t *= std::sin(th[j]);
            x[i] = t;
        }
        return x;
    };

    if (v == SphereVariant::left || v == SphereVariant::right) {
        if (static_cast<int>(angles.size()) != n - 1)
            throw std::invalid_argument("hyperspherical: expected n-1 angles");
        return sphere(angles);
    }

    if (static_cast<int>(angles.size()) != 2 * n - 3)
        throw std::invalid_argument("hyperspherical: expected 2n-3 angles for the doubled sphere");
    std::vector<double> th(angles.begin(), angles.begin() + (n - 2));
    double shared = angles[n - 2];
    std::vector<double> thp(angles.begin() + (n - 1), angles.end());

    std::vector<double> lhs = sphere(th);   // n-1 components
    std::vector<double> rhs = sphere(thp);  // n-1 components
    std::vector<double> x;
    x.reserve(2 * (n - 1));
    double s = std::sin(shared / 2), c = std::cos(shared / 2);
    for (double v2 : lhs) x.push_back(s * v2);
    for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) x.push_back(c * *it);
    return x;
}

namespace {

double sq_norm(const std::vector<double>& v) {
    double s = 0;
    for (double c : v) s += c * c;
    return s;
}

AngleSet random_angles(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    std::uniform_real_distribution<double> rad(0.1, 4.0);
    AngleSet a;
    a.r = rad(rng);
    a.theta = ang(rng);
    a.psi = ang(rng);
    a.phi = ang(rng);
    a.eta = ang(rng);
    a.chi = ang(rng);
    a.theta_p = ang(rng);
    a.psi_p = ang(rng);
    return a;
}

}  // namespace

RoundTripReport verify_r8_roundtrip(int trials, uint64_t seed, double tol, double norm_tol) {
    std::mt19937_64 rng(seed);
    RoundTripReport rep;
    rep.trials = trials;
    const auto& map = ksmap::last_row_map(5);
    for (int t = 0; t < trials; ++t) {
        AngleSet a = random_angles(rng);
        std::vector<double> u = param_r8(a);
        rep.max_norm_residual = std::max(rep.max_norm_residual, std::fabs(sq_norm(u) - a.r));
        std::vector<double> x = ksmap::apply_map(map, u);
        std::vector<double> target = spherical_target(a);
        for (size_t i = 0; i < x.size(); ++i)
            rep.max_residual = std::max(rep.max_residual, std::fabs(x[i] - target[i]));
    }
    rep.passed = rep.max_residual < tol && rep.max_norm_residual < norm_tol;
    rep.note = "left map; chi and psi' orientations fixed by this round trip";
    return rep;
}

RoundTripReport verify_cayley_klein_roundtrip(int trials, uint64_t seed, double tol,
                                              double norm_tol) {
    std::mt19937_64 rng(seed);
    RoundTripReport rep;
    rep.trials = trials;
    const auto& left = ksmap::last_row_map(3);
    const auto& right = ksmap::last_column_map(3);
    for (int t = 0; t < trials; ++t) {
        AngleSet a = random_angles(rng);
        std::vector<double> u = cayley_klein(a);
        rep.max_norm_residual = std::max(rep.max_norm_residual, std::fabs(sq_norm(u) - a.r));

        double st = std::sin(a.theta), ct = std::cos(a.theta);
        std::vector<double> xl = ksmap::apply_map(left, u);
        std::vector<double> lt = {a.r * st * std::cos(2 * a.phi), a.r * st * std::sin(2 * a.phi),
                                  -a.r * ct};
        std::vector<double> xr = ksmap::apply_map(right, u);
        std::vector<double> rt = {-a.r * st * std::cos(2 * a.psi), -a.r * st * std::sin(2 * a.psi),
                                  -a.r * ct};
        for (int i = 0; i < 3; ++i) {
            rep.max_residual = std::max(rep.max_residual, std::fabs(xl[i] - lt[i]));
            rep.max_residual = std::max(rep.max_residual, std::fabs(xr[i] - rt[i]));
        }
    }
    rep.passed = rep.max_residual < tol && rep.max_norm_residual < norm_tol;
    rep.note =
        "both maps land with third component -r cos(theta): polar angle theta from the "
        "negative axis; left azimuth 2*phi, right azimuth 2*psi mirrored";
    return rep;
}

double max_eq_left_product_residual(int trials, uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0;
    for (int t = 0; t < trials; ++t)
        worst = std::max(worst, eq_left_product_residual(random_angles(rng)));
    return worst;
}

double max_hyperspherical_norm_residual(int n, int trials, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        for (SphereVariant v : {SphereVariant::left, SphereVariant::right, SphereVariant::doubled}) {
            int count = (v == SphereVariant::doubled) ? 2 * n - 3 : n - 1;
            std::vector<double> th(count);
            for (auto& x : th) x = ang(rng);
            worst = std::max(worst, std::fabs(sq_norm(hyperspherical(n, th, v)) - 1.0));
        }
    }
    return worst;
}

}  // namespace hcw::param
