#pragma once

// Desk-scale rotation-matrix elements for the two-sided spherical function
// identity: Wigner D with l <= 2 built by exponentiating the angular
// momentum matrix, Clebsch-Gordan coefficients from the highest-weight
// ladder recursion (no table), and the product decomposition
//   D^l1_{0,m1} D^l2_{m2,0} = sum_l <l1 0; l2 m2|l m2><l1 m1; l2 0|l m1>
//                                    D^l_{m2,m1}.
// Conventions: Condon-Shortley phases, active z-y-z Euler rotations,
// D^l_{m'm}(psi, theta, phi) = exp(-i m' psi) d^l_{m'm}(theta) exp(-i m phi).

#include <complex>
#include <cstdint>
#include <vector>

namespace hcw::bispherical {

struct WignerIndex {
    int l;      // 0 <= l <= 2
    int m_row;  // |m_row| <= l
    int m_col;  // |m_col| <= l
};

// Rows and columns are indexed by m = l, l-1, ..., -l.
std::vector<std::vector<double>> small_d_matrix(int l, double theta);
std::vector<std::vector<std::complex<double>>> wigner_D_matrix(int l, double psi, double theta,
                                                               double phi);
std::complex<double> wigner_D(const WignerIndex& idx, double psi, double theta, double phi);

// Condon-Shortley real coefficient; out-of-rule inputs return 0.
double clebsch_gordan(int l1, int m1, int l2, int m2, int l, int m);

struct ProductReport {
    int l1 = 0, l2 = 0;
    int trials = 0;
    double max_residual = 0.0;
};

ProductReport verify_bispherical_product(int l1, int l2, int trials, uint64_t seed);

double max_unitarity_residual(int lmax, int trials, uint64_t seed);
double max_cg_orthogonality_residual(int lmax);

}  // namespace hcw::bispherical
