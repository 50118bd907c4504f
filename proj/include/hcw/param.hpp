#pragma once

// Angle parameterizations of the parameter space, checked in binary64
// against the exact quadratic maps.
//
// R^4 -> R^3 (Euler angles theta, psi, phi):
//   u = sqrt(r) (sin(t/2) cos(psi-phi), sin(t/2) sin(psi-phi),
//                cos(t/2) cos(psi+phi), cos(t/2) sin(psi+phi)).
// Under the maps fixed by this project's sign conventions it lands on the
// sphere of radius r with third component -r cos(theta); the left map's
// azimuth is 2*phi, the right map's is 2*psi (both mirrored).
//
// R^8 -> R^5 (angles eta, chi, theta, psi, theta', psi'; phi = 0): the
// unitary 2x2 triple-product parameterization. The orientations of chi and
// psi' are fixed so that the left map reproduces the spherical target
//   (r sin(eta) cos(chi), r sin(eta) sin(chi) cos(theta'),
//    r sin(eta) sin(chi) sin(theta') sin(psi'),
//    r sin(eta) sin(chi) sin(theta') cos(psi'), r cos(eta))
// componentwise; flipping either orientation breaks the round trip.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hcw/ksmap.hpp"

namespace hcw::param {

struct AngleSet {
    double r = 1.0;
    double theta = 0.0, psi = 0.0, phi = 0.0;          // R^4 -> R^3
    double eta = 0.0, chi = 0.0, theta_p = 0.0, psi_p = 0.0;  // R^8 -> R^5 extras
};

// |u|^2 = r for both.
std::vector<double> cayley_klein(const AngleSet& a);  // 4 components
std::vector<double> param_r8(const AngleSet& a);      // 8 components

// The five target coordinates listed above.
std::vector<double> spherical_target(const AngleSet& a);

// The 2x2 unitary blocks w1..w4 of the triple product, with the diagonal
// factor read as exp(-i chi / 2). Satisfies
//   conj(w1) w3 + w2 conj(w4) = cos(chi) + i sin(chi) cos(theta').
std::array<std::complex<double>, 4> w_factors(const AngleSet& a);
double eq_left_product_residual(const AngleSet& a);

// The analogous "right side" 2x2 product; constructed only, no identity is
// asserted for it.
std::array<std::complex<double>, 4> right_side_product(const AngleSet& a);

enum class SphereVariant { left, right, doubled };

// Standard nested sin/cos coordinates: left/right take n-1 angles and
// produce n components; doubled takes 2n-3 angles and produces 2(n-1)
// components (half-angle split on the last shared angle).
std::vector<double> hyperspherical(int n, const std::vector<double>& angles, SphereVariant v);

struct RoundTripReport {
    int trials = 0;
    double max_residual = 0.0;       // worst componentwise gap vs target
    double max_norm_residual = 0.0;  // worst | |u|^2 - r |
    bool passed = false;
    std::string note;
};

RoundTripReport verify_r8_roundtrip(int trials, uint64_t seed, double tol, double norm_tol);
RoundTripReport verify_cayley_klein_roundtrip(int trials, uint64_t seed, double tol,
                                              double norm_tol);
double max_eq_left_product_residual(int trials, uint64_t seed);
double max_hyperspherical_norm_residual(int n, int trials, uint64_t seed);

}  // namespace hcw::param
