#pragma once

#include <cmath>

namespace quadmatch {

// Growth exponent of the partial match cost, the positive root of
// b^2 + 3b - 2 = 0.
struct Exponent {
    double value;
};

// Exponent c of the profile (x(1-x))^c. Quadtree slices use c = beta/2,
// the chord construction uses c = beta; solver ansatz families may use any
// c >= 0.
struct ProfileExponent {
    double c;
};

// beta = (sqrt(17) - 3) / 2 in binary64.
Exponent beta_closed_form() noexcept;

// Convenience accessor for beta's raw value.
inline double beta_value() noexcept { return beta_closed_form().value; }

ProfileExponent quad_profile() noexcept;   // c = beta/2
ProfileExponent chord_profile() noexcept;  // c = beta

// Gamma function on positive reals via a fixed-coefficient Lanczos
// approximation (g = 7, 9 terms, coefficients in constants.cpp), reflection
// below 0.5. Relative error <= 1e-12 on [0.5, 10]. Throws std::domain_error
// for z <= 0.
double gamma_fn(double z);

// K0 = Gamma(2b+2) Gamma(b+2) / (2 Gamma^3(b+1) Gamma^2(b/2+1)) at b = beta.
double k0_constant();

// Same formula at an arbitrary exponent b (used by tests to probe the
// degenerate b = 0 case).
double k0_formula(double b);

// m^p with the m = 0 -> 0 guard; m must be >= 0.
inline double pow_pos(double m, double p) noexcept {
    return m <= 0.0 ? 0.0 : std::exp(p * std::log(m));
}

// (x(1-x))^c for x in [0,1]; exactly 0 at the endpoints. Throws
// std::domain_error outside [0,1]. Evaluated through the canonical factor
// min-side so exact complementary pairs (x, 1-x) give bit-equal results.
double profile_h(double x, ProfileExponent c);

inline double profile_h(double x, double c) { return profile_h(x, ProfileExponent{c}); }

}  // namespace quadmatch
