#include "quadmatch/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace quadmatch {

namespace {

// Lanczos approximation, g = 7, 9 coefficients (Godfrey's set, widely
// reproduced; see e.g. Press et al. or the GNU Scientific Library notes).
// Empirical relative error < 1e-14 on [0.5, 10].
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double kPi = 3.141592653589793238462643383279502884;

double lanczos_gamma(double z) {
    if (z < 0.5) {
        // Reflection; z > 0 here so sin(pi z) != 0.
        return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
    }
    z -= 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        a += kLanczos[i] / (z + i);
    }
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

}  // namespace

Exponent beta_closed_form() noexcept {
    return Exponent{(std::sqrt(17.0) - 3.0) / 2.0};
}

ProfileExponent quad_profile() noexcept { return ProfileExponent{beta_value() / 2.0}; }

ProfileExponent chord_profile() noexcept { return ProfileExponent{beta_value()}; }

double gamma_fn(double z) {
    if (!(z > 0.0)) {
        throw std::domain_error("gamma_fn: argument must be positive");
    }
    return lanczos_gamma(z);
}

double k0_formula(double b) {
    const double g1 = gamma_fn(2.0 * b + 2.0);
    const double g2 = gamma_fn(b + 2.0);
    const double g3 = gamma_fn(b + 1.0);
    const double g4 = gamma_fn(b / 2.0 + 1.0);
    return g1 * g2 / (2.0 * g3 * g3 * g3 * g4 * g4);
}

double k0_constant() { return k0_formula(beta_value()); }

double profile_h(double x, ProfileExponent c) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("profile_h: argument must lie in [0,1]");
    }
    if (x == 0.0 || x == 1.0) {
        return 0.0;
    }
    // 1-x is exact for x in [0.5, 1], so complementary pairs canonicalize to
    // the same factor.
    const double u = x > 0.5 ? 1.0 - x : x;
    return pow_pos(u * (1.0 - u), c.c);
}

}  // namespace quadmatch
