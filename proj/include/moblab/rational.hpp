#pragma once

#include <cstdint>
#include <vector>

namespace moblab {

/// p/q in lowest terms, q >= 1.
struct Rational {
    long long p = 0;
    long long q = 1;
};

/// Continued-fraction convergents of x (taken mod 1), with denominators
/// bounded by q_max. Each entry is in lowest terms by construction.
std::vector<Rational> convergents(double x, long long q_max, int max_terms = 64);

/// Outcome of rational-rotation detection for an angle theta.
struct RotationVerdict {
    bool rational = false;
    Rational value;    // meaningful when rational
    double tol;        // radians tolerance used
    long long q_max;   // denominator bound used
};

/// Scans the continued-fraction convergents of theta/(2*pi) and returns the
/// first p/q with q <= q_max that matches the angle to within tol *radians*,
/// i.e. |theta - 2*pi*p/q| <= tol; otherwise the verdict is irrational.
/// Deterministic. With the defaults this separates every small finite order
/// (1/2, 1/6, 1/3, ...) from the golden rotation, whose best approximation
/// under the denominator bound is ~4.1e-12 radians off.
RotationVerdict detect_rational_rotation(double theta, double tol = 1e-12,
                                         long long q_max = 1000000);

}  // namespace moblab
