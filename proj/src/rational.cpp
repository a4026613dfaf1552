#include "moblab/rational.hpp"

#include <cmath>
#include <limits>

#include "moblab/error.hpp"

namespace moblab {

std::vector<Rational> convergents(double x, long long q_max, int max_terms) {
    if (q_max < 1) throw Error(Errc::invalid_parameter, "convergents: q_max must be >= 1");
    x -= std::floor(x);  // fold into [0, 1)

    std::vector<Rational> out;
    // p_k/q_k via the standard recurrence; h prev/curr pairs.
    long long p0 = 1, q0 = 0;  // k = -1
    long long p1 = 0, q1 = 1;  // k = 0 (a0 = 0 after folding)
    out.push_back({0, 1});
    double frac = x;
    for (int k = 0; k < max_terms; ++k) {
        if (frac <= 0.0) break;
        const double inv = 1.0 / frac;
        if (inv > 9.0e18) break;  // exhausted double resolution
        const long long term = static_cast<long long>(std::floor(inv));
        // overflow guard on q2 = term*q1 + q0
        if (term != 0 && q1 > (std::numeric_limits<long long>::max() - q0) / term) break;
        const long long p2 = term * p1 + p0;
        const long long q2 = term * q1 + q0;
        if (q2 > q_max) break;
        out.push_back({p2, q2});
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        frac = inv - static_cast<double>(term);
    }
    return out;
}

RotationVerdict detect_rational_rotation(double theta, double tol, long long q_max) {
    if (!(tol > 0.0)) throw Error(Errc::invalid_parameter, "detect_rational_rotation: tol must be positive");
    if (q_max < 1) throw Error(Errc::invalid_parameter, "detect_rational_rotation: q_max must be >= 1");

    constexpr double two_pi = 6.283185307179586476925286766559;
    const double x = theta / two_pi;
    const double x0 = x - std::floor(x);

    RotationVerdict v;
    v.tol = tol;
    v.q_max = q_max;
    for (const Rational& r : convergents(x, q_max)) {
        const double approx = static_cast<double>(r.p) / static_cast<double>(r.q);
        if (std::abs(x0 - approx) * two_pi <= tol) {
            v.rational = true;
            v.value = r;
            return v;
        }
    }
    return v;
}

}  // namespace moblab
