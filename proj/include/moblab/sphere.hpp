#pragma once

#include <complex>

#include "moblab/error.hpp"

namespace moblab {

using Complex = std::complex<double>;

/// A point of the extended complex plane: either a finite value or the
/// point at infinity. Infinity is a tag, never a large-magnitude sentinel,
/// so metric and equality code can branch on it without thresholds.
class SpherePoint {
public:
    SpherePoint() : value_(0.0, 0.0), inf_(false) {}

    /// Throws Errc::invalid_input if a component is NaN or infinite.
    SpherePoint(Complex z);  // NOLINT: implicit by design
    SpherePoint(double re, double im = 0.0) : SpherePoint(Complex(re, im)) {}

    static SpherePoint infinity() {
        SpherePoint p;
        p.inf_ = true;
        return p;
    }

    bool is_inf() const noexcept { return inf_; }

    /// Finite value; throws Errc::invalid_input when called on infinity.
    Complex value() const;

    friend bool operator==(const SpherePoint& p, const SpherePoint& q) {
        if (p.inf_ || q.inf_) return p.inf_ == q.inf_;
        return p.value_ == q.value_;
    }

private:
    Complex value_;
    bool inf_;
};

/// Chordal (stereographic) distance, range [0, 2]. Antipodal pairs map to 2.
/// Overflow-safe for arbitrarily large finite inputs.
double chordal_distance(const SpherePoint& p, const SpherePoint& q);

/// Minimal arc length between two points of the unit circle, range [0, pi].
/// Inputs farther than `input_tol` from the circle are rejected
/// (Errc::invalid_input). Symmetric by construction: the implementation is
/// bitwise identical under argument swap, and arc_distance(u, u) == 0.
double arc_distance(Complex u, Complex v, double input_tol = 1e-9);

}  // namespace moblab
