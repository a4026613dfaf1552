#include "moblab/sphere.hpp"

#include <cmath>

namespace moblab {

SpherePoint::SpherePoint(Complex z) : value_(z), inf_(false) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(Errc::invalid_input, "SpherePoint: non-finite component");
}

Complex SpherePoint::value() const {
    if (inf_) throw Error(Errc::invalid_input, "SpherePoint: value() on infinity");
    return value_;
}

double chordal_distance(const SpherePoint& p, const SpherePoint& q) {
    if (p.is_inf() && q.is_inf()) return 0.0;
    if (p.is_inf() || q.is_inf()) {
        const Complex z = p.is_inf() ? q.value() : p.value();
        // lim_{w->inf} 2|z-w| / (hypot(1,|z|) hypot(1,|w|)) = 2 / hypot(1,|z|)
        return 2.0 / std::hypot(1.0, std::abs(z));
    }
    const Complex z = p.value(), w = q.value();
    const double hz = std::hypot(1.0, std::abs(z));
    const double hw = std::hypot(1.0, std::abs(w));
    const double num = std::abs(z - w);
    // Divide by the larger factor first; keeps intermediates bounded when
    // both points are huge.
    return hz >= hw ? 2.0 * ((num / hz) / hw) : 2.0 * ((num / hw) / hz);
}

double arc_distance(Complex u, Complex v, double input_tol) {
    if (!(input_tol > 0.0))
        throw Error(Errc::invalid_parameter, "arc_distance: input_tol must be positive");
    if (std::abs(std::abs(u) - 1.0) > input_tol || std::abs(std::abs(v) - 1.0) > input_tol)
        throw Error(Errc::invalid_input, "arc_distance: input off the unit circle");
    // atan2(|cross|, dot) of the two direction vectors. Both arguments are
    // symmetric under (u, v) swap, so the result is bitwise symmetric, and
    // u == v gives atan2(0, |u|^2) == 0 exactly.
    const double dot = u.real() * v.real() + u.imag() * v.imag();
    const double cross = u.real() * v.imag() - u.imag() * v.real();
    return std::atan2(std::abs(cross), dot);
}

}  // namespace moblab
