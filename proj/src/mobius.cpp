#include "moblab/mobius.hpp"

#include <cmath>

namespace moblab {

namespace {

// Branch convention shared by normalize() and compose(): pick the sign of
// the square root so Re(trace) >= 0, ties toward Im(trace) >= 0.
bool flip_for_trace(const Complex& tr) {
    if (tr.real() < 0.0) return true;
    if (tr.real() == 0.0 && tr.imag() < 0.0) return true;
    return false;
}

NormalizedMobius scaled_by_sqrt_det(Complex a, Complex b, Complex c, Complex d) {
    const Complex det = a * d - b * c;
    Complex s = std::sqrt(det);
    if (flip_for_trace((a + d) / s)) s = -s;
    return NormalizedMobius(a / s, b / s, c / s, d / s);
}

}  // namespace

std::string to_string(MapClass c) {
    switch (c) {
        case MapClass::Hyperbolic: return "hyperbolic";
        case MapClass::Parabolic: return "parabolic";
        case MapClass::Elliptic: return "elliptic";
        case MapClass::PurelyLoxodromic: return "purely-loxodromic";
        case MapClass::Affine: return "affine";
    }
    return "?";
}

NormalizedMobius::NormalizedMobius(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (!(std::abs(det() - 1.0) <= 1e-12))
        throw Error(Errc::invalid_map, "NormalizedMobius: determinant is not 1");
}

Complex NormalizedMobius::pole() const {
    if (is_affine()) throw Error(Errc::unsupported_class, "pole: affine map has no finite pole");
    return -d_ / c_;
}

NormalizedMobius normalize(const RawMobius& raw) {
    const Complex det = raw.det();
    const double scale = std::abs(raw.a * raw.d) + std::abs(raw.b * raw.c);
    if (std::abs(det) <= 1e-14 * scale)
        throw Error(Errc::invalid_map, "normalize: singular coefficient matrix");
    return scaled_by_sqrt_det(raw.a, raw.b, raw.c, raw.d);
}

SpherePoint apply(const NormalizedMobius& m, const SpherePoint& z, double pole_tol) {
    if (z.is_inf()) {
        if (m.is_affine()) return SpherePoint::infinity();
        return SpherePoint(m.a() / m.c());
    }
    const Complex v = z.value();
    const Complex den = m.c() * v + m.d();
    if (std::abs(den) <= pole_tol * (1.0 + std::abs(v))) return SpherePoint::infinity();
    const Complex num = m.a() * v + m.b();
    const Complex w = num / den;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return SpherePoint::infinity();
    return SpherePoint(w);
}

NormalizedMobius compose(const NormalizedMobius& m1, const NormalizedMobius& m2) {
    const Complex a = m1.a() * m2.a() + m1.b() * m2.c();
    const Complex b = m1.a() * m2.b() + m1.b() * m2.d();
    const Complex c = m1.c() * m2.a() + m1.d() * m2.c();
    const Complex d = m1.c() * m2.b() + m1.d() * m2.d();
    return scaled_by_sqrt_det(a, b, c, d);
}

NormalizedMobius inverse(const NormalizedMobius& m) {
    return NormalizedMobius(m.d(), -m.b(), -m.c(), m.a());
}

Complex trace(const NormalizedMobius& m) { return m.trace(); }

MapClass classify(const NormalizedMobius& m, const ClassifyTolerances& tol) {
    if (std::abs(m.c()) <= tol.affine_tol) return MapClass::Affine;
    const Complex t = m.trace();
    if (std::abs(t.imag()) > tol.imag_tol) return MapClass::PurelyLoxodromic;
    const double x = t.real();
    if (std::abs(x - 2.0) <= tol.boundary_tol || std::abs(x + 2.0) <= tol.boundary_tol)
        return MapClass::Parabolic;
    if (std::abs(x) < 2.0) return MapClass::Elliptic;
    return MapClass::Hyperbolic;
}

FixedPointPair fixed_points(const NormalizedMobius& m) {
    if (classify(m) == MapClass::Affine)
        throw Error(Errc::unsupported_class, "fixed_points: affine map unsupported");
    const Complex t = m.trace();
    const Complex root = std::sqrt(t * t - 4.0);
    const Complex twoc = 2.0 * m.c();
    return {(m.a() - m.d() + root) / twoc, (m.a() - m.d() - root) / twoc};
}

Complex multiplier(const NormalizedMobius& m) {
    if (classify(m) != MapClass::Elliptic)
        throw Error(Errc::unsupported_class, "multiplier: map is not elliptic");
    const Complex calpha_d = m.c() * fixed_points(m).alpha + m.d();
    return 1.0 / (calpha_d * calpha_d);
}

double rotation_angle(const NormalizedMobius& m) { return std::arg(multiplier(m)); }

Complex derivative_at(const NormalizedMobius& m, const SpherePoint& z, double pole_tol) {
    if (z.is_inf())
        throw Error(Errc::invalid_input, "derivative_at: derivative is chart-local, infinity rejected");
    const Complex v = z.value();
    const Complex den = m.c() * v + m.d();
    if (std::abs(den) <= pole_tol * (1.0 + std::abs(v)))
        throw Error(Errc::pole, "derivative_at: singular derivative at the pole");
    return 1.0 / (den * den);
}

EllipticNormalForm elliptic_normal_form(const NormalizedMobius& m, double rational_tol,
                                        long long q_max) {
    if (classify(m) != MapClass::Elliptic)
        throw Error(Errc::unsupported_class, "elliptic_normal_form: map is not elliptic");
    const FixedPointPair fp = fixed_points(m);
    const Complex calpha_d = m.c() * fp.alpha + m.d();
    const Complex k = 1.0 / (calpha_d * calpha_d);
    const double angle = std::arg(k);
    return {fp.alpha, fp.beta, k, angle, detect_rational_rotation(angle, rational_tol, q_max)};
}

Complex rotation_coordinate(const FixedPointPair& fp, const SpherePoint& z) {
    if (z.is_inf()) return Complex(1.0, 0.0);
    return (z.value() - fp.alpha) / (z.value() - fp.beta);
}

SpherePoint from_rotation_coordinate(const FixedPointPair& fp, const Complex& w) {
    const Complex den = 1.0 - w;
    if (std::abs(den) == 0.0) return SpherePoint::infinity();
    const Complex z = (fp.alpha - fp.beta * w) / den;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return SpherePoint::infinity();
    return SpherePoint(z);
}

}  // namespace moblab
