#pragma once

#include <complex>
#include <string>

#include "moblab/rational.hpp"
#include "moblab/sphere.hpp"

namespace moblab {

/// Raw coefficient quadruple of z -> (az + b)/(cz + d). Only constraint is a
/// nonzero determinant, checked on normalization.
struct RawMobius {
    Complex a, b, c, d;

    Complex det() const { return a * d - b * c; }
};

enum class MapClass { Hyperbolic, Parabolic, Elliptic, PurelyLoxodromic, Affine };

std::string to_string(MapClass c);

struct ClassifyTolerances {
    double imag_tol = 1e-10;      // |Im(trace)| above this -> purely loxodromic
    double boundary_tol = 1e-10;  // half-width of the parabolic band at +-2
    double affine_tol = 1e-12;    // |c| at or below this -> affine
};

/// Moebius map with determinant 1. Immutable; all operations are pure.
class NormalizedMobius {
public:
    /// Validates |ad - bc - 1| <= 1e-12; throws Errc::invalid_map otherwise.
    NormalizedMobius(Complex a, Complex b, Complex c, Complex d);

    Complex a() const noexcept { return a_; }
    Complex b() const noexcept { return b_; }
    Complex c() const noexcept { return c_; }
    Complex d() const noexcept { return d_; }

    Complex det() const noexcept { return a_ * d_ - b_ * c_; }
    Complex trace() const noexcept { return a_ + d_; }
    bool is_affine(double affine_tol = 1e-12) const noexcept { return std::abs(c_) <= affine_tol; }

    /// Pole -d/c of the map. Throws Errc::unsupported_class on affine maps.
    Complex pole() const;

    static NormalizedMobius identity() { return NormalizedMobius(1.0, 0.0, 0.0, 1.0); }

private:
    Complex a_, b_, c_, d_;
};

/// Divides the coefficients by a square root of the determinant. The branch
/// is chosen so the resulting trace has nonnegative real part, ties broken
/// toward nonnegative imaginary part. Throws Errc::invalid_map when the
/// determinant vanishes relative to the coefficient magnitudes (1e-14).
NormalizedMobius normalize(const RawMobius& raw);

/// Total on the sphere: the pole maps to infinity, infinity maps to a/c
/// (to itself for affine maps). A finite input z counts as the pole when
/// |cz + d| <= pole_tol * (1 + |z|).
SpherePoint apply(const NormalizedMobius& m, const SpherePoint& z, double pole_tol = 1e-12);

/// Matrix product, renormalized so the determinant stays 1 and the sign
/// follows the trace convention of normalize().
NormalizedMobius compose(const NormalizedMobius& m1, const NormalizedMobius& m2);

NormalizedMobius inverse(const NormalizedMobius& m);

Complex trace(const NormalizedMobius& m);

/// Trace classification. Elliptic needs a real trace strictly inside (-2, 2);
/// traces within boundary_tol of +-2 classify as Parabolic.
MapClass classify(const NormalizedMobius& m, const ClassifyTolerances& tol = {});

/// Roots of the fixed-point quadratic. alpha takes the "+" branch of
/// (a - d +- sqrt((a + d)^2 - 4)) / (2c), beta the "-" branch.
struct FixedPointPair {
    Complex alpha, beta;
};

/// Throws Errc::unsupported_class on affine maps.
FixedPointPair fixed_points(const NormalizedMobius& m);

/// Multiplier k = 1/(c*alpha + d)^2 of an elliptic map; |k| = 1.
/// Throws Errc::unsupported_class unless classify(m) == Elliptic.
Complex multiplier(const NormalizedMobius& m);

/// arg(multiplier), in (-pi, pi]. Elliptic maps only.
double rotation_angle(const NormalizedMobius& m);

/// g'(z) = 1/(cz + d)^2. Rejects infinity (Errc::invalid_input) and the pole
/// (Errc::pole).
Complex derivative_at(const NormalizedMobius& m, const SpherePoint& z, double pole_tol = 1e-12);

/// Normal form of an elliptic map: fixed points, unit multiplier, rotation
/// angle, and the rationality verdict of angle/(2*pi).
struct EllipticNormalForm {
    Complex alpha, beta;
    Complex k;           // multiplier, |k| = 1
    double angle;        // arg(k), in (-pi, pi]
    RotationVerdict rotation;
};

EllipticNormalForm elliptic_normal_form(const NormalizedMobius& m,
                                        double rational_tol = 1e-12,
                                        long long q_max = 1000000);

/// Rotation coordinate w = (z - alpha)/(z - beta): sends alpha to 0 and beta
/// to infinity, and conjugates the map to w -> multiplier * w. The reciprocal
/// coordinate (z - beta)/(z - alpha) parameterizes the invariant circles (see
/// geometry.hpp).
Complex rotation_coordinate(const FixedPointPair& fp, const SpherePoint& z);

/// Inverse of rotation_coordinate: z = (alpha - beta*w)/(1 - w).
SpherePoint from_rotation_coordinate(const FixedPointPair& fp, const Complex& w);

}  // namespace moblab
