#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace hq {

using complexd = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// CODATA 2018 vacuum permittivity (F/m) and exact speed of light (m/s).
inline constexpr double epsilon0_si = 8.8541878128e-12;
inline constexpr double c_si = 299792458.0;

/// Real 3-vector (Cartesian).
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    [[nodiscard]] double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    [[nodiscard]] Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    [[nodiscard]] double norm() const { return std::sqrt(dot(*this)); }
    [[nodiscard]] Vec3 normalized() const {
        double n = norm();
        if (n == 0.0) throw std::domain_error("Vec3::normalized: zero vector");
        return *this / n;
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Complex 3-vector; carrier for field phasors and angular-momentum densities.
struct Vec3C {
    complexd x{}, y{}, z{};

    Vec3C operator+(const Vec3C& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3C& operator+=(const Vec3C& o) { x += o.x; y += o.y; z += o.z; return *this; }

    [[nodiscard]] Vec3C conj() const { return {std::conj(x), std::conj(y), std::conj(z)}; }
    [[nodiscard]] Vec3C cross(const Vec3C& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    [[nodiscard]] Vec3 real() const { return {x.real(), y.real(), z.real()}; }
    [[nodiscard]] Vec3 imag() const { return {x.imag(), y.imag(), z.imag()}; }
    /// Sum of |component|^2.
    [[nodiscard]] double norm2() const { return std::norm(x) + std::norm(y) + std::norm(z); }
};

inline Vec3C operator*(const complexd& s, const Vec3C& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3C operator*(double s, const Vec3C& v) { return {s * v.x, s * v.y, s * v.z}; }

/// Physical constants and the geometry of the quantization volume.
///
/// R (ball radius) and V (volume) are independent inputs; spherical_volume()
/// computes the ball value for callers that want V tied to R.
struct PhysicalSetup {
    double epsilon0 = epsilon0_si;  ///< electric permittivity (F/m)
    double c = c_si;                ///< speed of light (m/s)
    double R = 1.0;                 ///< quantization radius (m)
    double V = 1.0;                 ///< quantization volume (m^3)
    double E0 = 1.0;                ///< elementary field amplitude (V/m)

    static PhysicalSetup si() { return {}; }
    /// Natural units: epsilon0 = c = 1, unit geometry and amplitude.
    static PhysicalSetup natural() { return {1.0, 1.0, 1.0, 1.0, 1.0}; }

    /// Derived magnetic permeability, 1/(epsilon0 c^2).
    [[nodiscard]] double mu0() const { return 1.0 / (epsilon0 * c * c); }
};

/// Volume of the ball of radius R. Throws std::domain_error for R <= 0.
double spherical_volume(double R);

/// Names every violated invariant; empty result means the setup is valid.
std::vector<std::string> validate_setup(const PhysicalSetup& setup);

/// Returns the setup unchanged, or throws std::invalid_argument listing all violations.
PhysicalSetup validated(const PhysicalSetup& setup);

/// Multipole order n and magnetic index m, |m| <= n.
struct ModeIndex {
    int n = 0;
    int m = 0;

    ModeIndex(int n_, int m_) : n(n_), m(m_) {
        if (n < 0 || std::abs(m) > n)
            throw std::domain_error("ModeIndex: require n >= 0 and |m| <= n");
    }
};

enum class Polarization { Linear1, Linear2, CircularPlus, CircularMinus };

/// Helicity lambda: +1 / -1 for circular states, 0 for linear ones.
int helicity(Polarization p);

/// A single multipole mode of the field: order, wavenumber, amplitude,
/// polarization state and the propagation direction that fixes the
/// transverse plane. The angular frequency is always derived as c*k.
struct FieldSpec {
    int n = 0;                                          ///< multipole order
    double k = 1.0;                                     ///< wavenumber (rad/m)
    double E0 = 1.0;                                    ///< amplitude (V/m)
    Polarization polarization = Polarization::Linear1;
    Vec3 khat{0.0, 0.0, 1.0};                           ///< unit propagation direction

    /// Throws std::domain_error unless n >= 0, k > 0 and |khat| = 1 within 1e-12.
    void validate() const;
};

/// Orders and panel counts for the angular and radial quadrature rules.
struct QuadratureSpec {
    int theta_order = 8;     ///< Gauss-Legendre order on cos(theta) in [-1,1]
    int phi_points = 16;     ///< uniform points on [0, 2*pi)
    int radial_panels = 8;   ///< composite-rule panel count
    int radial_order = 12;   ///< Gauss-Legendre order per panel

    /// True when the angular rule integrates degree-2n spherical integrands
    /// exactly: theta_order >= n+1 and phi_points >= 2n+2.
    [[nodiscard]] bool sufficient_for(int n) const {
        return theta_order >= n + 1 && phi_points >= 2 * n + 2;
    }

    /// Smallest sufficient angular rule for order n, with default radial part.
    static QuadratureSpec for_order(int n);

    /// Throws std::domain_error unless every count is >= 1.
    void validate() const;
};

}  // namespace hq
