#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "slr/error.hpp"

namespace slr {

struct Vec2 {
    double x = 0, y = 0;
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

// Real 2x2 matrix [[a,b],[c,d]], unit determinant throughout the library.
struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 rotation(double t) { return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)}; }
    static Mat2 diagonal(double l) { return {l, 0, 0, 1.0 / l}; }
    static Mat2 shear(double x) { return {1, x, 0, 1}; }

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
    Mat2 inverse() const { return {d, -b, -c, a}; } // adjugate; valid for det = 1
    Mat2 transpose() const { return {a, c, b, d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 conj(const Mat2& p) const { return p * (*this) * p.inverse(); } // p M p^-1
    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }
    double dist(const Mat2& o) const {
        return std::max(std::max(std::abs(a - o.a), std::abs(b - o.b)),
                        std::max(std::abs(c - o.c), std::abs(d - o.d)));
    }
};

inline Mat2 commutator(const Mat2& x, const Mat2& y) {
    return x * y * x.inverse() * y.inverse();
}

// Throws bad_input unless det = 1 within tol. Entry point for external data.
Mat2 checked_mat2(double a, double b, double c, double d, double tol = 1e-12);
Mat2 parse_mat2(const std::string& text); // "a,b,c,d"

enum class ConjKind { identity, minus_identity, elliptic, parabolic, hyperbolic };

const char* conj_kind_name(ConjKind k);

// Classified conjugacy datum of an SL(2,R) element.
struct ConjClass {
    ConjKind kind = ConjKind::identity;
    double angle = 0;      // elliptic: theta in (0,2pi), tr = 2cos(theta), sgn(sin) = sgn(M21-M12)
    int trace_sign = 0;    // parabolic/hyperbolic: sign of the trace
    int shear_sign = 0;    // parabolic: sign s of the unipotent shear in eps*M
    double eigenvalue = 0; // hyperbolic: |lambda| > 1, tr = lambda + 1/lambda
    std::array<double, 2> fixed_dir{0, 0}; // angles mod pi; parabolic: 1, hyperbolic: 2
    int n_fixed = 0;
};

// Guard band: |(|tr|-2)| < tol*max(1,|tr|) with inconsistent entries -> ambiguous_class.
ConjClass classify(const Mat2& m, double tol = 1e-9);

struct IwasawaCoords {
    double tau = 0; // rotation angle in [0,2pi)
    double r = 1;   // diagonal scale > 0
    double x = 0;   // upper shear
};

IwasawaCoords iwasawa(const Mat2& m);
Mat2 from_iwasawa(const IwasawaCoords& co);

// ---------- trace-identity sweep ----------

struct IdentityResult {
    std::string name;
    double max_residual = 0;
    bool passed = false;
};

// Evaluates both sides of each closed-form trace identity on seeded random
// parameters; an identity fails if any residual exceeds tol.
std::vector<IdentityResult> trace_identities(int sample_count, std::uint64_t seed,
                                             double tol = 1e-9);

} // namespace slr
