#include "slr/lifts.hpp"

#include <cmath>

namespace slr {

namespace {

constexpr double kSnap = 1e-9; // wrap guard for branch placement

double mod_pi(double t) {
    t -= M_PI * std::floor(t / M_PI);
    if (t >= M_PI) t -= M_PI;
    return t;
}

// representative of raw mod pi lying in [base, base+pi), snapped so that
// values an epsilon below base do not jump a whole period
double branch_rep(double raw, double base) {
    double d = mod_pi(raw - base);
    if (d > M_PI - kSnap) d -= M_PI;
    return base + d;
}

} // namespace

double rp1_act(const Mat2& m, double x) {
    Vec2 v = m.apply({std::cos(x), std::sin(x)});
    return mod_pi(std::atan2(v.y, v.x));
}

double canonical_base(const Mat2& m) { return rp1_act(m, 0.0); }

double lift_eval(const LiftedMap& f, double x) {
    double floor_part = M_PI * std::floor(x / M_PI);
    double y = x - floor_part; // in [0, pi)
    double base = canonical_base(f.m);
    return branch_rep(rp1_act(f.m, y), base) + floor_part + f.k * M_PI;
}

LiftedMap lift(const Mat2& m, LiftMode mode) {
    if (mode == LiftMode::canonical) return {m, 0};
    ConjClass c = classify(m);
    if (c.kind == ConjKind::elliptic)
        fail(errc::elliptic_has_no_euler_lift, "elliptic class has no fixed direction");
    if (c.kind == ConjKind::identity || c.kind == ConjKind::minus_identity)
        fail(errc::elliptic_has_no_euler_lift, "central class has no euler lift");
    LiftedMap f{m, 0};
    double rot = translation_number(f);
    f.k = -long(std::llround(rot));
    return f;
}

LiftedMap lift_compose(const LiftedMap& f, const LiftedMap& g) {
    Mat2 prod = f.m * g.m;
    double cg = canonical_base(g.m);
    double val = branch_rep(rp1_act(f.m, cg), canonical_base(f.m));
    double w = (val - canonical_base(prod)) / M_PI;
    long wi = std::llround(w);
    if (std::abs(w - double(wi)) > 1e-6)
        fail(errc::non_integer_winding, "winding " + std::to_string(w));
    return {prod, f.k + g.k + wi};
}

LiftedMap lift_inverse(const LiftedMap& f) {
    LiftedMap g{f.m.inverse(), 0};
    // fix the offset so that g o f is the trivial lift
    LiftedMap c = lift_compose(g, f);
    double tau = canonical_base(c.m) + c.k * M_PI;
    long m = std::llround(tau / M_PI);
    g.k = -m;
    return g;
}

double translation_number(const LiftedMap& f) {
    ConjClass c = classify(f.m);
    switch (c.kind) {
        case ConjKind::identity:
        case ConjKind::minus_identity:
            return double(f.k) + std::llround(canonical_base(f.m) / M_PI);
        case ConjKind::elliptic: {
            double frac = std::fmod(c.angle, M_PI) / M_PI;
            return frac + double(f.k);
        }
        default: {
            // fixed point x0: canonical branch either fixes it or shifts by pi
            double x0 = c.fixed_dir[0];
            double v = branch_rep(x0, canonical_base(f.m));
            long j = std::llround((v - x0) / M_PI);
            return double(j + f.k);
        }
    }
}

long central_degree(const LiftedMap& f, double tol) {
    double scale = std::max(1.0, f.m.max_abs());
    if (f.m.dist(Mat2::identity()) > tol * scale && f.m.dist(-Mat2::identity()) > tol * scale)
        fail(errc::not_central, "underlying PSL class is not the identity");
    double tau = canonical_base(f.m) + f.k * M_PI;
    long m = std::llround(tau / M_PI);
    if (std::abs(tau - m * M_PI) > tol * M_PI)
        fail(errc::not_central, "translation " + std::to_string(tau) + " not a multiple of pi");
    return m;
}

} // namespace slr
