#include "slr/invariants.hpp"

#include <cmath>

#include "slr/lifts.hpp"

namespace slr {

double rho_element(const Mat2& m) {
    ConjClass c = classify(m);
    switch (c.kind) {
        case ConjKind::identity:
        case ConjKind::minus_identity:
        case ConjKind::hyperbolic: return 0.0;
        case ConjKind::elliptic: return 2.0 * (1.0 - c.angle / M_PI);
        case ConjKind::parabolic: return c.trace_sign < 0 ? 0.0 : -double(c.shear_sign);
    }
    return 0.0;
}

double rho_boundary(const SurfaceRep& rep) {
    double r = 0;
    for (const Mat2& c : rep.C) r += rho_element(c);
    return r;
}

namespace {

void check_rep(const SurfaceRep& rep, double tol = 1e-6) {
    if (int(rep.A.size()) != rep.g || int(rep.B.size()) != rep.g ||
        int(rep.C.size()) != rep.n)
        fail(errc::not_a_representation, "generator count mismatch");
    double res = rep.relation_residual();
    if (res > tol)
        fail(errc::not_a_representation, "relation residual " + std::to_string(res));
}

LiftedMap relator_lift(const SurfaceRep& rep, const std::vector<LiftedMap>& boundary) {
    LiftedMap total = lift_central({0});
    for (int i = 0; i < rep.g; ++i) {
        LiftedMap la = lift(rep.A[i]), lb = lift(rep.B[i]);
        LiftedMap term =
            lift_compose(lift_compose(la, lb), lift_compose(lift_inverse(la), lift_inverse(lb)));
        total = lift_compose(total, term);
    }
    for (const LiftedMap& lc : boundary) total = lift_compose(total, lc);
    return total;
}

} // namespace

double toledo(const SurfaceRep& rep) {
    check_rep(rep);
    std::vector<LiftedMap> lifts;
    double rots = 0;
    for (const Mat2& c : rep.C) {
        if (c.dist(-Mat2::identity()) < 1e-9)
            fail(errc::central_boundary, "boundary image -I");
        lifts.push_back(lift(c));
        rots += translation_number(lifts.back());
    }
    long m = central_degree(relator_lift(rep, lifts));
    return rots - double(m);
}

long relative_euler(const SurfaceRep& rep) {
    check_rep(rep);
    std::vector<LiftedMap> lifts;
    for (const Mat2& c : rep.C) {
        ConjClass cl = classify(c);
        if (cl.kind == ConjKind::elliptic)
            fail(errc::elliptic_boundary, "relative Euler class needs non-elliptic boundary");
        if (cl.kind == ConjKind::identity || cl.kind == ConjKind::minus_identity)
            fail(errc::central_boundary, "relative Euler class needs non-central boundary");
        lifts.push_back(lift(c, LiftMode::euler));
    }
    long e = -central_degree(relator_lift(rep, lifts));
    double t = toledo(rep);
    if (std::abs(t - double(e)) > 1e-6)
        fail(errc::integrality_violation,
             "Toledo " + std::to_string(t) + " vs Euler class " + std::to_string(e));
    return e;
}

long signature(const SurfaceRep& rep) {
    double v = 2.0 * toledo(rep) + rho_boundary(rep);
    long s = std::llround(v);
    if (std::abs(v - double(s)) > 1e-6)
        fail(errc::integrality_violation, "2T + rho = " + std::to_string(v));
    return s;
}

SigmaVector sigma_vector(const SurfaceRep& rep) {
    SigmaVector out;
    int n_ell = 0, n_hyp = 0, n_par = 0;
    for (const Mat2& c : rep.C) {
        ConjClass cl = classify(c);
        if (cl.kind == ConjKind::minus_identity)
            fail(errc::central_boundary, "boundary image -I has no sigma value");
        out.kinds.push_back(cl.kind);
        switch (cl.kind) {
            case ConjKind::elliptic:
                out.sigma.push_back({cl.angle > M_PI ? 1 : -1, 0});
                out.s.push_back(0);
                ++n_ell;
                break;
            case ConjKind::hyperbolic:
                out.sigma.push_back({cl.trace_sign > 0 ? 1 : 0, 0});
                out.s.push_back(0);
                ++n_hyp;
                break;
            case ConjKind::parabolic: {
                SigmaValue s = cl.trace_sign > 0 ? SigmaValue{-cl.shear_sign, 0}
                                                 : SigmaValue{0, cl.shear_sign};
                out.sigma.push_back(s);
                out.s.push_back(s.s_value());
                ++n_par;
                break;
            }
            default:
                out.sigma.push_back({0, 0});
                out.s.push_back(0);
                break;
        }
    }
    int n = rep.n;
    if (n_ell == n) out.family = Family::elliptic;
    else if (n_hyp == n) out.family = Family::hyperbolic;
    else if (n_par == n) out.family = Family::parabolic;
    else if (n >= 1 && n_par == 1 && n_hyp == n - 1 &&
             out.kinds.back() == ConjKind::parabolic)
        out.family = Family::hp;
    else { out.family = Family::elliptic; out.mixed = true; }
    return out;
}

InvariantRecord invariant_record(const SurfaceRep& rep) {
    InvariantRecord r;
    r.toledo = toledo(rep);
    r.rho = rho_boundary(rep);
    r.signature = signature(rep);
    r.sigma = sigma_vector(rep);
    double ac = abs_chi(rep.g, rep.n);
    r.mw_slack_toledo = ac - std::abs(r.toledo);
    r.mw_slack_sign = 2 * ac - std::abs(double(r.signature));
    if (!r.sigma.mixed && r.sigma.family == Family::elliptic) {
        double frac = 0;
        for (const Mat2& c : rep.C) {
            double th = classify(c).angle;
            frac += std::fmod(th, M_PI) / M_PI;
        }
        double v = 2 * r.toledo + 2 * (rep.n - frac);
        long s = std::llround(v);
        if (std::abs(v - double(s)) > 1e-6)
            fail(errc::integrality_violation, "PSL signature " + std::to_string(v));
        r.psl_signature = s;
    }
    bool non_elliptic = true;
    for (ConjKind k : r.sigma.kinds)
        if (k != ConjKind::hyperbolic && k != ConjKind::parabolic) non_elliptic = false;
    if (non_elliptic) r.euler = relative_euler(rep);
    for (int i = 0; i < rep.n; ++i) {
        if (r.sigma.kinds[i] != ConjKind::parabolic) continue;
        if (r.sigma.s[i] > 0) ++r.s_plus;
        else ++r.s_minus;
    }
    if (!r.sigma.mixed && r.sigma.family == Family::parabolic && rep.g >= 1) {
        r.psl_bounds_ok = (r.toledo >= -ac + r.s_plus - 1e-9) &&
                          (r.toledo <= ac - r.s_minus + 1e-9);
    }
    return r;
}

} // namespace slr
