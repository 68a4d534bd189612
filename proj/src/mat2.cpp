#include "slr/mat2.hpp"

#include <cstdio>
#include <sstream>

#include "slr/rng.hpp"

namespace slr {

const char* errc_name(errc c) {
    switch (c) {
        case errc::ambiguous_class: return "AmbiguousClass";
        case errc::non_integer_winding: return "NonIntegerWinding";
        case errc::not_central: return "NotCentral";
        case errc::elliptic_has_no_euler_lift: return "EllipticHasNoEulerLift";
        case errc::central_boundary: return "CentralBoundary";
        case errc::not_a_representation: return "NotARepresentation";
        case errc::elliptic_boundary: return "EllipticBoundary";
        case errc::integrality_violation: return "IntegralityViolation";
        case errc::sum_not_multiple_of_2pi: return "SumNotMultipleOf2Pi";
        case errc::central_commutator: return "CentralCommutator";
        case errc::not_realizable: return "NotRealizable";
        case errc::budget_exhausted: return "BudgetExhausted";
        case errc::infeasible_sigma: return "InfeasibleSigma";
        case errc::infeasible_branch: return "InfeasibleBranch";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::central_cut: return "CentralCut";
        case errc::rank_ambiguous: return "RankAmbiguous";
        case errc::degenerate_form: return "DegenerateForm";
        case errc::too_large: return "TooLarge";
        case errc::out_of_domain: return "OutOfDomain";
        case errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

const char* conj_kind_name(ConjKind k) {
    switch (k) {
        case ConjKind::identity: return "identity";
        case ConjKind::minus_identity: return "minus_identity";
        case ConjKind::elliptic: return "elliptic";
        case ConjKind::parabolic: return "parabolic";
        case ConjKind::hyperbolic: return "hyperbolic";
    }
    return "?";
}

Mat2 checked_mat2(double a, double b, double c, double d, double tol) {
    Mat2 m{a, b, c, d};
    double scale = std::max(1.0, m.max_abs() * m.max_abs());
    if (std::abs(m.det() - 1.0) > tol * scale)
        fail(errc::bad_input, "determinant " + std::to_string(m.det()) + " != 1");
    return m;
}

Mat2 parse_mat2(const std::string& text) {
    double v[4];
    std::istringstream in(text);
    for (int i = 0; i < 4; ++i) {
        std::string tok;
        if (!std::getline(in, tok, ',')) fail(errc::bad_input, "matrix needs 4 entries 'a,b,c,d'");
        try {
            v[i] = std::stod(tok);
        } catch (const std::exception&) {
            fail(errc::bad_input, "bad matrix entry '" + tok + "'");
        }
    }
    return checked_mat2(v[0], v[1], v[2], v[3], 1e-9);
}

namespace {

double angle_mod_pi(double y, double x) {
    double t = std::atan2(y, x);
    t -= M_PI * std::floor(t / M_PI);
    if (t >= M_PI) t -= M_PI; // guard the t == pi representative
    return t;
}

} // namespace

ConjClass classify(const Mat2& m, double tol) {
    ConjClass out;
    double tr = m.trace();
    double band = tol * std::max(1.0, std::abs(tr));
    double off = m.dist(Mat2::identity());
    double offm = m.dist(-Mat2::identity());
    if (off <= tol) {
        out.kind = ConjKind::identity;
        return out;
    }
    if (offm <= tol) {
        out.kind = ConjKind::minus_identity;
        return out;
    }
    if (std::abs(std::abs(tr) - 2.0) <= band) {
        // parabolic unless the nilpotent part is too small to trust
        int eps = tr >= 0 ? 1 : -1;
        Mat2 n{eps * m.a - 1, eps * m.b, eps * m.c, eps * m.d - 1};
        double nn = n.max_abs();
        if (nn <= 10 * tol)
            fail(errc::ambiguous_class, "near +-I at |tr| = 2 band, nilpotent part " +
                                            std::to_string(nn));
        out.kind = ConjKind::parabolic;
        out.trace_sign = eps;
        out.shear_sign = std::abs(n.b) >= std::abs(n.c) ? (n.b > 0 ? 1 : -1) : (n.c > 0 ? -1 : 1);
        // fixed direction: image of the nilpotent N spans ker N
        Vec2 col = std::abs(n.a) + std::abs(n.c) >= std::abs(n.b) + std::abs(n.d)
                       ? Vec2{n.a, n.c}
                       : Vec2{n.b, n.d};
        out.fixed_dir[0] = angle_mod_pi(col.y, col.x);
        out.n_fixed = 1;
        return out;
    }
    if (std::abs(tr) < 2.0) {
        out.kind = ConjKind::elliptic;
        double th = std::acos(std::min(1.0, std::max(-1.0, tr / 2.0)));
        if (m.c - m.b <= 0) th = 2 * M_PI - th;
        out.angle = th;
        return out;
    }
    out.kind = ConjKind::hyperbolic;
    out.trace_sign = tr > 0 ? 1 : -1;
    double disc = std::sqrt(tr * tr - 4.0);
    double lam = (tr + (tr > 0 ? disc : -disc)) / 2.0; // |lam| > 1, tr = lam + 1/lam
    out.eigenvalue = lam;
    // eigendirections for eigenvalues lam and 1/lam
    double mu[2] = {lam, 1.0 / lam};
    for (int i = 0; i < 2; ++i) {
        // (M - mu I) v = 0: take the larger row's orthogonal direction
        double r1x = m.a - mu[i], r1y = m.b;
        double r2x = m.c, r2y = m.d - mu[i];
        double v1 = std::hypot(r1x, r1y), v2 = std::hypot(r2x, r2y);
        Vec2 v = v1 >= v2 ? Vec2{-r1y, r1x} : Vec2{-r2y, r2x};
        out.fixed_dir[i] = angle_mod_pi(v.y, v.x);
    }
    out.n_fixed = 2;
    return out;
}

IwasawaCoords iwasawa(const Mat2& m) {
    double r = std::hypot(m.a, m.c);
    double tau = std::atan2(m.c, m.a);
    if (tau < 0) tau += 2 * M_PI;
    // R(-tau) * M = [[r, r x],[0, 1/r]]
    double top = std::cos(tau) * m.b + std::sin(tau) * m.d;
    return {tau, r, top / r};
}

Mat2 from_iwasawa(const IwasawaCoords& co) {
    return Mat2::rotation(co.tau) * Mat2::diagonal(co.r) * Mat2::shear(co.x);
}

// ---------- trace identities ----------

namespace {

using Eval = double (*)(Rng&);

double resid_eqn5(Rng& rng) {
    double th = rng.uniform(0.05, 2 * M_PI - 0.05);
    double th1 = rng.uniform(0.05, 2 * M_PI - 0.05);
    Mat2 p = random_sl2(rng);
    double s = (p.transpose() * p).trace();
    Mat2 lhs = Mat2::rotation(th) * Mat2::rotation(th1).conj(p);
    double rhs = 2 * std::cos(th) * std::cos(th1) - s * std::sin(th) * std::sin(th1);
    return std::abs(lhs.trace() - rhs);
}

double resid_eqn7(Rng& rng) {
    double lam = rng.sign() * std::exp(rng.uniform(0.1, 1.2));
    Mat2 beta = random_sl2(rng);
    double lhs = commutator(Mat2::diagonal(lam), beta).trace();
    double rhs = 2 - beta.b * beta.c * (lam - 1 / lam) * (lam - 1 / lam);
    return std::abs(lhs - rhs);
}

double resid_eqn8(Rng& rng) {
    double th = rng.uniform(0, 2 * M_PI);
    Mat2 beta = random_sl2(rng);
    double lhs = commutator(Mat2::rotation(th), beta).trace();
    double rhs = 2 + ((beta.transpose() * beta).trace() - 2) * std::sin(th) * std::sin(th);
    return std::abs(lhs - rhs);
}

double resid_eqn10(Rng& rng) {
    double s = rng.sign();
    int eps = rng.sign();
    Mat2 alpha = Mat2::shear(s);
    if (eps < 0) alpha = -alpha;
    Mat2 beta = random_sl2(rng);
    double lhs = commutator(alpha, beta).trace();
    double rhs = 2 + s * s * beta.c * beta.c;
    return std::abs(lhs - rhs);
}

double resid_eqn16(Rng& rng) {
    double lam = std::exp(rng.uniform(0.1, 1.2));
    double th = rng.uniform(0, 2 * M_PI);
    Mat2 q = random_sl2(rng);
    double lhs = (Mat2::diagonal(lam) * Mat2::rotation(th).conj(q)).trace();
    double ip = q.a * q.c + q.b * q.d;
    double big = std::sqrt((lam + 1 / lam) * (lam + 1 / lam) +
                           (lam - 1 / lam) * (lam - 1 / lam) * ip * ip);
    double alpha = std::atan2((lam - 1 / lam) * ip / big, (lam + 1 / lam) / big);
    double rhs = big * std::cos(th - alpha);
    return std::abs(lhs - rhs);
}

double resid_hyp4(Rng& rng) {
    int a1 = rng.uniform_int(2), a2 = rng.uniform_int(2);
    double lam1 = rng.uniform(0.1, 0.95);
    Mat2 m = random_sl2(rng);
    if (m.trace() <= 2.05) return 0; // identity needs a+d > 2; resample cheaply
    Mat2 c1 = Mat2::diagonal(lam1);
    if ((a1 + 1) % 2 == 1) c1 = -c1;
    Mat2 c2 = m;
    if ((a2 + 1) % 2 == 1) c2 = -c2;
    double sgn = ((a1 + a2) % 2 == 0) ? 1.0 : -1.0;
    double rhs = sgn * (lam1 * (m.a + m.d) + m.d * (1 / lam1 - lam1));
    return std::abs((c1 * c2).trace() - rhs);
}

SigmaValue random_sigma_par(Rng& rng) {
    switch (rng.uniform_int(4)) {
        case 0: return {1, 0};
        case 1: return {-1, 0};
        case 2: return {0, 1};
        default: return {0, -1};
    }
}

double resid_par3(Rng& rng) {
    SigmaValue a1 = random_sigma_par(rng), a2 = random_sigma_par(rng);
    double s = a1.s_value(), mu = a2.s_value();
    Mat2 p = random_sl2(rng);
    Mat2 lhs = parabolic_normal_form(a1) * parabolic_normal_form(a2).conj(p);
    double sgn = ((a1.re + a2.re) % 2 == 0) ? 1.0 : -1.0;
    double pa = p.a, pc = p.c;
    Mat2 rhs{sgn * (1 - mu * pa * pc - mu * s * pc * pc),
             sgn * (s + mu * pa * pa + mu * s * pa * pc), sgn * (-mu * pc * pc),
             sgn * (1 + mu * pa * pc)};
    return lhs.dist(rhs);
}

double resid_par15(Rng& rng) {
    SigmaValue a2 = random_sigma_par(rng);
    double s2 = a2.s_value();
    Mat2 c1 = random_hyperbolic(rng, rng.sign());
    Mat2 lhs = c1 * parabolic_normal_form(a2);
    double sgn = ((a2.re + 1) % 2 == 0) ? 1.0 : -1.0;
    double rhs = sgn * (c1.a + c1.d + c1.c * s2);
    return std::abs(lhs.trace() - rhs);
}

struct Identity {
    const char* name;
    Eval eval;
};

const Identity kIdentities[] = {
    {"rot-rot product trace", resid_eqn5},
    {"diagonal commutator trace", resid_eqn7},
    {"rotation commutator trace", resid_eqn8},
    {"unipotent commutator trace", resid_eqn10},
    {"diagonal-rotation cosine form", resid_eqn16},
    {"signed hyperbolic pants trace", resid_hyp4},
    {"parabolic pants product", resid_par3},
    {"hyperbolic-parabolic trace", resid_par15},
};

} // namespace

std::vector<IdentityResult> trace_identities(int sample_count, std::uint64_t seed, double tol) {
    if (sample_count < 1) fail(errc::bad_input, "sample_count must be >= 1");
    std::vector<IdentityResult> out;
    std::uint64_t which = 0;
    for (const auto& id : kIdentities) {
        IdentityResult r;
        r.name = id.name;
        for (int i = 0; i < sample_count; ++i) {
            Rng rng = Rng::cell(seed ^ (which << 32), std::uint64_t(i));
            r.max_residual = std::max(r.max_residual, id.eval(rng));
        }
        r.passed = r.max_residual < tol;
        out.push_back(r);
        ++which;
    }
    return out;
}

} // namespace slr
