#include "slr/rep.hpp"

#include <algorithm>
#include <cmath>

namespace slr {

Mat2 SurfaceRep::handle_product() const {
    Mat2 p = Mat2::identity();
    for (int i = 0; i < g; ++i) p = p * commutator(A[i], B[i]);
    return p;
}

Mat2 SurfaceRep::relator() const {
    Mat2 p = handle_product();
    for (const Mat2& c : C) p = p * c;
    return p;
}

RepDiagnostics validate(const SurfaceRep& rep, double tol) {
    RepDiagnostics d;
    d.relation_residual = rep.relation_residual();
    d.relation_ok = d.relation_residual < tol;
    for (const Mat2& c : rep.C) {
        d.boundary_trace_gap.push_back(std::abs(std::abs(c.trace()) - 2.0));
        try {
            d.boundary.push_back(classify(c, tol));
        } catch (const error&) {
            d.boundary.push_back(classify(c, 0.0));
        }
    }
    return d;
}

SurfaceRep close_up(int g, std::vector<Mat2> a, std::vector<Mat2> b, std::vector<Mat2> c_partial,
                    int n) {
    if (int(a.size()) != g || int(b.size()) != g || int(c_partial.size()) != n - 1 || n < 1)
        fail(errc::bad_input, "close_up: need g handle pairs and n-1 boundary matrices");
    for (const auto* v : {&a, &b, &c_partial})
        for (const Mat2& m : *v)
            if (std::abs(m.det() - 1.0) > 1e-9 * std::max(1.0, m.max_abs() * m.max_abs()))
                fail(errc::bad_input, "close_up: input determinant != 1");
    SurfaceRep rep{g, n, std::move(a), std::move(b), std::move(c_partial)};
    Mat2 w = rep.relator();
    rep.C.push_back(w.inverse());
    return rep;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::elliptic_unipotent: return "e";
        case Family::elliptic: return "ell";
        case Family::elliptic_psl: return "ell_p";
        case Family::hyperbolic: return "hyp";
        case Family::parabolic: return "par";
        case Family::parabolic_psl: return "par_p";
        case Family::hp: return "hp";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    std::string s;
    for (char c : name) s += char(std::tolower(c));
    if (s == "e" || s == "elliptic-unipotent") return Family::elliptic_unipotent;
    if (s == "ell" || s == "elliptic") return Family::elliptic;
    if (s == "ell_p" || s == "ellp") return Family::elliptic_psl;
    if (s == "hyp" || s == "hyperbolic") return Family::hyperbolic;
    if (s == "par" || s == "parabolic") return Family::parabolic;
    if (s == "par_p" || s == "parp") return Family::parabolic_psl;
    if (s == "hp") return Family::hp;
    fail(errc::bad_input, "unknown family '" + name + "'");
}

// ---------- parabolic normal forms ----------

Mat2 parabolic_normal_form(SigmaValue a) {
    if (std::abs(a.re) + std::abs(a.im) != 1)
        fail(errc::bad_input, "sigma value must be one of +-1, +-i");
    double s = a.s_value();
    Mat2 m = Mat2::shear(s);
    return (a.re + 1) % 2 == 0 ? m : -m; // (-1)^(re+1)
}

SigmaValue sigma_of_parabolic(const Mat2& m, double tol) {
    ConjClass c = classify(m, tol);
    if (c.kind != ConjKind::parabolic) fail(errc::bad_input, "matrix is not parabolic");
    if (c.trace_sign > 0) return {-c.shear_sign, 0};
    return {0, c.shear_sign};
}

// ---------- pants builders ----------

SurfaceRep pants_hyp(std::array<int, 3> a, const PantsHypParams& p) {
    for (int v : a)
        if (v != 0 && v != 1) fail(errc::bad_input, "sigma entries must be 0 or 1");
    if (!(p.lambda1 > 0 && p.lambda1 < 1) || !(p.trace2 > 2) || !(p.target_mag > 2) ||
        !(p.c_mag > 0) || (p.branch_sign != 1 && p.branch_sign != -1))
        fail(errc::infeasible_sigma, "pants_hyp needs lambda1 in (0,1), trace2 > 2, "
                                     "target_mag > 2, c_mag > 0");
    double s12 = ((a[0] + a[1]) % 2 == 0) ? 1.0 : -1.0;
    double t3 = a[2] == 1 ? 1.0 : -1.0;
    // lambda1 (aa+dd) + dd (1/lambda1 - lambda1) = s12 * t3 * target_mag
    double dd = (s12 * t3 * p.target_mag - p.lambda1 * p.trace2) / (1.0 / p.lambda1 - p.lambda1);
    double aa = p.trace2 - dd;
    double cc = p.branch_sign * p.c_mag;
    double bb = (aa * dd - 1.0) / cc;
    Mat2 c1 = Mat2::diagonal(p.lambda1);
    if ((a[0] + 1) % 2 == 1) c1 = -c1;
    Mat2 m{aa, bb, cc, dd};
    Mat2 c2 = (a[1] + 1) % 2 == 1 ? -m : m;
    SurfaceRep rep{0, 3, {}, {}, {c1, c2, (c1 * c2).inverse()}};
    ConjClass c3 = classify(rep.C[2]);
    if (c3.kind != ConjKind::hyperbolic || (c3.trace_sign > 0 ? 1 : 0) != a[2])
        fail(errc::infeasible_sigma, "third boundary missed the requested sigma");
    return rep;
}

PantsParResult pants_par(SigmaValue a1, SigmaValue a2, ParBranch branch, double pa, double pb) {
    int s = a1.s_value(), mu = a2.s_value();
    Mat2 conj;
    if (branch == ParBranch::c2) {
        if (mu * s != 1) fail(errc::infeasible_branch, "c=2 branch requires mu*s = 1");
        double qa = (pa != 0) ? pa : 0.5;
        conj = Mat2{qa, pb, 2.0, (1.0 + 2.0 * pb) / qa};
    } else {
        int want = branch == ParBranch::c0_pos ? 1 : -1;
        double qa = pa;
        if (qa == 0) qa = (want == s) ? 0.5 : 2.0; // |pa|<1 gives sgn(s), |pa|>1 gives sgn(mu)
        double e12 = s + mu * qa * qa;
        if (e12 == 0 || (e12 > 0 ? 1 : -1) != want)
            fail(errc::infeasible_branch, "requested sign of s + mu a^2 not realized");
        conj = Mat2{qa, pb, 0.0, 1.0 / qa};
    }
    Mat2 c1 = parabolic_normal_form(a1);
    Mat2 c2 = parabolic_normal_form(a2).conj(conj);
    Mat2 c3 = (c1 * c2).inverse();
    PantsParResult out;
    out.rep = SurfaceRep{0, 3, {}, {}, {c1, c2, c3}};
    out.a3 = sigma_of_parabolic(c3);
    return out;
}

TorusRep torus_rep(double lambda, const Mat2& beta, double tol) {
    if (lambda == 0 || std::abs(std::abs(lambda) - 1.0) < 1e-12)
        fail(errc::bad_input, "lambda must differ from 0 and +-1");
    Mat2 a = Mat2::diagonal(lambda);
    Mat2 k = commutator(a, beta);
    if (k.dist(Mat2::identity()) < tol || k.dist(-Mat2::identity()) < tol)
        fail(errc::central_commutator, "[A,B] central");
    TorusRep out;
    out.rep = SurfaceRep{1, 1, {a}, {beta}, {k.inverse()}};
    out.sub_label = {lambda > 0 ? 1 : -1, beta.trace() > 0 ? 1 : -1, beta.c > 0 ? 1 : -1};
    return out;
}

SurfaceRep so2_rep(int g, const std::vector<double>& theta, double tol) {
    double sum = 0;
    for (double t : theta) {
        if (!(t > 0 && t < 2 * M_PI)) fail(errc::bad_input, "angles must lie in (0, 2pi)");
        if (std::abs(t - M_PI) < 1e-12) fail(errc::central_boundary, "angle pi gives boundary -I");
        sum += t;
    }
    double k = sum / (2 * M_PI);
    if (std::abs(k - std::round(k)) > tol)
        fail(errc::sum_not_multiple_of_2pi, "sum of angles = " + std::to_string(sum));
    SurfaceRep rep;
    rep.g = g;
    rep.n = int(theta.size());
    rep.A.assign(g, Mat2::identity());
    rep.B.assign(g, Mat2::identity());
    for (double t : theta) rep.C.push_back(Mat2::rotation(t));
    // snap the relator closed: replace the last boundary by the exact inverse
    if (!rep.C.empty()) {
        SurfaceRep head = rep;
        head.C.pop_back();
        Mat2 w = head.relator();
        rep.C.back() = w.inverse();
    }
    return rep;
}

// ---------- solve_chi ----------

namespace {

struct SlotSolution {
    Mat2 x, y;
    bool ok = false;
};

// companion construction: X = [[x,-1],[1,0]], Y = [[p,q],[r,s]] with
// s = y-p, q = r+z-xp, and r solving r^2 + r(z-xp) + (1+p^2-py) = 0.
SlotSolution solve_slot(double x, double y, double z, const Mat2* prev_y) {
    SlotSolution out;
    double a2 = x * x - 4, a1 = 4 * y - 2 * x * z, a0 = z * z - 4;
    auto disc_at = [&](double p) { return a2 * p * p + a1 * p + a0; };
    double p = 0;
    bool found = false;
    const double eps = 1e-13;
    if (a2 > eps) {
        double dd = a1 * a1 - 4 * a2 * a0;
        if (dd < 0) {
            p = 0;
        } else {
            p = (-a1 + std::sqrt(dd)) / (2 * a2) + 1.0;
        }
        found = true;
    } else if (a2 < -eps) {
        double pv = -a1 / (2 * a2);
        if (disc_at(pv) >= -1e-12) {
            p = pv;
            found = true;
        }
    } else {
        if (std::abs(a1) > eps) {
            p = (std::max(1.0, std::abs(a0)) - a0) / a1;
            found = true;
        } else if (a0 >= -1e-12) {
            p = 0;
            found = true;
        }
    }
    if (!found) return out;
    double disc = std::max(0.0, disc_at(p));
    double sq = std::sqrt(disc);
    double roots[2] = {(-(z - x * p) + sq) / 2, (-(z - x * p) - sq) / 2};
    int pick = 0;
    if (prev_y) {
        auto make = [&](double r) {
            return Mat2{p, r + z - x * p, r, y - p};
        };
        if (make(roots[1]).dist(*prev_y) < make(roots[0]).dist(*prev_y)) pick = 1;
    }
    double r = roots[pick];
    out.x = Mat2{x, -1, 1, 0};
    out.y = Mat2{p, r + z - x * p, r, y - p};
    out.ok = true;
    return out;
}

} // namespace

std::pair<Mat2, Mat2> solve_chi(const TraceCoords& t, const std::pair<Mat2, Mat2>* prev) {
    if (!chi_realizable(t))
        fail(errc::not_realizable, "no SL(2,R) pair has these traces");
    // slot x
    {
        SlotSolution s = solve_slot(t.x, t.y, t.z, prev ? &prev->second : nullptr);
        if (s.ok) return {s.x, s.y};
    }
    // slot y: chi(U,V) = (y,x,z), then (X,Y) = (V,U)
    {
        SlotSolution s = solve_slot(t.y, t.x, t.z, prev ? &prev->first : nullptr);
        if (s.ok) return {s.y, s.x};
    }
    // slot z: chi(U,V) = (z, y, zy-x), then X = U V^-1, Y = V
    {
        SlotSolution s = solve_slot(t.z, t.y, t.z * t.y - t.x, prev ? &prev->second : nullptr);
        if (s.ok) return {s.x * s.y.inverse(), s.y};
    }
    fail(errc::not_realizable, "companion construction failed on all slots");
}

// ---------- samplers ----------

namespace {

double theta_draw(Rng& rng) {
    // elliptic angle away from 0, pi, 2pi
    const double band = 0.05;
    double t = rng.uniform(band, M_PI - band);
    return rng.coin() ? t : t + M_PI;
}

Mat2 random_parabolic(Rng& rng) {
    SigmaValue a;
    switch (rng.uniform_int(4)) {
        case 0: a = {1, 0}; break;
        case 1: a = {-1, 0}; break;
        case 2: a = {0, 1}; break;
        default: a = {0, -1}; break;
    }
    return parabolic_normal_form(a).conj(random_sl2(rng));
}

bool family_member(Family f, const Mat2& m, bool last, int idx, int n, double margin) {
    double tr = m.trace();
    double gap = std::abs(std::abs(tr) - 2.0);
    switch (f) {
        case Family::elliptic:
        case Family::elliptic_unipotent:
        case Family::elliptic_psl:
            return std::abs(tr) < 2.0 && gap > margin &&
                   m.dist(-Mat2::identity()) > margin; // exclude -I (and I has tr 2)
        case Family::hyperbolic:
            return std::abs(tr) > 2.0 && gap > margin;
        case Family::parabolic:
        case Family::parabolic_psl:
            return gap <= margin && m.dist(Mat2::identity()) > 1e-6 &&
                   m.dist(-Mat2::identity()) > 1e-6;
        case Family::hp:
            if (idx == n - 1)
                return gap <= margin && m.dist(Mat2::identity()) > 1e-6 &&
                       m.dist(-Mat2::identity()) > 1e-6;
            return std::abs(tr) > 2.0 && gap > margin;
    }
    (void)last;
    return false;
}

// trace of prefix * conj(L(t) p0, base) as an exact quadratic in t, sampled
// at t = -1, 0, 1
struct Quad {
    double q0, q1, q2;
    double eval(double t) const { return q0 + q1 * t + q2 * t * t; }
};

Quad quad_through(double fm1, double f0, double f1) {
    return {f0, (f1 - fm1) / 2, (f1 + fm1) / 2 - f0};
}

// roots of q(t) = target
int quad_solve(const Quad& q, double target, double out[2]) {
    double a = q.q2, b = q.q1, c = q.q0 - target;
    if (std::abs(a) < 1e-13) {
        if (std::abs(b) < 1e-13) return 0;
        out[0] = -c / b;
        return 1;
    }
    double disc = b * b - 4 * a * c;
    if (disc < 0) return 0;
    double sq = std::sqrt(disc);
    double r1 = (-b + sq) / (2 * a), r2 = (-b - sq) / (2 * a);
    out[0] = r1;
    out[1] = r2;
    return 2;
}

} // namespace

SurfaceRep sample(int g, int n, Family family, Rng& rng, int budget, int* iterations_out) {
    if (budget < 1) fail(errc::bad_input, "budget must be >= 1");
    if (g < 0 || n < 1 || 2 - 2 * g - n > 0) fail(errc::out_of_domain, "need chi <= 0, n >= 1");
    const double margin = 1e-6;
    const bool exact_last =
        family == Family::parabolic || family == Family::parabolic_psl || family == Family::hp;

    for (int it = 0; it < budget; ++it) {
        if (iterations_out) *iterations_out = it + 1;
        SurfaceRep rep;
        rep.g = g;
        rep.n = n;
        for (int i = 0; i < g; ++i) {
            rep.A.push_back(random_sl2(rng));
            rep.B.push_back(random_sl2(rng));
        }
        bool ok = true;
        for (int j = 0; j + 1 < n; ++j) {
            Mat2 c;
            switch (family) {
                case Family::elliptic:
                case Family::elliptic_unipotent:
                case Family::elliptic_psl: c = random_elliptic(rng, theta_draw(rng)); break;
                case Family::hyperbolic: c = random_hyperbolic(rng, rng.sign()); break;
                case Family::parabolic:
                case Family::parabolic_psl: c = random_parabolic(rng); break;
                case Family::hp: c = random_hyperbolic(rng, rng.sign()); break;
            }
            rep.C.push_back(c);
        }
        if (!exact_last) {
            Mat2 w = rep.handle_product();
            for (const Mat2& c : rep.C) w = w * c;
            Mat2 last = w.inverse();
            if (!family_member(family, last, true, n - 1, n, margin)) continue;
            rep.C.push_back(last);
            for (int j = 0; j + 1 < n; ++j)
                if (!family_member(family, rep.C[j], false, j, n, margin)) { ok = false; break; }
            if (!ok) continue;
            return rep;
        }

        // exact-parabolic closure: one tunable parameter t
        double target = rng.coin() ? 2.0 : -2.0;
        auto closed = [&](double t) -> SurfaceRep {
            SurfaceRep r2 = rep;
            if (n >= 2) {
                Mat2 l{1, 0, t, 1};
                r2.C[n - 2] = l * r2.C[n - 2] * Mat2{1, 0, -t, 1};
            } else {
                r2.B[g - 1] = r2.B[g - 1] * Mat2::shear(t);
            }
            Mat2 w = r2.handle_product();
            for (const Mat2& c : r2.C) w = w * c;
            r2.C.push_back(w.inverse());
            return r2;
        };
        if (n == 1 && g == 0) fail(errc::out_of_domain, "no parabolic closure on a disk");
        auto trace_at = [&](double t) {
            SurfaceRep r2 = closed(t);
            return r2.C.back().trace();
        };
        Quad q = quad_through(trace_at(-1), trace_at(0), trace_at(1));
        double roots[2];
        int nr = quad_solve(q, target, roots);
        if (nr == 0) {
            nr = quad_solve(q, -target, roots);
            if (nr == 0) continue;
        }
        double t = roots[rng.uniform_int(std::max(nr, 1))];
        if (!std::isfinite(t) || std::abs(t) > 1e6) continue;
        SurfaceRep r2 = closed(t);
        if (!family_member(family, r2.C.back(), true, n - 1, n, margin)) continue;
        for (int j = 0; j + 1 < n; ++j)
            if (!family_member(family, r2.C[j], false, j, n, margin)) { ok = false; break; }
        if (!ok) continue;
        return r2;
    }
    fail(errc::budget_exhausted, "no acceptable representation within budget");
}

// ---------- twists, reversal, splitting ----------

SurfaceRep group_twist_mu(const SurfaceRep& rep, int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= rep.n || j >= rep.n)
        fail(errc::bad_input, "mu twist needs two distinct boundary indices");
    SurfaceRep out = rep;
    out.C[i] = -out.C[i];
    out.C[j] = -out.C[j];
    return out;
}

SurfaceRep group_twist_lambda(const SurfaceRep& rep, unsigned a_mask, unsigned b_mask) {
    SurfaceRep out = rep;
    for (int i = 0; i < rep.g; ++i) {
        if (a_mask & (1u << i)) out.A[i] = -out.A[i];
        if (b_mask & (1u << i)) out.B[i] = -out.B[i];
    }
    return out;
}

SurfaceRep reverse_orientation(const SurfaceRep& rep) {
    SurfaceRep out;
    out.g = rep.g;
    out.n = rep.n;
    for (int i = rep.g - 1; i >= 0; --i) {
        out.A.push_back(rep.B[i]);
        out.B.push_back(rep.A[i]);
    }
    for (int j = rep.n - 1; j >= 0; --j) out.C.push_back(rep.C[j].inverse());
    return out;
}

std::pair<SurfaceRep, SurfaceRep> split_standard(const SurfaceRep& rep, int k, int l,
                                                 double tol) {
    if (k < 0 || k > rep.g || l < 0 || l > rep.n)
        fail(errc::bad_input, "split indices out of range");
    Mat2 u = Mat2::identity();
    for (int i = 0; i < k; ++i) u = u * commutator(rep.A[i], rep.B[i]);
    for (int j = 0; j < l; ++j) u = u * rep.C[j];
    if (u.dist(Mat2::identity()) < tol || u.dist(-Mat2::identity()) < tol)
        fail(errc::central_cut, "separating curve has central holonomy");
    SurfaceRep p1, p2;
    p1.g = k;
    p1.n = l + 1;
    p1.A.assign(rep.A.begin(), rep.A.begin() + k);
    p1.B.assign(rep.B.begin(), rep.B.begin() + k);
    p1.C.assign(rep.C.begin(), rep.C.begin() + l);
    p1.C.push_back(u.inverse());
    p2.g = rep.g - k;
    p2.n = rep.n - l + 1;
    p2.A.assign(rep.A.begin() + k, rep.A.end());
    p2.B.assign(rep.B.begin() + k, rep.B.end());
    p2.C.assign(rep.C.begin() + l, rep.C.end());
    p2.C.push_back(u);
    return {p1, p2};
}

// ---------- explicit deformation path ----------

std::vector<SurfaceRep> lemma1_path(double theta, double theta1, const Mat2& p, int steps) {
    auto elliptic_angle = [](double t) {
        return t > 0 && t < 2 * M_PI && std::abs(t - M_PI) > 1e-12;
    };
    if (!elliptic_angle(theta) || !elliptic_angle(theta1))
        fail(errc::bad_input, "angles must lie in (0,pi) u (pi,2pi)");
    if (std::abs(theta + theta1 - 2 * M_PI) < 1e-12)
        fail(errc::precondition_violated, "theta + theta1 = 2pi");
    if (steps < 1) fail(errc::bad_input, "steps must be >= 1");
    Mat2 a = Mat2::rotation(theta);
    Mat2 b0 = Mat2::rotation(theta1).conj(p);
    if (std::abs((a * b0).trace()) >= 2.0 - 1e-12)
        fail(errc::precondition_violated, "|tr(AB)| >= 2 at the start");
    IwasawaCoords co = iwasawa(p);
    auto p_at = [&](double t) -> Mat2 {
        if (t <= 0.5) {
            double u = 1 - 2 * t;
            return Mat2::rotation(u * co.tau) * Mat2::diagonal(co.r) * Mat2::shear(u * co.x);
        }
        double lam = 2 * (1 - t) * co.r + 2 * t - 1;
        return Mat2::diagonal(lam);
    };
    std::vector<SurfaceRep> path;
    double prev_s[2] = {1e300, 1e300}; // per-stage monotonicity
    for (int i = 0; i <= steps; ++i) {
        double t = double(i) / steps;
        Mat2 pt = p_at(t);
        Mat2 bt = Mat2::rotation(theta1).conj(pt);
        Mat2 ab = a * bt;
        if (std::abs(ab.trace()) >= 2.0 - 1e-12)
            fail(errc::precondition_violated, "trace bound lost along the path");
        int stage = t <= 0.5 ? 0 : 1;
        double s = (pt.transpose() * pt).trace();
        if (s > prev_s[stage] + 1e-9)
            fail(errc::precondition_violated, "tr(P^T P) increased within a stage");
        prev_s[stage] = s;
        path.push_back(SurfaceRep{0, 3, {}, {}, {a, bt, ab.inverse()}});
    }
    return path;
}

} // namespace slr
