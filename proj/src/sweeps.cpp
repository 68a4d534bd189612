#include "slr/sweeps.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "slr/invariants.hpp"

namespace slr {

namespace {

// deterministic cell map: results land in their slot, so thread count and
// schedule do not affect the merged output
template <class Cell>
void for_cells(long count, bool parallel, Cell&& cell, std::vector<std::string>& errors) {
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 32)
#endif
        for (long i = 0; i < count; ++i) {
            try {
                cell(i);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    } else {
        for (long i = 0; i < count; ++i) {
            try {
                cell(i);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    }
}

void rethrow_first(const std::vector<std::string>& errors) {
    for (const auto& e : errors)
        if (!e.empty()) fail(errc::budget_exhausted, e);
}

} // namespace

RelationSweepResult sign_relation_sweep(Family f, int g, int n, long samples,
                                        std::uint64_t seed, bool parallel) {
    RelationSweepResult out;
    out.samples = samples;
    std::vector<double> dev(samples, 0), mw(samples, 0), euler_dev(samples, 0);
    std::vector<char> euler_done(samples, 0);
    std::vector<std::string> errors(samples);
    double ac = abs_chi(g, n);
    for_cells(samples, parallel, [&](long i) {
        Rng rng = Rng::cell(seed, std::uint64_t(i));
        SurfaceRep rep = sample(g, n, f, rng, 200000);
        double t = toledo(rep);
        double r = rho_boundary(rep);
        double v = 2 * t + r;
        dev[i] = std::abs(v - std::llround(v));
        double s = std::llround(v);
        mw[i] = std::max({std::abs(t) - ac, (std::abs(s) - 2 * ac) / 2, 0.0});
        bool non_elliptic = true;
        for (const Mat2& c : rep.C) {
            ConjKind k = classify(c).kind;
            if (k != ConjKind::hyperbolic && k != ConjKind::parabolic) non_elliptic = false;
        }
        if (non_elliptic) {
            long e = relative_euler(rep);
            euler_dev[i] = std::abs(t - double(e));
            euler_done[i] = 1;
        }
    }, errors);
    rethrow_first(errors);
    for (long i = 0; i < samples; ++i) {
        out.max_integrality_dev = std::max(out.max_integrality_dev, dev[i]);
        out.max_mw_violation = std::max(out.max_mw_violation, mw[i]);
        if (euler_done[i]) {
            ++out.euler_checked;
            out.max_euler_dev = std::max(out.max_euler_dev, euler_dev[i]);
        }
    }
    out.checked = samples;
    out.ok = out.max_integrality_dev < 1e-6 && out.max_mw_violation <= 1e-6 &&
             out.max_euler_dev < 1e-6;
    return out;
}

OracleSweepResult oracle_sweep(Family f, int g, int n, long samples, std::uint64_t seed,
                               bool parallel) {
    OracleSweepResult out;
    out.samples = samples;
    std::vector<char> mismatch(samples, 0), dimfail(samples, 0);
    std::vector<double> skew(samples, 0);
    std::vector<std::string> errors(samples);
    for_cells(samples, parallel, [&](long i) {
        Rng rng = Rng::cell(seed, std::uint64_t(i));
        SurfaceRep rep = sample(g, n, f, rng, 200000);
        OracleReport orc = direct_signature(rep);
        mismatch[i] = orc.match ? 0 : 1;
        skew[i] = orc.skew_residual;
        if (f == Family::elliptic || f == Family::hyperbolic)
            dimfail[i] = orc.dim == 2 * abs_chi(g, n) ? 0 : 1;
    }, errors);
    rethrow_first(errors);
    for (long i = 0; i < samples; ++i) {
        out.mismatches += mismatch[i];
        out.dim_failures += dimfail[i];
        out.max_skew = std::max(out.max_skew, skew[i]);
    }
    out.ok = out.mismatches == 0 && out.dim_failures == 0;
    return out;
}

SymmetrySweepResult symmetry_sweep(Family f, int g, int n, long samples, std::uint64_t seed,
                                   bool parallel) {
    SymmetrySweepResult out;
    out.samples = samples;
    std::vector<double> rev(samples, 0), glue(samples, 0), mu(samples, 0);
    std::vector<char> flip_bad(samples, 0), psl_bad(samples, 0);
    std::vector<std::string> errors(samples);
    for_cells(samples, parallel, [&](long i) {
        Rng rng = Rng::cell(seed, std::uint64_t(i));
        SurfaceRep rep = sample(g, n, f, rng, 200000);
        InvariantRecord rec = invariant_record(rep);

        SurfaceRep rrev = reverse_orientation(rep);
        InvariantRecord rec_rev = invariant_record(rrev);
        rev[i] = std::max(std::abs(rec_rev.toledo + rec.toledo),
                          std::abs(double(rec_rev.signature + rec.signature)));

        if (g >= 1 || n >= 4) {
            // standard split: handle block if g >= 1, else first two boundaries
            int k = g >= 1 ? g : 0;
            int l = g >= 1 ? 0 : 2;
            try {
                auto [p1, p2] = split_standard(rep, k, l);
                glue[i] = std::abs(double(signature(p1) + signature(p2) - rec.signature));
            } catch (const error& e) {
                if (e.code != errc::central_cut) throw; // central cut: skip the check
            }
        }

        if (n >= 2) {
            SurfaceRep flipped = group_twist_mu(rep, 0, 1);
            InvariantRecord rec_mu = invariant_record(flipped);
            mu[i] = std::abs(rec_mu.toledo - rec.toledo);
            if (f == Family::hyperbolic) {
                for (int j = 0; j < n; ++j) {
                    int want = j < 2 ? 1 - rec.sigma.sigma[j].re : rec.sigma.sigma[j].re;
                    if (rec_mu.sigma.sigma[j].re != want) flip_bad[i] = 1;
                }
            }
        }

        if (f == Family::parabolic && g >= 1 && !rec.psl_bounds_ok) psl_bad[i] = 1;
    }, errors);
    rethrow_first(errors);
    for (long i = 0; i < samples; ++i) {
        out.max_reversal_dev = std::max(out.max_reversal_dev, rev[i]);
        out.max_gluing_dev = std::max(out.max_gluing_dev, glue[i]);
        out.max_muflip_dev = std::max(out.max_muflip_dev, mu[i]);
        out.sigma_flip_failures += flip_bad[i];
        out.psl_bound_failures += psl_bad[i];
    }
    out.ok = out.max_reversal_dev < 1e-6 && out.max_gluing_dev < 1e-6 &&
             out.max_muflip_dev < 1e-9 && out.sigma_flip_failures == 0 &&
             out.psl_bound_failures == 0;
    return out;
}

ChiSweepResult chi_sweep(long samples, std::uint64_t seed, bool parallel) {
    ChiSweepResult out;
    out.samples = samples;
    std::vector<double> tdev(samples, 0), kdev(samples, 0);
    std::vector<std::string> errors(samples);
    for_cells(samples, parallel, [&](long i) {
        Rng rng = Rng::cell(seed, std::uint64_t(i));
        // random realizable target: traces of an actual random pair
        Mat2 x = random_sl2(rng), y = random_sl2(rng);
        TraceCoords t{x.trace(), y.trace(), (x * y).trace()};
        kdev[i] = std::abs(kappa(t) - commutator(x, y).trace());
        if (!chi_realizable(t)) return; // numerical boundary; skip the lift
        auto [u, v] = solve_chi(t);
        tdev[i] = std::max({std::abs(u.trace() - t.x), std::abs(v.trace() - t.y),
                            std::abs((u * v).trace() - t.z),
                            std::abs(u.det() - 1.0), std::abs(v.det() - 1.0)});
    }, errors);
    rethrow_first(errors);
    for (long i = 0; i < samples; ++i) {
        out.max_trace_dev = std::max(out.max_trace_dev, tdev[i]);
        out.max_kappa_dev = std::max(out.max_kappa_dev, kdev[i]);
    }
    // grid check: solver succeeds exactly on the realizable set
    for (int ix = -8; ix <= 8; ++ix)
        for (int iy = -8; iy <= 8; ++iy)
            for (int iz = -8; iz <= 8; ++iz) {
                TraceCoords t{ix * 0.5, iy * 0.5, iz * 0.5};
                bool want = chi_realizable(t);
                bool got = true;
                double dev = 0;
                try {
                    auto [u, v] = solve_chi(t);
                    dev = std::max({std::abs(u.trace() - t.x), std::abs(v.trace() - t.y),
                                    std::abs((u * v).trace() - t.z)});
                } catch (const error& e) {
                    if (e.code != errc::not_realizable) throw;
                    got = false;
                }
                if (got != want || dev > 1e-9) ++out.grid_mismatches;
            }
    out.ok = out.max_trace_dev < 1e-9 && out.max_kappa_dev < 1e-9 && out.grid_mismatches == 0;
    return out;
}

} // namespace slr
