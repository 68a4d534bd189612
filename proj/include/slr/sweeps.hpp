#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slr/census.hpp"
#include "slr/cohomology.hpp"
#include "slr/rep.hpp"

namespace slr {

// Batch drivers for the Monte Carlo verification loads. Each cell draws from
// Rng::cell(seed, i), so results are a pure function of (parameters, seed)
// and identical for the serial and OpenMP paths; tests compare the two and
// the benchmark times them.

struct RelationSweepResult {
    long samples = 0;
    long checked = 0;               // reps actually sampled (sampler may skip none)
    double max_integrality_dev = 0; // |2T+rho - round| worst case
    double max_mw_violation = 0;    // max(|T|-|chi|, (|sign|-2|chi|)/2, 0)
    long euler_checked = 0;
    double max_euler_dev = 0;       // |T - e| on non-elliptic boundaries
    bool ok = true;
};

// sign = 2T + rho integrality + Milnor-Wood + Euler-class agreement over
// sampled reps of one (family, g, n) cell set.
RelationSweepResult sign_relation_sweep(Family f, int g, int n, long samples,
                                        std::uint64_t seed, bool parallel = true);

struct OracleSweepResult {
    long samples = 0;
    long mismatches = 0;
    long dim_failures = 0; // dim != 2|chi| on elliptic/hyperbolic boundary
    double max_skew = 0;
    bool ok = true;
};

OracleSweepResult oracle_sweep(Family f, int g, int n, long samples, std::uint64_t seed,
                               bool parallel = true);

struct SymmetrySweepResult {
    long samples = 0;
    double max_reversal_dev = 0;  // T(rev)+T, sign(rev)+sign
    double max_gluing_dev = 0;    // sign - sign1 - sign2 along standard splits
    double max_muflip_dev = 0;    // Toledo change under mu_{i,j}
    long sigma_flip_failures = 0; // hyperbolic sigma entries not flipped
    long psl_bound_failures = 0;  // parabolic -|chi|+s+ <= T <= |chi|-s-
    bool ok = true;
};

SymmetrySweepResult symmetry_sweep(Family f, int g, int n, long samples, std::uint64_t seed,
                                   bool parallel = true);

struct ChiSweepResult {
    long samples = 0;
    double max_trace_dev = 0; // chi(solve_chi(t)) vs t
    double max_kappa_dev = 0; // kappa(chi(X,Y)) vs tr[X,Y]
    long grid_mismatches = 0; // realizability predicate vs solver on the grid
    bool ok = true;
};

ChiSweepResult chi_sweep(long samples, std::uint64_t seed, bool parallel = true);

// census::verify_by_sampling is the fourth parallel kernel; it lives in
// census.hpp and shares the same per-cell seeding.

} // namespace slr
