#pragma once

#include <optional>
#include <vector>

#include "slr/rep.hpp"

namespace slr {

// Rho of a single element: 0 for hyperbolic, +-I and trace -2 parabolic;
// 2(1 - theta/pi) for elliptic; -s for trace +2 parabolic with shear sign s.
double rho_element(const Mat2& m);

double rho_boundary(const SurfaceRep& rep);

// Toledo invariant: T = sum_j rot~(C~_j) - m', canonical lifts, m' the
// central degree of prod [A~,B~] prod C~. Independent of lift offsets.
double toledo(const SurfaceRep& rep);

// Relative Euler class via translation-number-zero boundary lifts; equals
// round(toledo) (asserted within 1e-6). Requires non-elliptic, non-central
// boundary.
long relative_euler(const SurfaceRep& rep);

// round(2T + rho); integrality_violation if off an integer by > 1e-6.
long signature(const SurfaceRep& rep);

struct SigmaVector {
    Family family = Family::elliptic;      // elliptic/hyperbolic/parabolic or hp; mixed -> per-entry kinds
    bool mixed = false;
    std::vector<SigmaValue> sigma;
    std::vector<int> s;                    // parabolic entries: im - re; 0 elsewhere
    std::vector<ConjKind> kinds;
};

SigmaVector sigma_vector(const SurfaceRep& rep);

struct InvariantRecord {
    double toledo = 0;
    double rho = 0;
    long signature = 0;
    SigmaVector sigma;
    std::optional<long> psl_signature;     // boundary elliptic only
    double mw_slack_toledo = 0;            // |chi| - |T|
    double mw_slack_sign = 0;              // 2|chi| - |sign|
    std::optional<long> euler;             // boundary non-elliptic only
    int s_plus = 0, s_minus = 0;           // parabolic s-value counts
    bool psl_bounds_ok = true;             // -|chi|+s+ <= T <= |chi|-s- (parabolic, g>=1)
};

InvariantRecord invariant_record(const SurfaceRep& rep);

inline int chi(int g, int n) { return 2 - 2 * g - n; }
inline int abs_chi(int g, int n) { return -chi(g, n); }

} // namespace slr
