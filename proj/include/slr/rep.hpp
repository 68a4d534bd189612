#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "slr/mat2.hpp"
#include "slr/rng.hpp"

namespace slr {

// Images of the standard generators of pi_1(Sigma_{g,n}) subject to
// prod [A_i,B_i] prod C_j = I, evaluated left to right.
struct SurfaceRep {
    int g = 0, n = 0;
    std::vector<Mat2> A, B, C;

    Mat2 handle_product() const; // prod [A_i,B_i]
    Mat2 relator() const;        // prod [A_i,B_i] prod C_j
    double relation_residual() const { return relator().dist(Mat2::identity()); }
};

struct RepDiagnostics {
    double relation_residual = 0;
    std::vector<ConjClass> boundary;
    std::vector<double> boundary_trace_gap; // ||tr|-2| per boundary
    bool relation_ok = false;
};

RepDiagnostics validate(const SurfaceRep& rep, double tol = 1e-9);

// Solves the relation for the last boundary matrix.
SurfaceRep close_up(int g, std::vector<Mat2> a, std::vector<Mat2> b, std::vector<Mat2> c_partial,
                    int n);

// ---------- representation families ----------

enum class Family {
    elliptic_unipotent, // E
    elliptic,           // Ell
    elliptic_psl,       // Ell_P
    hyperbolic,         // Hyp
    parabolic,          // Par
    parabolic_psl,      // Par_P
    hp,                 // HP: c_1..c_{n-1} hyperbolic, c_n parabolic
};

const char* family_name(Family f);
Family parse_family(const std::string& name);

// ---------- constructive builders ----------

// sigma-complex value of a boundary label, stored as an integer pair
// (re, im): elliptic +-1 -> (+-1, 0); hyperbolic 0/1 -> (0/1, 0);
// parabolic {+1,-1,+i,-i} -> (+-1,0) / (0,+-1).
struct SigmaValue {
    int re = 0, im = 0;
    bool operator==(const SigmaValue& o) const { return re == o.re && im == o.im; }
    int s_value() const { return im - re; } // parabolic shear sign
    SigmaValue negated() const { return {-re, -im}; }
};

// Parabolic normal form for a in {+1,-1,+i,-i}:
// (-1)^(re+1) * [[1, im-re],[0,1]].
Mat2 parabolic_normal_form(SigmaValue a);
SigmaValue sigma_of_parabolic(const Mat2& m, double tol = 1e-9);

struct PantsHypParams {
    double lambda1 = 0.5;     // in (0,1)
    double trace2 = 3.0;      // a+d of the second factor, > 2
    double target_mag = 4.0;  // |tr(C1 C2)| to realize, > 2
    double c_mag = 1.0;       // |c| of the second factor
    int branch_sign = +1;     // sgn(c); selects the component when sum(a) is even
};

// Boundary-hyperbolic pair of pants with sigma vector a in {0,1}^3.
SurfaceRep pants_hyp(std::array<int, 3> a, const PantsHypParams& p = {});

enum class ParBranch { c0_pos, c0_neg, c2 };

struct PantsParResult {
    SurfaceRep rep;
    SigmaValue a3;
};

// Boundary-parabolic pair of pants: C1 = Phi(a1), C2 = P Phi(a2) P^-1 with
// P_21 = 0 (c0 branches, sign of s + mu a^2 selected) or P_21 = 2 (c2 branch,
// requires mu*s = 1). Returns the realized third label.
PantsParResult pants_par(SigmaValue a1, SigmaValue a2, ParBranch branch, double pa = 0.5,
                         double pb = 0.3);

struct TorusRep {
    SurfaceRep rep;
    std::array<int, 3> sub_label; // (sgn lambda, sgn tr B, sgn B21)
};

// g=1, n=1: A = diag(lambda, 1/lambda), B = beta, C = [A,B]^-1.
TorusRep torus_rep(double lambda, const Mat2& beta, double tol = 1e-9);

// Boundary-SO(2) representation: C_j = R(theta_j), sum theta_j in 2*pi*Z,
// handles filled with the identity.
SurfaceRep so2_rep(int g, const std::vector<double>& theta, double tol = 1e-9);

// ---------- trace coordinates ----------

struct TraceCoords {
    double x = 0, y = 0, z = 0;
};

inline double kappa(const TraceCoords& t) {
    return t.x * t.x + t.y * t.y + t.z * t.z - t.x * t.y * t.z - 2.0;
}

inline bool chi_realizable(const TraceCoords& t) {
    return kappa(t) >= 2.0 || std::abs(t.x) >= 2.0 || std::abs(t.y) >= 2.0 ||
           std::abs(t.z) >= 2.0;
}

// (X,Y) with (tr X, tr Y, tr XY) = t; not_realizable outside the realizable
// set. prev, when given, selects the quadratic root nearer the previous
// solution (path lifting along continuation).
std::pair<Mat2, Mat2> solve_chi(const TraceCoords& t,
                                const std::pair<Mat2, Mat2>* prev = nullptr);

// ---------- samplers ----------

// Draws handle and boundary matrices, closes up, and accepts when the last
// boundary lands in the family outside the classification guard band.
// Parabolic-type boundaries are produced exactly by solving a one-parameter
// trace equation, never by rejection. Deterministic per (family,g,n,seed).
// iterations_out, when given, receives the number of attempts consumed.
SurfaceRep sample(int g, int n, Family family, Rng& rng, int budget = 100000,
                  int* iterations_out = nullptr);

// ---------- twists, reversal, splitting, deformation path ----------

// mu_{i,j}: multiply boundaries i and j by -I (0-based).
SurfaceRep group_twist_mu(const SurfaceRep& rep, int i, int j);
// Lambda_{g,n} twist: flip A_i where a_mask bit i is set, B_i per b_mask.
SurfaceRep group_twist_lambda(const SurfaceRep& rep, unsigned a_mask, unsigned b_mask);

SurfaceRep reverse_orientation(const SurfaceRep& rep);

// Cut along the separating curve after k handles and l boundaries:
// piece1 = Sigma_{k, l+1} (boundary (C_1..C_l, U^-1)),
// piece2 = Sigma_{g-k, n-l+1} (boundary (C_{l+1}..C_n, U)),
// U = prod_{i<=k}[A_i,B_i] prod_{j<=l} C_j. central_cut if U = +-I.
std::pair<SurfaceRep, SurfaceRep> split_standard(const SurfaceRep& rep, int k, int l,
                                                 double tol = 1e-9);

// Two-stage contraction of the conjugator P of B = P R(theta1) P^-1 to I,
// keeping A = R(theta) fixed; every step keeps |tr(A B(t))| < 2 and
// tr(P(t)^T P(t)) non-increasing per stage. Requires |tr(AB)| < 2 strictly
// and theta + theta1 != 2pi.
std::vector<SurfaceRep> lemma1_path(double theta, double theta1, const Mat2& p, int steps = 256);

} // namespace slr
