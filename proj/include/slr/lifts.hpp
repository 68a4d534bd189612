#pragma once

#include <cstdint>

#include "slr/mat2.hpp"

namespace slr {

// Universal cover of PSL(2,R) modeled on lifts of the RP^1 action
// (circumference pi). A lift is the canonical branch of the circle map of M
// (value at 0 in [0,pi)) translated by k*pi. Only the PSL class of M matters.
struct LiftedMap {
    Mat2 m;
    long k = 0;
};

// z^m: translation by m*pi; underlying PSL class is the identity.
struct CentralElement {
    long m = 0;
};

// Direction angle of M(cos x, sin x) reduced mod pi, in [0,pi).
double rp1_act(const Mat2& m, double x);

// f~(0) of the canonical branch, in [0,pi).
double canonical_base(const Mat2& m);

// Realized lift value at any real x (equivariant: f(x+pi) = f(x)+pi).
double lift_eval(const LiftedMap& f, double x);

enum class LiftMode { canonical, euler };

// canonical: k = 0. euler: k chosen so the lift fixes a real lift of an
// eigendirection (translation number 0); requires a non-elliptic,
// non-central PSL class.
LiftedMap lift(const Mat2& m, LiftMode mode = LiftMode::canonical);

inline LiftedMap lift_central(CentralElement z) { return {Mat2::identity(), z.m}; }

// Underlying matrix multiplies; offsets add together with the winding
// integer w in {0,1} read off at 0. non_integer_winding on degeneracy.
LiftedMap lift_compose(const LiftedMap& f, const LiftedMap& g);

LiftedMap lift_inverse(const LiftedMap& f);

// Exact by conjugacy class: elliptic -> (theta mod pi)/pi + k; parabolic and
// hyperbolic -> j + k with j in {0,1} read at a fixed direction; central -> k
// plus the branch offset. No orbit iteration.
double translation_number(const LiftedMap& f);

// m with f~ = translation by m*pi; not_central unless the PSL class is the
// identity within tol.
long central_degree(const LiftedMap& f, double tol = 1e-6);

} // namespace slr
