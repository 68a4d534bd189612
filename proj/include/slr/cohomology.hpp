#pragma once

#include <vector>

#include "slr/rep.hpp"

namespace slr {

// Basis of H^1(Sigma, dSigma; E) -> H^1(Sigma; E) image, computed on the
// free group of the presentation: cocycles are generator assignments in
// R^{2(2g+n)} with u(relator) = 0 and u(c_j) in Im(phi(c_j) - I), modulo
// coboundaries v -> (phi(.) - I)v. Rank decisions via singular values.
struct CocycleBasis {
    int g = 0, n = 0;
    int ambient = 0;                  // 2(2g+n)
    int dim = 0;                      // dim Hhat^1
    int dim_cocycles = 0;             // after relator + boundary conditions
    int dim_coboundaries = 0;         // 2 minus invariant vectors
    double min_singular_value = 0;    // smallest kept sv of the constraint split
    std::vector<std::vector<double>> basis; // dim vectors of length ambient
};

CocycleBasis restricted_h1(const SurfaceRep& rep, double tol = 1e-8);

// Symmetric cup-product pairing of two cocycles (ambient coordinates):
// bar-resolution evaluation on the relator plus the parabolic-boundary
// correction, symmetrized and normalized to the fundamental class.
double cup_pairing(const std::vector<double>& u, const std::vector<double>& v,
                   const SurfaceRep& rep);

struct OracleReport {
    int dim = 0;
    long signature_direct = 0;
    long signature_formula = 0; // 2T + rho, from the invariants module
    bool match = false;
    double skew_residual = 0;       // of the assembled Gram
    double min_singular_value = 0;
    double min_abs_eigenvalue = 0;  // relative to ||G||
};

// Signature as the eigenvalue sign count of the Gram matrix of cup_pairing
// on the restricted_h1 basis. degenerate_form if an eigenvalue sits in the
// ambiguity band around zero.
OracleReport direct_signature(const SurfaceRep& rep, double tol = 1e-8);

} // namespace slr
