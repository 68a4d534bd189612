#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slr/invariants.hpp"
#include "slr/rep.hpp"

namespace slr {

// One predicted connected-component label: boundary sigma vector plus the
// integer invariant separating components (signature for E/Ell/Ell_P, Toledo
// for Hyp/Par/Par_P/HP). multiplicity > 1 encodes the extreme-value orbit
// count (4^g) where no finer locally-constant datum is implemented.
struct ComponentLabel {
    std::vector<SigmaValue> sigma;
    long invariant = 0;
    long multiplicity = 1;

    bool operator<(const ComponentLabel& o) const;
    bool operator==(const ComponentLabel& o) const {
        return sigma == o.sigma && invariant == o.invariant;
    }
};

// Closed-form component counts. n = 0 is accepted for the closed-surface
// corollaries of E and Ell_P only.
long count_components(Family f, int g, int n);

// Set of attainable signatures (E/Ell, Ell_P, Hyp, Par); out_of_domain for
// families without a stated range.
std::vector<long> signature_range(Family f, int g, int n);

// Full predicted label set; sum of multiplicities equals count_components.
// Guarded to n <= 12 (too_large beyond).
std::vector<ComponentLabel> admissible_labels(Family f, int g, int n);

// Interior-deformable / super-maximal split of Par(Sigma_{0,n}), n >= 3.
long par_interior_count(int n);     // 2^{2n-1} (n-3)
long par_supermaximal_count(int n); // 2^n (n+1)

// ---------- audit ----------

struct AuditItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditItem> items;
    bool all_pass = true;
};

// Exact integer cross-checks of the counting formulas over g <= 4, n <= 8,
// plus label-set cardinality vs count_components for g <= 2, n <= 5.
AuditReport audit();

// ---------- sampling verification ----------

struct SamplingReport {
    Family family = Family::hyperbolic;
    int g = 0, n = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    long admissible_total = 0;              // distinct (sigma, invariant) labels predicted
    long observed_distinct = 0;
    long inadmissible = 0;                  // must be 0
    double coverage = 0;                    // observed / admissible
    double acceptance_rate = 0;             // sampler acceptance
    std::map<std::string, long> histogram;  // label key -> hits
    std::vector<std::string> missing;       // admissible labels never seen
};

std::string label_key(const ComponentLabel& l);

SamplingReport verify_by_sampling(Family f, int g, int n, long samples, std::uint64_t seed,
                                  bool parallel = true);

} // namespace slr
