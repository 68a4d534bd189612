#include "slr/census.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slr {

namespace {

long pow2(int e) { return 1L << e; }
long pow4(int e) { return 1L << (2 * e); }
long pow8(int e) { return 1L << (3 * e); }

void require(bool cond, const std::string& what) {
    if (!cond) fail(errc::out_of_domain, what);
}

void require_surface(int g, int n) {
    require(g >= 0 && n >= 1 && 2 - 2 * g - n <= 0, "need n >= 1 and chi <= 0");
}

} // namespace

bool ComponentLabel::operator<(const ComponentLabel& o) const {
    if (sigma.size() != o.sigma.size()) return sigma.size() < o.sigma.size();
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i].re != o.sigma[i].re) return sigma[i].re < o.sigma[i].re;
        if (sigma[i].im != o.sigma[i].im) return sigma[i].im < o.sigma[i].im;
    }
    return invariant < o.invariant;
}

std::string label_key(const ComponentLabel& l) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < l.sigma.size(); ++i) {
        if (i) out << ",";
        const SigmaValue& s = l.sigma[i];
        if (s.im == 0) out << s.re;
        else out << (s.im > 0 ? "i" : "-i");
    }
    out << "];" << l.invariant;
    return out.str();
}

// ---------- counts ----------

long count_components(Family f, int g, int n) {
    switch (f) {
        case Family::elliptic_unipotent:
            if (n == 0) {
                require(g >= 2, "closed-surface count needs g >= 2");
                return pow2(2 * g + 1) + 2 * g - 3;
            }
            require_surface(g, n);
            return pow2(2 * g + 1) + 2 * g + n - 3;
        case Family::elliptic:
            require_surface(g, n);
            if (g == 0) return pow2(n - 1) * (n - 1);
            return pow2(2 * g + n) + pow2(n - 1) * (4 * g + n - 5);
        case Family::elliptic_psl:
            if (n == 0) {
                require(g >= 2, "closed-surface count needs g >= 2");
                return 4 * g - 3;
            }
            require_surface(g, n);
            return g == 0 ? n - 1 : 4 * g + n - 3;
        case Family::hyperbolic:
            require_surface(g, n);
            return pow2(2 * g + n) + pow2(n - 1) * (4 * g + 2 * n - 5);
        case Family::parabolic:
            require_surface(g, n);
            if (g == 1 && n == 1) return 16;
            if (g == 0) return pow2(2 * n - 1) * (n - 3) + pow2(n) * (n + 1);
            if (n % 2 == 0) return pow2(2 * g + 2 * n) + pow2(2 * n - 1) * (4 * g + n - 5);
            return pow2(2 * g + 2 * n - 1) + pow2(2 * n - 1) * (4 * g + n - 4);
        case Family::parabolic_psl:
            require_surface(g, n);
            if (g == 0) return pow2(n) * (n - 3) + 2 * (n + 1);
            return pow2(n) * (4 * g + n - 3);
        case Family::hp:
            if (g == 0 && n == 3) return 16;
            require_surface(g, n);
            require(g >= 1 && !(g == 1 && n == 1), "HP count needs g >= 1, (g,n) != (1,1)");
            return pow2(n) * (pow4(g) + 4 * g + 2 * n - 5);
    }
    fail(errc::out_of_domain, "unknown family");
}

long par_interior_count(int n) {
    require(n >= 3, "interior split needs n >= 3");
    return pow2(2 * n - 1) * (n - 3);
}

long par_supermaximal_count(int n) {
    require(n >= 3, "super-maximal split needs n >= 3");
    return pow2(n) * (n + 1);
}

// ---------- signature ranges ----------

std::vector<long> signature_range(Family f, int g, int n) {
    require_surface(g, n);
    int ac = 2 * g + n - 2;
    std::vector<long> out;
    switch (f) {
        case Family::elliptic_unipotent:
        case Family::elliptic:
            // [2chi, 2|chi|] with half-signature of the same parity as n
            for (long m = -ac; m <= ac; ++m)
                if (((m % 2) + 2) % 2 == n % 2) out.push_back(2 * m);
            return out;
        case Family::hyperbolic:
            for (long s = -2 * ac; s <= 2 * ac; s += 2) out.push_back(s);
            return out;
        case Family::parabolic:
            for (long s = -2 * ac; s <= 2 * ac; ++s) out.push_back(s);
            return out;
        case Family::elliptic_psl:
            if (g == 0)
                for (long s = 2; s <= 2 * (n - 1); s += 2) out.push_back(s);
            else
                for (long s = -4 * g + 4; s <= 4 * g - 4 + 2 * n; s += 2) out.push_back(s);
            return out;
        default: fail(errc::out_of_domain, "no signature range for this family");
    }
}

// ---------- admissible labels ----------

namespace {

const SigmaValue kParVals[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

std::vector<std::vector<SigmaValue>> all_vectors(const SigmaValue* vals, int nv, int n) {
    std::vector<std::vector<SigmaValue>> out;
    std::vector<int> idx(n, 0);
    for (;;) {
        std::vector<SigmaValue> v;
        for (int i = 0; i < n; ++i) v.push_back(vals[idx[i]]);
        out.push_back(v);
        int i = 0;
        while (i < n && ++idx[i] == nv) idx[i++] = 0;
        if (i == n) break;
    }
    return out;
}

std::vector<ComponentLabel> labels_e(int g, int n) {
    int ac = 2 * g + n - 2;
    std::vector<ComponentLabel> out;
    for (long m = -ac; m <= ac; ++m) {
        if (((m % 2) + 2) % 2 != n % 2) continue;
        out.push_back({{}, 2 * m, std::abs(m) == ac ? pow4(g) : 1});
    }
    return out;
}

std::vector<ComponentLabel> labels_ell(int g, int n) {
    static const SigmaValue pm[2] = {{-1, 0}, {1, 0}};
    std::vector<ComponentLabel> out;
    for (auto& a : all_vectors(pm, 2, n)) {
        int r = 0;
        for (auto& s : a) r += s.re == -1 ? 1 : 0;
        if (g == 0) {
            for (long m = -n + r + 1; m <= r - 1; ++m)
                if (((m % 2) + 2) % 2 == n % 2) out.push_back({a, 2 * m, 1});
            continue;
        }
        // generic interior values
        for (long m = r - n + 3 - 2 * g; m <= r - 1 + 2 * g - 2; ++m)
            if (((m % 2) + 2) % 2 == n % 2) out.push_back({a, 2 * m, 1});
        // non-deformable exceptional values carry the Lambda-orbit multiplicity
        if (r % 2 == 0 && r >= 2) out.push_back({a, 2L * (r - n + 2 - 2 * g), pow4(g)});
        if ((n - r) % 2 == 0 && n - r >= 2) out.push_back({a, 2L * (r + 2 * g - 2), pow4(g)});
        if (r == n) out.push_back({a, 2L * (2 * g + n - 2), pow4(g)});
        if (r == 0) out.push_back({a, -2L * (2 * g + n - 2), pow4(g)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ComponentLabel> labels_ell_psl(int g, int n) {
    std::vector<ComponentLabel> out;
    for (long s : signature_range(Family::elliptic_psl, g, n)) out.push_back({{}, s, 1});
    return out;
}

std::vector<ComponentLabel> labels_hyp(int g, int n) {
    static const SigmaValue zo[2] = {{0, 0}, {1, 0}};
    int ac = 2 * g + n - 2;
    std::vector<ComponentLabel> out;
    for (auto& a : all_vectors(zo, 2, n)) {
        int r1 = 0;
        for (auto& s : a) r1 += s.re;
        for (long k = -ac; k <= ac; ++k) {
            if (((k % 2) + 2) % 2 != (r1 + n) % 2) continue;
            if (std::abs(k) == ac) {
                if (r1 % 2 == 0) out.push_back({a, k, pow4(g)});
            } else {
                out.push_back({a, k, 1});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// sigma of the hyperbolic curve swallowing a parabolic pair (a, b)
int pair_sigma(SigmaValue a, SigmaValue b) {
    int sgn = ((a.re + b.re) % 2 == 0 ? -1 : 1) * a.s_value() * b.s_value();
    return (sgn + 1) / 2;
}

std::vector<ComponentLabel> labels_hp(int g, int n);

std::vector<ComponentLabel> labels_par(int g, int n) {
    std::vector<ComponentLabel> out;
    if (g == 1 && n == 1) {
        for (const SigmaValue& a : kParVals) out.push_back({{a}, a.im, 4});
        return out;
    }
    if (g == 0 && n == 2) {
        for (const SigmaValue& a : kParVals) out.push_back({{a, a.negated()}, 0, 1});
        return out;
    }
    if (g == 0) {
        for (auto& a : all_vectors(kParVals, 4, n)) {
            int splus = 0, re_sum = 0;
            for (auto& v : a) {
                splus += v.s_value() > 0 ? 1 : 0;
                re_sum += v.re;
            }
            int sminus = n - splus;
            // interior-hyperbolic range with the lifting parity
            for (long k = -(n - 2) + splus; k <= (n - 2) - sminus; ++k)
                if (((k % 2) + 2) % 2 == ((re_sum + n) % 2 + 2) % 2) out.push_back({a, k, 1});
            // super-maximal components
            bool all_equal = splus == 0 || splus == n;
            bool odd = ((re_sum + n) % 2 + 2) % 2 == 1;
            if (all_equal && odd) out.push_back({a, splus == n ? 1 : -1, 1});
            if ((splus == 1 || splus == n - 1) && !odd) out.push_back({a, 0, 1});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    if (n % 2 == 0) {
        auto hyp = labels_hyp(g, n / 2);
        std::map<std::vector<int>, std::vector<std::pair<long, long>>> by_sigma; // k, mult
        for (auto& l : hyp) {
            std::vector<int> key;
            for (auto& s : l.sigma) key.push_back(s.re);
            by_sigma[key].push_back({l.invariant, l.multiplicity});
        }
        for (auto& a : all_vectors(kParVals, 4, n)) {
            std::vector<int> key;
            long s_a = 0;
            for (int i = 0; i < n; i += 2) key.push_back(pair_sigma(a[i], a[i + 1]));
            for (auto& v : a) s_a += v.s_value();
            for (auto& [k, mult] : by_sigma[key]) out.push_back({a, k + s_a / 2, mult});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    // n odd, g >= 1, (g,n) != (1,1)
    int m = (n + 1) / 2;
    auto hp = labels_hp(g, m);
    std::map<std::string, std::vector<std::pair<long, long>>> by_key;
    for (auto& l : hp) {
        std::string key;
        for (size_t i = 0; i + 1 < l.sigma.size(); ++i) key += char('0' + l.sigma[i].re);
        key += ';';
        key += label_key({{l.sigma.back()}, 0, 1});
        by_key[key].push_back({l.invariant, l.multiplicity});
    }
    for (auto& a : all_vectors(kParVals, 4, n)) {
        std::string key;
        long s_paired = 0;
        for (int i = 0; i + 1 < n; i += 2) {
            key += char('0' + pair_sigma(a[i], a[i + 1]));
            s_paired += a[i].s_value() + a[i + 1].s_value();
        }
        key += ';';
        key += label_key({{a[n - 1]}, 0, 1});
        for (auto& [k, mult] : by_key[key]) out.push_back({a, k + s_paired / 2, mult});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ComponentLabel> labels_hp(int g, int n) {
    static const SigmaValue zo[2] = {{0, 0}, {1, 0}};
    int ac = 2 * g + n - 2;
    std::vector<ComponentLabel> out;
    auto hyp_parts = n >= 2 ? all_vectors(zo, 2, n - 1)
                            : std::vector<std::vector<SigmaValue>>{{}};
    for (auto& ah : hyp_parts) {
        for (const SigmaValue& ap : kParVals) {
            int r1 = std::abs(ap.re);
            for (auto& s : ah) r1 += s.re;
            std::vector<SigmaValue> full = ah;
            full.push_back(ap);
            for (long k = -ac; k <= ac; ++k) {
                if (((k % 2) + 2) % 2 != (r1 + n) % 2) continue;
                if (std::abs(k) == ac) {
                    if (r1 % 2 == 0 && ap.s_value() == (k > 0 ? 1 : -1))
                        out.push_back({full, k, pow4(g)});
                } else {
                    out.push_back({full, k, 1});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ComponentLabel> labels_par_psl(int g, int n) {
    static const SigmaValue pm[2] = {{-1, 0}, {1, 0}}; // entries record s-values
    int ac = 2 * g + n - 2;
    std::vector<ComponentLabel> out;
    if (g == 0 && n == 2) {
        out.push_back({{{1, 0}, {-1, 0}}, 0, 1});
        out.push_back({{{-1, 0}, {1, 0}}, 0, 1});
        return out;
    }
    for (auto& s : all_vectors(pm, 2, n)) {
        int splus = 0;
        for (auto& v : s) splus += v.re > 0 ? 1 : 0;
        int sminus = n - splus;
        for (long k = -ac + splus; k <= ac - sminus; ++k) out.push_back({s, k, 1});
        if (g == 0) {
            if (splus == n) out.push_back({s, 1, 1});
            if (splus == 0) out.push_back({s, -1, 1});
            if (splus == 1 || splus == n - 1) out.push_back({s, 0, 1});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<ComponentLabel> admissible_labels(Family f, int g, int n) {
    require_surface(g, n);
    if (n > 12) fail(errc::too_large, "label enumeration guarded to n <= 12");
    switch (f) {
        case Family::elliptic_unipotent: return labels_e(g, n);
        case Family::elliptic: return labels_ell(g, n);
        case Family::elliptic_psl: return labels_ell_psl(g, n);
        case Family::hyperbolic: return labels_hyp(g, n);
        case Family::parabolic: return labels_par(g, n);
        case Family::parabolic_psl: return labels_par_psl(g, n);
        case Family::hp:
            if (!(g == 0 && n == 3))
                require(g >= 1 && !(g == 1 && n == 1), "HP labels need g >= 1, (g,n) != (1,1)");
            return labels_hp(g, n);
    }
    fail(errc::out_of_domain, "unknown family");
}

// ---------- audit ----------

namespace {

long label_total(Family f, int g, int n) {
    long t = 0;
    for (const auto& l : admissible_labels(f, g, n)) t += l.multiplicity;
    return t;
}

} // namespace

AuditReport audit() {
    AuditReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.items.push_back({name, pass, detail});
        rep.all_pass = rep.all_pass && pass;
    };

    // (i) sum over sign vectors of floor((n-1+(r mod 2))/2) = (n-1) 2^{n-1}
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 8; ++n) {
            long lhs = 0;
            for (long mask = 0; mask < pow2(n); ++mask) {
                int r = __builtin_popcountll(mask);
                lhs += (n - 1 + (r % 2)) / 2;
            }
            long rhs = (n - 1) * pow2(n - 1);
            if (lhs != rhs) { ok = false; detail = "n=" + std::to_string(n); }
        }
        add("floor-sum identity", ok, detail.empty() ? "n <= 8 exact" : detail);
    }
    // (ii) genus-one elliptic count specializes to 2^{n-1}(n+7)
    {
        bool ok = true;
        for (int n = 1; n <= 8; ++n)
            ok = ok && count_components(Family::elliptic, 1, n) == pow2(n - 1) * (n + 7);
        add("genus-one elliptic specialization", ok, "n <= 8");
    }
    // (iii) Par(g, n even) = 8^{n/2} Hyp(g, n/2)
    {
        bool ok = true;
        std::string detail;
        for (int g = 1; g <= 4; ++g)
            for (int n = 2; n <= 8; n += 2) {
                long lhs = count_components(Family::parabolic, g, n);
                long rhs = pow8(n / 2) * count_components(Family::hyperbolic, g, n / 2);
                if (lhs != rhs)
                    { ok = false; detail = "g=" + std::to_string(g) + " n=" + std::to_string(n); }
            }
        add("even-boundary parabolic factorization", ok,
            detail.empty() ? "g <= 4, n <= 8" : detail);
    }
    // (iv) Par(0,n) = 2^{n-1} Par_P(0,n)
    {
        bool ok = true;
        for (int n = 2; n <= 8; ++n)
            ok = ok && count_components(Family::parabolic, 0, n) ==
                           pow2(n - 1) * count_components(Family::parabolic_psl, 0, n);
        add("genus-zero covering degree", ok, "n <= 8");
    }
    // (v) closed-surface limits
    {
        bool ok = true;
        for (int g = 2; g <= 4; ++g) {
            ok = ok && count_components(Family::elliptic_unipotent, g, 0) ==
                           pow2(2 * g + 1) + 2 * g - 3;
            ok = ok && count_components(Family::elliptic_psl, g, 0) == 4 * g - 3;
        }
        add("closed-surface limits", ok, "g in [2,4]");
    }
    // (vi) pants censuses
    {
        bool ok = count_components(Family::hyperbolic, 0, 3) == 12 &&
                  count_components(Family::parabolic, 0, 3) == 32 &&
                  count_components(Family::hp, 0, 3) == 16;
        add("pants censuses 12/32/16", ok, "");
    }
    // (vii) genus-zero four-boundary split
    {
        long pi = par_interior_count(4), pii = par_supermaximal_count(4);
        bool ok = pi == 128 && pii == 80 && pi + pii == count_components(Family::parabolic, 0, 4);
        add("four-boundary interior/super-maximal split", ok,
            std::to_string(pi) + "+" + std::to_string(pii));
    }
    // (viii) label sets reproduce every count
    {
        bool ok = true;
        std::string detail;
        const Family fams[] = {Family::elliptic_unipotent, Family::elliptic,
                               Family::elliptic_psl,       Family::hyperbolic,
                               Family::parabolic,          Family::parabolic_psl,
                               Family::hp};
        for (Family f : fams)
            for (int g = 0; g <= 2; ++g)
                for (int n = 1; n <= 5; ++n) {
                    long want;
                    try {
                        want = count_components(f, g, n);
                    } catch (const error&) {
                        continue;
                    }
                    long got = label_total(f, g, n);
                    if (got != want) {
                        ok = false;
                        detail = std::string(family_name(f)) + " g=" + std::to_string(g) +
                                 " n=" + std::to_string(n) + ": " + std::to_string(got) +
                                 " != " + std::to_string(want);
                    }
                }
        add("label sets match counts", ok, detail.empty() ? "g <= 2, n <= 5" : detail);
    }
    return rep;
}

// ---------- sampling verification ----------

SamplingReport verify_by_sampling(Family f, int g, int n, long samples, std::uint64_t seed,
                                  bool parallel) {
    require_surface(g, n);
    if (samples < 1) fail(errc::bad_input, "samples must be >= 1");
    SamplingReport rep;
    rep.family = f;
    rep.g = g;
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;

    std::set<std::string> admissible;
    for (const auto& l : admissible_labels(f, g, n)) admissible.insert(label_key(l));
    rep.admissible_total = long(admissible.size());

    std::vector<std::string> keys(samples);
    std::vector<long> iters(samples, 0);
    std::vector<std::string> errors(samples);

    auto run_cell = [&](long i) {
        try {
            Rng rng = Rng::cell(seed, std::uint64_t(i));
            int it = 0;
            SurfaceRep r = sample(g, n, f, rng, 200000, &it);
            iters[i] = it;
            InvariantRecord rec = invariant_record(r);
            ComponentLabel obs;
            switch (f) {
                case Family::elliptic: obs = {rec.sigma.sigma, rec.signature, 1}; break;
                case Family::elliptic_unipotent: obs = {{}, rec.signature, 1}; break;
                case Family::elliptic_psl: obs = {{}, rec.psl_signature.value(), 1}; break;
                case Family::parabolic_psl: {
                    std::vector<SigmaValue> sv;
                    for (int s : rec.sigma.s) sv.push_back({s, 0});
                    obs = {sv, std::llround(rec.toledo), 1};
                    break;
                }
                default: obs = {rec.sigma.sigma, std::llround(rec.toledo), 1}; break;
            }
            keys[i] = label_key(obs);
        } catch (const error& e) {
            errors[i] = e.what();
        }
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
        for (long i = 0; i < samples; ++i) run_cell(i);
    } else {
        for (long i = 0; i < samples; ++i) run_cell(i);
    }

    long total_iters = 0;
    for (long i = 0; i < samples; ++i) {
        if (!errors[i].empty()) fail(errc::budget_exhausted, errors[i]);
        total_iters += iters[i];
        ++rep.histogram[keys[i]];
        if (!admissible.count(keys[i])) ++rep.inadmissible;
    }
    for (const auto& [k, cnt] : rep.histogram)
        if (admissible.count(k)) ++rep.observed_distinct;
    for (const auto& k : admissible)
        if (!rep.histogram.count(k)) rep.missing.push_back(k);
    rep.coverage = rep.admissible_total ? double(rep.observed_distinct) / rep.admissible_total : 1;
    rep.acceptance_rate = total_iters ? double(samples) / double(total_iters) : 1;
    return rep;
}

} // namespace slr
