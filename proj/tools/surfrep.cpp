// surfrep: classification, invariants, sampling, censuses and the
// cohomological signature check for surface-group representations into
// SL(2,R), with reproducible seeded runs.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "slr/json_io.hpp"
#include "slr/sweeps.hpp"

using namespace slr;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_input, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(errc::bad_input, std::string("JSON parse: ") + e.what());
    }
    return j;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail(errc::bad_input, "cannot write " + out_path);
    out << text << "\n";
}

std::string formula_string(Family f, int g, int n) {
    switch (f) {
        case Family::elliptic_unipotent: return "2^{2g+1}+2g+n-3";
        case Family::elliptic:
            return g == 0 ? "2^{n-1}(n-1)" : "2^{2g+n}+2^{n-1}(4g+n-5)";
        case Family::elliptic_psl: return g == 0 ? "n-1" : "4g+n-3";
        case Family::hyperbolic: return "2^{2g+n}+2^{n-1}(4g+2n-5)";
        case Family::parabolic:
            if (g == 1 && n == 1) return "16";
            if (g == 0) return "2^{2n-1}(n-3)+2^n(n+1)";
            return n % 2 == 0 ? "2^{2g+2n}+2^{2n-1}(4g+n-5)" : "2^{2g+2n-1}+2^{2n-1}(4g+n-4)";
        case Family::parabolic_psl: return g == 0 ? "2^n(n-3)+2(n+1)" : "2^n(4g+n-3)";
        case Family::hp: return g == 0 ? "16" : "2^n(4^g+4g+2n-5)";
    }
    return "";
}

int run(int argc, char** argv) {
    CLI::App app{"surface-group representation invariants for SL(2,R)"};
    app.require_subcommand(1);

    std::string family_str, matrix_str, rep_path, out_path, format = "text";
    int g = 0, n = 0;
    std::uint64_t seed = 0;
    long samples = 1;
    double tol = 1e-9;
    bool with_oracle = false;

    auto add_common = [&](CLI::App* cmd, bool need_gn, bool need_seed) {
        if (need_gn) {
            cmd->add_option("--g", g, "genus")->required();
            cmd->add_option("--n", n, "boundary components")->required();
        }
        if (need_seed) cmd->add_option("--seed", seed, "RNG seed")->required();
        cmd->add_option("--format", format, "output format: text|json|csv");
        cmd->add_option("--out", out_path, "write output to a file");
        cmd->add_option("--tol", tol, "numerical tolerance");
    };

    auto* c_classify = app.add_subcommand("classify", "conjugacy class of one matrix");
    c_classify->add_option("--matrix", matrix_str, "row-major entries a,b,c,d")->required();
    add_common(c_classify, false, false);

    auto* c_inv = app.add_subcommand("invariants", "invariant record of a representation");
    c_inv->add_option("--rep", rep_path, "representation JSON file")->required();
    c_inv->add_flag("--oracle", with_oracle, "append the cohomological signature check");
    add_common(c_inv, false, false);

    auto* c_sample = app.add_subcommand("sample", "sample representations with boundary type");
    c_sample->add_option("--family", family_str, "e|ell|ell_p|hyp|par|par_p|hp")->required();
    c_sample->add_option("--samples", samples, "number of representations");
    add_common(c_sample, true, true);

    auto* c_census = app.add_subcommand("census", "component count / range / labels");
    c_census->add_option("--family", family_str, "e|ell|ell_p|hyp|par|par_p|hp")->required();
    add_common(c_census, true, false);

    auto* c_audit = app.add_subcommand("audit", "internal consistency of the counting formulas");
    add_common(c_audit, false, false);

    auto* c_verify = app.add_subcommand("verify", "Monte Carlo label verification");
    c_verify->add_option("--family", family_str, "e|ell|ell_p|hyp|par|par_p|hp")->required();
    c_verify->add_option("--samples", samples, "sample count")->required();
    add_common(c_verify, true, true);

    auto* c_oracle = app.add_subcommand("oracle", "cohomological signature vs 2T+rho");
    c_oracle->add_option("--family", family_str, "ell|hyp|par|hp")->required();
    c_oracle->add_option("--samples", samples, "sample count")->required();
    add_common(c_oracle, true, true);

    auto* c_path = app.add_subcommand("path", "explicit elliptic deformation path");
    c_path->add_option("--rep", rep_path, "JSON input {theta, theta1, P, steps}")->required();
    add_common(c_path, false, false);

    CLI11_PARSE(app, argc, argv);

    if (c_classify->parsed()) {
        Mat2 m = parse_mat2(matrix_str);
        ConjClass c = classify(m, tol);
        if (format == "json") {
            emit(to_json(c).dump(2), out_path);
        } else {
            std::string line = conj_kind_name(c.kind);
            if (c.kind == ConjKind::elliptic) line += " theta=" + std::to_string(c.angle);
            if (c.kind == ConjKind::parabolic)
                line += std::string(" trace_sign=") + std::to_string(c.trace_sign) +
                        " shear_sign=" + std::to_string(c.shear_sign);
            if (c.kind == ConjKind::hyperbolic)
                line += std::string(" trace_sign=") + std::to_string(c.trace_sign) +
                        " eigenvalue=" + std::to_string(c.eigenvalue);
            emit(line, out_path);
        }
        return 0;
    }

    if (c_inv->parsed()) {
        SurfaceRep rep = rep_from_json(read_json_file(rep_path));
        json out = to_json(invariant_record(rep));
        if (with_oracle) {
            OracleReport orc = direct_signature(rep, std::min(tol, 1e-8));
            out["oracle"] = to_json(orc);
            emit(out.dump(2), out_path);
            return orc.match ? 0 : 2;
        }
        emit(out.dump(2), out_path);
        return 0;
    }

    if (c_sample->parsed()) {
        Family f = parse_family(family_str);
        Rng rng(seed);
        json out;
        if (samples == 1) {
            out = to_json(sample(g, n, f, rng));
        } else {
            out = json::array();
            for (long i = 0; i < samples; ++i) {
                Rng cell = Rng::cell(seed, std::uint64_t(i));
                out.push_back(to_json(sample(g, n, f, cell)));
            }
        }
        emit(out.dump(2), out_path);
        return 0;
    }

    if (c_census->parsed()) {
        Family f = parse_family(family_str);
        long count = count_components(f, g, n);
        if (format == "csv") {
            emit(std::string(family_name(f)) + "," + std::to_string(g) + "," + std::to_string(n) +
                     "," + std::to_string(count) + "," + formula_string(f, g, n),
                 out_path);
            return 0;
        }
        if (format == "json") {
            json out{{"family", family_name(f)}, {"g", g}, {"n", n}, {"count", count},
                     {"formula", formula_string(f, g, n)}};
            try {
                json range = json::array();
                for (long s : signature_range(f, g, n)) range.push_back(s);
                out["signature_range"] = range;
            } catch (const error&) {}
            if (n <= 8 && count <= 4096) {
                json labels = json::array();
                for (const ComponentLabel& l : admissible_labels(f, g, n))
                    labels.push_back(to_json(l));
                out["labels"] = labels;
            }
            emit(out.dump(2), out_path);
            return 0;
        }
        emit(std::to_string(count), out_path);
        return 0;
    }

    if (c_audit->parsed()) {
        AuditReport rep = audit();
        if (format == "json") {
            emit(to_json(rep).dump(2), out_path);
        } else {
            std::string text;
            for (const AuditItem& it : rep.items)
                text += std::string(it.pass ? "[pass] " : "[FAIL] ") + it.name +
                        (it.detail.empty() ? "" : " (" + it.detail + ")") + "\n";
            text += rep.all_pass ? "all checks passed" : "AUDIT FAILED";
            emit(text, out_path);
        }
        return rep.all_pass ? 0 : 2;
    }

    if (c_verify->parsed()) {
        Family f = parse_family(family_str);
        SamplingReport rep = verify_by_sampling(f, g, n, samples, seed);
        emit(to_json(rep).dump(2), out_path);
        return rep.inadmissible == 0 ? 0 : 2;
    }

    if (c_oracle->parsed()) {
        Family f = parse_family(family_str);
        OracleSweepResult r = oracle_sweep(f, g, n, samples, seed);
        json out{{"family", family_name(f)}, {"g", g},
                 {"n", n},                   {"samples", r.samples},
                 {"mismatches", r.mismatches}, {"dim_failures", r.dim_failures},
                 {"max_skew", r.max_skew},   {"ok", r.ok}};
        emit(out.dump(2), out_path);
        return r.ok ? 0 : 2;
    }

    if (c_path->parsed()) {
        json in = read_json_file(rep_path);
        double theta, theta1;
        int steps = 256;
        Mat2 p;
        try {
            theta = in.at("theta").get<double>();
            theta1 = in.at("theta1").get<double>();
            p = mat2_from_json(in.at("P"));
            if (in.contains("steps")) steps = in.at("steps").get<int>();
        } catch (const json::exception& e) {
            fail(errc::bad_input, std::string("path input JSON: ") + e.what());
        }
        auto path = lemma1_path(theta, theta1, p, steps);
        double max_tr = 0, max_res = 0;
        for (const SurfaceRep& r : path) {
            max_tr = std::max(max_tr, std::abs((r.C[0] * r.C[1]).trace()));
            max_res = std::max(max_res, r.relation_residual());
        }
        json out{{"steps", steps},
                 {"points", path.size()},
                 {"max_abs_trace", max_tr},
                 {"trace_bound_ok", max_tr < 2.0},
                 {"max_relation_residual", max_res}};
        if (!out_path.empty()) {
            json arr = json::array();
            for (const SurfaceRep& r : path) arr.push_back(to_json(r));
            out["path"] = arr;
        }
        emit(out.dump(2), out_path);
        return 0;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        bool usage = e.code == errc::bad_input || e.code == errc::out_of_domain ||
                     e.code == errc::too_large;
        return usage ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
