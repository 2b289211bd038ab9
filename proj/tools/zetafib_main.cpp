// zetafib: catalog browser and identity verification driver.
//
//   zetafib list
//   zetafib verify --id E24 [--m M] [--n N] [--prec BITS] [--tol DEC]
//   zetafib sweep [--ids a,b,c] [--m lo..hi] [--n lo..hi] [--prec BITS]
//                 [--tol DEC] --out PATH [--format json|csv] [--jobs N]
//   zetafib constants [--prec BITS]
//
// Exit code is 0 iff no cell reported fail or non_converged.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zetafib/harness.hpp"
#include "zetafib/specfun.hpp"

namespace {

using namespace zetafib;

std::pair<long, long> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError("range", "expected lo..hi, got '" + text + "'");
    return {std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
}

int run_list() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : catalog_entries()) {
        arr.push_back({{"id", e.id},
                       {"title", e.title},
                       {"domain_description", e.domain_description},
                       {"paper_ref", e.formula}});
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
}

void print_result(const VerificationResult& r) {
    std::cout << r.identity_id;
    if (r.params.m)
        std::cout << " m=" << *r.params.m;
    if (r.params.n)
        std::cout << " n=" << *r.params.n;
    std::cout << ": " << to_string(r.status);
    if (!r.note.empty())
        std::cout << " (" << r.note << ")";
    std::cout << "\n";
    if (r.lhs_value) {
        std::cout << "  lhs        = " << r.lhs_value->to_string() << "\n"
                  << "  rhs        = " << r.rhs_value->to_string() << "\n"
                  << "  abs_diff   = " << r.abs_diff->to_string(8) << "\n"
                  << "  lhs_bound  = " << r.lhs_error_bound->to_string(8) << "\n"
                  << "  terms_used = " << r.terms_used << "\n";
    }
}

int run_constants(long prec_bits) {
    const Precision prec(prec_bits);
    auto show = [](const char* name, const Real& v) {
        std::cout << name << " = " << v.to_string() << "\n";
    };
    show("gamma  ", euler_gamma(prec));
    show("pi     ", const_pi(prec));
    show("sqrt5  ", const_sqrt5(prec));
    show("alpha  ", golden_alpha(prec));
    show("beta   ", golden_beta(prec));
    show("zeta(2)", riemann_zeta(Real::of(2, prec.working()), prec));
    show("zeta(3)", riemann_zeta(Real::of(3, prec.working()), prec));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified verification of Fibonacci/Lucas zeta-series identities"};
    app.require_subcommand(1);

    auto* cmd_list = app.add_subcommand("list", "print the identity catalog as JSON");

    long default_prec = 256;
    try {
        default_prec = default_precision_bits();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify one identity cell");
    std::string v_id;
    long v_m = 0, v_n = 0, v_prec = default_prec;
    std::string v_tol = "1e-40";
    cmd_verify->add_option("--id", v_id, "identity id")->required();
    auto* opt_m = cmd_verify->add_option("--m", v_m, "parameter m");
    auto* opt_n = cmd_verify->add_option("--n", v_n, "parameter n");
    cmd_verify->add_option("--prec", v_prec, "target precision bits");
    cmd_verify->add_option("--tol", v_tol, "absolute tolerance (decimal)");

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "verify across parameter ranges");
    std::vector<std::string> s_ids;
    std::string s_mrange = "0..8", s_nrange = "1..10", s_tol = "1e-40", s_out;
    std::string s_format = "json";
    long s_prec = default_prec;
    int s_jobs = 0;
    cmd_sweep->add_option("--ids", s_ids, "comma-separated identity ids")
        ->delimiter(',');
    cmd_sweep->add_option("--m", s_mrange, "m range lo..hi");
    cmd_sweep->add_option("--n", s_nrange, "n range lo..hi");
    cmd_sweep->add_option("--prec", s_prec, "target precision bits");
    cmd_sweep->add_option("--tol", s_tol, "absolute tolerance (decimal)");
    cmd_sweep->add_option("--out", s_out, "report output path")->required();
    cmd_sweep->add_option("--format", s_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_sweep->add_option("--jobs", s_jobs, "worker count (default: cores)");

    // constants
    auto* cmd_consts = app.add_subcommand("constants", "print smoke-test constants");
    long c_prec = default_prec;
    cmd_consts->add_option("--prec", c_prec, "target precision bits");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_list->parsed())
            return run_list();
        if (cmd_consts->parsed())
            return run_constants(c_prec);

        if (cmd_verify->parsed()) {
            SweepConfig cfg;
            cfg.precision_bits = v_prec;
            cfg.tolerance = v_tol;
            ParamSet p;
            if (opt_m->count())
                p.m = v_m;
            if (opt_n->count())
                p.n = v_n;
            const VerificationResult r = verify_one(v_id, p, cfg);
            print_result(r);
            return (r.status == Status::fail || r.status == Status::non_converged) ? 1
                                                                                   : 0;
        }

        // sweep
        SweepConfig cfg;
        cfg.identity_filter = s_ids;
        std::tie(cfg.m_lo, cfg.m_hi) = parse_range(s_mrange);
        std::tie(cfg.n_lo, cfg.n_hi) = parse_range(s_nrange);
        cfg.precision_bits = s_prec;
        cfg.tolerance = s_tol;
        cfg.output_path = s_out;
        cfg.format = s_format == "csv" ? ReportFormat::csv : ReportFormat::json;
        cfg.jobs = s_jobs;

        const auto results = sweep(cfg);
        write_report(results, cfg.format, cfg.output_path);
        const Summary s = summarize(results);
        std::cout << "cells=" << results.size() << " pass=" << s.pass
                  << " fail=" << s.fail << " domain_skip=" << s.domain_skip
                  << " non_converged=" << s.non_converged << " -> " << s_out << "\n";
        return s.clean() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
