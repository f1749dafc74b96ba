// mstab: exact arithmetic in the 2-adic Morava stabilizer group and the
// finite-level duality complex, with a machine-checkable verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mstab/checks.hpp"
#include "mstab/expr.hpp"
#include "mstab/honda.hpp"
#include "mstab/quotient.hpp"

using namespace mstab;

namespace {

struct CommonOpts {
    int level = 6;
    int coeff_bits = 3;
    int s_precision = 16;
    uint64_t seed = 0;
    int trials = 0;
    std::string config_file;
};

void apply_config_file(CommonOpts& o) {
    if (o.config_file.empty()) return;
    std::ifstream in(o.config_file);
    if (!in) throw Error("cannot open config file: " + o.config_file);
    nlohmann::json j;
    in >> j;  // throws with a message on malformed input
    if (j.contains("level")) o.level = j["level"].get<int>();
    if (j.contains("coeff_bits")) o.coeff_bits = j["coeff_bits"].get<int>();
    if (j.contains("s_precision")) o.s_precision = j["s_precision"].get<int>();
    if (j.contains("seed")) o.seed = j["seed"].get<uint64_t>();
    if (j.contains("trials")) o.trials = j["trials"].get<int>();
}

CheckParams to_params(const CommonOpts& o) {
    CheckParams p;
    p.level = o.level;
    p.coeff_bits = o.coeff_bits;
    p.s_precision = o.s_precision;
    p.seed = o.seed;
    p.trials = o.trials;
    return p;
}

int run_verify(CommonOpts opts, const std::string& suite, const std::string& report_path,
               bool timings) {
    apply_config_file(opts);
    CheckParams params = to_params(opts);
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = checks::suite_names();
    } else {
        suites = {suite};
    }
    std::vector<Report> all;
    for (const auto& s : suites) {
        if (s == "theta" && suite == "all" && opts.level == 6) {
            // the theta suite defaults to level 8
            CheckParams p = params;
            p.level = 8;
            auto rs = checks::run_suite(s, p);
            all.insert(all.end(), rs.begin(), rs.end());
            continue;
        }
        auto rs = checks::run_suite(s, params);
        all.insert(all.end(), rs.begin(), rs.end());
    }
    std::sort(all.begin(), all.end(),
              [](const Report& a, const Report& b) { return a.check < b.check; });

    std::string hash = config_hash_of(params, suite);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!report_path.empty()) {
        file.open(report_path);
        if (!file) throw Error("cannot open report path: " + report_path);
        out = &file;
    }
    int failed = 0;
    for (const auto& r : all) {
        *out << report_json(r, hash, timings) << "\n";
        if (r.failed()) ++failed;
        if (out != &std::cout)
            std::cout << "[" << status_string(r.status) << "] " << r.check
                      << (r.details.empty() ? "" : "  (" + r.details + ")") << "\n";
    }
    *out << summary_json(all, hash, timings) << "\n";
    std::cout << (failed ? "FAILED: " : "ok: ") << all.size() << " checks, " << failed
              << " failures\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 2-adic stabilizer-group arithmetic and duality-complex checks"};
    app.require_subcommand(1);

    CommonOpts opts;

    // expand EXPR --s-digits N
    auto* expand = app.add_subcommand("expand", "print the S-adic expansion of an expression");
    std::string expr_text;
    int s_digits_count = 8;
    expand->add_option("expr", expr_text, "expression, e.g. \"comm(i, alpha)\"")->required();
    expand->add_option("--s-digits", s_digits_count, "number of S-digits to print");

    // verify SUITE [--level n] [--coeff-bits m] [--s-precision N] [--seed s] [--report PATH]
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    std::string report_path;
    bool timings = false;
    verify->add_option("suite", suite,
                       "one of: congruences, lie, subgroups, quotients, theta, duality, n1, "
                       "honda, all");
    verify->add_option("--level", opts.level, "quotient level n");
    verify->add_option("--coeff-bits", opts.coeff_bits, "coefficient modulus 2^m");
    verify->add_option("--s-precision", opts.s_precision, "S-adic working precision");
    verify->add_option("--seed", opts.seed, "master seed");
    verify->add_option("--trials", opts.trials, "trial count for randomized checks");
    verify->add_option("--report", report_path, "write JSON-lines report here");
    verify->add_option("--config", opts.config_file, "JSON config file");
    verify->add_flag("--timings", timings,
                     "include elapsed_ms in reports (breaks byte-for-byte determinism)");

    // theta --level n --coeff-bits m --out PATH
    auto* theta = app.add_subcommand("theta", "build Theta and export it as JSON");
    std::string theta_out;
    int theta_level = 8;
    int theta_bits = 3;
    theta->add_option("--level", theta_level, "quotient level n");
    theta->add_option("--coeff-bits", theta_bits, "coefficient modulus 2^m");
    theta->add_option("--out", theta_out, "output path (stdout when omitted)");

    // conjsearch --level n
    auto* conj = app.add_subcommand("conjsearch",
                                    "exhaustive Q8 vs pi Q8 pi^-1 conjugacy probe at one level");
    int conj_level = 4;
    conj->add_option("--level", conj_level, "quotient level n");

    // fgl --degree D
    auto* fgl = app.add_subcommand("fgl", "dump the Honda formal group law coefficients");
    int fgl_degree = 16;
    std::string fgl_out;
    fgl->add_option("--degree", fgl_degree, "truncation degree");
    fgl->add_option("--out", fgl_out, "output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*expand) {
            int N = 2 * ((s_digits_count + 1) / 2);
            OrderElement g = eval_expr(*parse_expr(expr_text), N);
            std::cout << expansion_string(g, s_digits_count) << "\n";
            return 0;
        }
        if (*verify) return run_verify(opts, suite, report_path, timings);
        if (*theta) {
            std::string json = checks::theta_export_json(theta_level, theta_bits);
            if (theta_out.empty()) {
                std::cout << json << "\n";
            } else {
                std::ofstream out(theta_out);
                if (!out) throw Error("cannot open output path: " + theta_out);
                out << json << "\n";
            }
            return 0;
        }
        if (*conj) {
            Report r = checks::conjsearch(conj_level);
            std::cout << status_string(r.status) << ": " << r.details << "\n";
            return r.failed() ? 1 : 0;
        }
        if (*fgl) {
            HondaFGL law = HondaFGL::build(fgl_degree);
            nlohmann::json j;
            j["format_version"] = 1;
            j["degree"] = fgl_degree;
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : law.nonzero_coefficients())
                coeffs.push_back({c[0], c[1], c[2]});
            j["coefficients"] = coeffs;
            std::string json = j.dump();
            if (fgl_out.empty()) {
                std::cout << json << "\n";
            } else {
                std::ofstream out(fgl_out);
                if (!out) throw Error("cannot open output path: " + fgl_out);
                out << json << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
