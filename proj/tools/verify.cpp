#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "detloc/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"verify: named verification scenarios for the determinantal "
                 "local-cohomology toolkit"};
    app.get_formatter()->column_width(34);

    detloc::ScenarioConfig cfg;
    std::string multidegree_arg;
    std::string format = "human";
    std::string out_path;

    app.add_option("scenario", cfg.scenario,
                   "one of: char0-eta-cocycle, char0-eta-noncoboundary, char0-rank, "
                   "log-identity, charp-family, h6-rank, oracle-crosscheck, "
                   "charp-rank-report")
        ->required();
    app.add_option("--char", cfg.characteristic, "field characteristic: 0 or a prime");
    app.add_option("--t", cfg.t, "thickening exponent");
    app.add_option("--k", cfg.k, "cohomological degree (default 3)");
    app.add_option("--multidegree", multidegree_arg, "a,b,c,d multidegree slice");
    app.add_option("--cutoff", cfg.cutoff, "denominator cutoff (default 4)");
    app.add_option("--j", cfg.j, "graded degree for h6-rank");
    app.add_option("--degree-bound", cfg.degree_bound,
                   "total-degree bound for oracle-crosscheck (default 6)");
    app.add_option("--jobs", cfg.jobs, "parallel component checks (default 1)");
    app.add_flag_callback("--quiet", [&cfg] { cfg.verbosity = 0; },
                          "suppress per-component rows in human output");
    app.add_option("--format", format, "json | tsv | human");
    app.add_option("--out", out_path, "write the report to this path");
    app.add_option("--data", cfg.data_dir, "fixture directory override");

    try {
        app.parse(argc, argv);
        if (!multidegree_arg.empty()) {
            std::istringstream ss(multidegree_arg);
            std::string part;
            for (int i = 0; i < 4; ++i) {
                if (!std::getline(ss, part, ','))
                    throw detloc::UsageError("--multidegree expects four comma-separated integers");
                cfg.multidegree[i] = std::stol(part);
            }
        }
        if (cfg.jobs < 1) throw detloc::UsageError("--jobs must be positive");

        detloc::VerificationReport rep = detloc::run_scenario(cfg);
        std::string text = detloc::emit_report(rep, format);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw detloc::UsageError("cannot open --out path " + out_path);
            out << text;
        }
        return detloc::exit_code(rep.outcome);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    } catch (const detloc::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
}
