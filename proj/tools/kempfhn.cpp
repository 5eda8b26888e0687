#include <iostream>

#include <CLI11.hpp>

#include "kempf/cli.hpp"
#include "support/acceptance.hpp"

int main(int argc, char** argv) {
    using kempf::cli::RunConfig;
    RunConfig cfg;
    std::int64_t numeric = 0;

    CLI::App app{"Kempf filtrations, Harder-Narasimhan filtrations and the monotone-cone projection"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* num = app.add_option("--numeric", numeric, "Evaluate at the integer M instead of asymptotically");
    auto* asym = app.add_flag("--asymptotic", "Compare values for m >> 0 (default)");
    num->excludes(asym);
    app.add_flag("--float", cfg.approx, "Add decimal approximations under an \"approx\" key");
    app.add_flag("--parallel", cfg.parallel, "Evaluate chains on several threads (output is unchanged)");
    app.add_option("-i,--input", cfg.input, "Input JSON file (default: stdin)");
    app.add_option("-o,--output", cfg.output, "Output file (default: stdout)");

    auto* project = app.add_subcommand("project", "Project v onto the monotone cone");
    project->add_flag("--csv", cfg.csv, "Emit the graph as CSV");
    app.add_subcommand("hn", "Harder-Narasimhan filtration of an instance");
    auto* kempf = app.add_subcommand("kempf", "Kempf filtration of an instance");
    kempf->add_option("--graph-csv", cfg.graph_csv, "Also write the winning chain's graph as CSV to this path");
    app.add_subcommand("verify", "Check that the Kempf and HN filtrations agree");
    auto* stabilize = app.add_subcommand("stabilize", "Smallest m from which the m-Kempf filtration is stable");
    stabilize->add_option("--m-start", cfg.m_start, "First m to try")->check(CLI::PositiveNumber);
    stabilize->add_option("--cap", cfg.cap, "Give up beyond this m")->check(CLI::PositiveNumber);
    auto* gen = app.add_subcommand("gen", "Generate a split-bundle or random lattice instance");
    gen->add_option("--degrees", cfg.degrees, "Summand degrees, e.g. 2,0,-1")->delimiter(',');
    gen->add_option("--mode", cfg.mode, "gieseker, slope or pair")->check(CLI::IsMember({"gieseker", "slope", "pair"}));
    gen->add_option("--phi", cfg.phi, "Summand index carrying the morphism (pair mode)");
    gen->add_option("--delta", cfg.delta, "Constant stability parameter (pair mode)");
    gen->add_option("--g", cfg.g, "Genus-like constant in the slope encoding");
    gen->add_option("--dimx", cfg.dim_x, "Dimension of X")->check(CLI::PositiveNumber);
    gen->add_option("--seed", cfg.seed, "Random lattice seed (used when --degrees is absent)");
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
    selftest->add_option("criteria", cfg.criteria, "Criterion ids to run (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kempf::cli::exit_input;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (num->count() > 0) cfg.numeric = numeric;

    return kempf::cli::run(cfg, std::cout, std::cerr,
                           [](std::ostream& os, bool parallel, const std::vector<int>& criteria) {
                               return kempf::acceptance::run_all(os, parallel, criteria);
                           });
}
