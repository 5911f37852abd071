#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "koszul/cli.hpp"
#include "koszul/verify.hpp"

using namespace koszul;

namespace {

struct Shared {
    RunConfig cfg;
    std::size_t p_max = 0, w_max = 0;
    std::string format = "table";
    std::string output;
};

void add_options(CLI::App* sub, Shared& s) {
    sub->add_option("--algebra", s.cfg.algebra, "truncated:N | tensor:g,N | full:g,N | as_cubic:a,b,c | file:PATH");
    sub->add_option("--field", s.cfg.field, "Q or F_p (also Fp, F:p)");
    sub->add_option("--pmax", s.p_max, "largest homological degree")->check(CLI::PositiveNumber);
    sub->add_option("--wmax", s.w_max, "largest weight")->check(CLI::PositiveNumber);
    sub->add_option("--seed", s.cfg.seed, "seed for random operands");
    sub->add_option("--coeff", s.cfg.coeff, "coefficients: A or k")->check(CLI::IsMember({"A", "k"}));
    sub->add_option("--side", s.cfg.side, "homology or cohomology")->check(CLI::IsMember({"homology", "cohomology"}));
    sub->add_option("--trials", s.cfg.trials, "random operands per case")->check(CLI::PositiveNumber);
    sub->add_option("--format", s.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--output", s.output, "also write the JSON report to this path");
    sub->add_flag("--timings", s.cfg.timings, "record wall-clock time in the report");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Koszul calculus of N-homogeneous algebras"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Shared s;
    std::string suite;
    for (const auto& name : command_names()) {
        CLI::App* sub = app.add_subcommand(name);
        add_options(sub, s);
        if (name == "verify") sub->add_option("suite", suite, "property suite")->required()->check(CLI::IsMember(suite_names()));
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }
    if (s.p_max) s.cfg.p_max = s.p_max;
    if (s.w_max) s.cfg.w_max = s.w_max;
    const std::string command = app.get_subcommands().front()->get_name();

    CommandResult r = run_command(command, suite, s.cfg);
    const std::string json_text = r.report.dump(2) + "\n";
    if (s.format == "json")
        std::cout << json_text;
    else
        std::cout << r.text;
    if (!s.output.empty()) {
        std::ofstream out(s.output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << s.output << "\n";
            return kExitConfig;
        }
        out << json_text;
    }
    if (r.exit_code != kExitOk && s.format == "json" && r.report["payload"].contains("error"))
        std::cerr << r.text;
    return r.exit_code;
}
