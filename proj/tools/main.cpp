#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    dipath::cli::JobSpec job;
    CLI::App app{"Cube-chain posets, discrete gradient fields and critical cells of directed path spaces"};
    app.add_option("--command", job.command, "validate, pk, field, critical, routes, betti, report or random")
        ->required()
        ->check(CLI::IsMember({"validate", "pk", "field", "critical", "routes", "betti", "report", "random"}));
    app.add_option("--input", job.input, "JSON complex file");
    app.add_option("--order", job.order, "label order override, comma separated");
    app.add_option("--max-simplices", job.max_simplices, "oracle cap")->capture_default_str();
    app.add_option("--dim-cap", job.dim_cap, "highest homology dimension computed by betti");
    app.add_option("--seed", job.seed, "seed for random")->capture_default_str();
    app.add_option("--labels", job.labels, "number of labels for random")->capture_default_str();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cout << "{\"error\": \"invalid arguments\"}\n";
        return dipath::cli::invalid;
    }
    return dipath::cli::run(job, std::cout);
}
