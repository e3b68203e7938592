#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv)
{
    using namespace vkdim::tools;

    CLI::App app{"vkdim: van Kampen obstructions of octahedralized complexes and action dimension bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    app.add_flag("--integral", flags.integral, "Also test the integral obstruction");
    app.add_flag("--strict", flags.strict, "Exit with 2 when a quantity stays undetermined");
    app.add_flag("--allow-non-flag", flags.allow_non_flag, "Accept non-flag input (vkdim-only conclusions)");
    app.add_option("--max-cells", flags.max_cells, "Cell budget for configuration spaces")->capture_default_str();
    app.add_option("--seed", flags.seed, "Seed for random generators")->capture_default_str();
    app.add_option("--search-budget", flags.search_budget, "Largest number of basis cycles summed into M")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::vector<std::string> inputs;
    std::string certificate_out;
    auto* analyze = app.add_subcommand("analyze", "Bound gd, l2dim, vkdim, embdim and actdim for each input");
    analyze->add_option("inputs", inputs, "Complex JSON files ('-' for stdin)")->required();
    analyze->add_option("--certificate", certificate_out, "Write the top-degree certificate here");

    std::string gen_name;
    std::vector<std::string> gen_params;
    auto* generate = app.add_subcommand("generate", "Emit a zoo complex as JSON, e.g. 'generate cycle 4'");
    generate->add_option("name", gen_name, "Generator name or full expression")->required();
    generate->add_option("params", gen_params, "Generator parameters");

    std::string cert_path;
    std::string complex_path;
    auto* verify = app.add_subcommand("verify", "Re-check a certificate against its complex");
    verify->add_option("certificate", cert_path)->required();
    verify->add_option("complex", complex_path)->required();

    std::size_t count = 50;
    bool inject = false;
    auto* suite = app.add_subcommand("lemma-suite", "Check the chain-level identities on random flag complexes");
    suite->add_option("--count", count, "Number of random complexes")->capture_default_str();
    suite->add_flag("--inject-sign-bug", inject, "Test mode: flip the sign in s");

    std::string input;
    auto* homology = app.add_subcommand("homology", "Reduced Betti numbers and a top cycle basis");
    homology->add_option("input", input)->required();
    auto* octa = app.add_subcommand("octahedralize", "Emit OL as JSON");
    octa->add_option("input", input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_error;
    }

    if (*analyze) return cmd_analyze(inputs, flags, certificate_out, std::cout, std::cerr);
    if (*generate) return cmd_generate(gen_name, gen_params, flags, std::cout, std::cerr);
    if (*verify) return cmd_verify(cert_path, complex_path, std::cout, std::cerr);
    if (*suite) return cmd_lemma_suite(flags.seed, count, inject, std::cout, std::cerr);
    if (*homology) return cmd_homology(input, std::cout, std::cerr);
    if (*octa) return cmd_octahedralize(input, std::cout, std::cerr);
    return exit_error;
}
