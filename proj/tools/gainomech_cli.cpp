#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gainomech/io.hpp"
#include "gainomech/version.hpp"

namespace {

struct Cli {
    std::string config;
    std::string output;
    std::string format;
};

void apply_overrides(gainomech::RunConfig& cfg, const Cli& cli) {
    if (!cli.output.empty()) cfg.output = cli.output;
    if (cli.format == "csv") cfg.format = gainomech::OutputFormat::Csv;
    else if (cli.format == "json") cfg.format = gainomech::OutputFormat::Json;
    else if (!cli.format.empty())
        throw gainomech::ParseError("unknown format '" + cli.format + "' (csv|json)");
}

void add_common(CLI::App* cmd, Cli& cli) {
    cmd->add_option("-c,--config", cli.config, "configuration file (key = value lines)")
        ->required();
    cmd->add_option("-o,--output", cli.output, "output path (default: stdout)");
    cmd->add_option("-f,--format", cli.format, "output format: csv|json");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gain-assisted optomechanical cooling calculator"};
    app.set_version_flag("--version", std::string("gainomech ") + gainomech::version);
    app.require_subcommand(1);

    Cli cli;
    std::string figure_id;
    CLI::App* derive = app.add_subcommand("derive", "derived working-point quantities");
    CLI::App* steady = app.add_subcommand("steady-state", "steady-state photon number and field");
    CLI::App* spectrum = app.add_subcommand("spectrum", "photon-number fluctuation spectrum");
    CLI::App* cooling = app.add_subcommand("cooling", "optical damping and phonon number");
    CLI::App* phonon = app.add_subcommand("phonon-spectrum", "displaced-phonon spectrum");
    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep of cooling quantities");
    CLI::App* optimize = app.add_subcommand("optimize-pump", "pump strength minimizing n_m");
    CLI::App* figure = app.add_subcommand("figure", "reproduce a figure dataset");
    for (CLI::App* cmd : {derive, steady, spectrum, cooling, phonon, sweep, optimize, figure})
        add_common(cmd, cli);
    figure->add_option("id", figure_id, "figure id: 1|2|3a|3b|4|5")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        gainomech::RunConfig cfg = gainomech::parse_config_file(cli.config);
        apply_overrides(cfg, cli);
        gainomech::Table table;
        if (derive->parsed()) table = gainomech::cmd_derive(cfg);
        else if (steady->parsed()) table = gainomech::cmd_steady_state(cfg);
        else if (spectrum->parsed()) table = gainomech::cmd_spectrum(cfg);
        else if (cooling->parsed()) table = gainomech::cmd_cooling(cfg);
        else if (phonon->parsed()) table = gainomech::cmd_phonon_spectrum(cfg);
        else if (sweep->parsed()) table = gainomech::cmd_sweep(cfg);
        else if (optimize->parsed()) table = gainomech::cmd_optimize_pump(cfg);
        else if (figure->parsed()) table = gainomech::cmd_figure(cfg, figure_id);
        gainomech::write_output(cfg, table);
    } catch (const gainomech::Error& e) {
        std::cerr << "gainomech: " << e.what() << "\n";
        return gainomech::exit_code_for(e);
    }
    return 0;
}
