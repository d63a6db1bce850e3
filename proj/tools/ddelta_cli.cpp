// ddelta: run verification suites from a JSON config, or list the available checks.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ddelta/runner.hpp"

namespace {

int write_report(const ddelta::runner::Report& report, const std::string& path)
{
    auto text = report.to_json().dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 3;
    }
    out << text;
    return 0;
}

void print_summary(const ddelta::runner::Report& report)
{
    std::cerr << report.instance << "\n";
    if (report.error) {
        std::cerr << "invalid input: " << report.error->value("message", "") << "\n";
        return;
    }
    for (const auto& r : report.records) {
        std::cerr << "  " << ddelta::runner::to_string(r.status) << "  " << r.check << " " << r.params.dump();
        if (r.status == ddelta::runner::Status::fail && r.details.contains("witness"))
            std::cerr << "\n    witness: " << r.details["witness"].get<std::string>();
        std::cerr << "\n";
    }
    std::cerr << "exit " << report.exit_code() << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite-level verification of Fedder-action local cohomology and the Delta-Delta complex"};
    app.require_subcommand(1);

    std::string config_path;
    std::string report_path;
    std::string dot_dir;
    unsigned jobs = 1;
    auto* run = app.add_subcommand("run", "Execute the checks of a config file");
    run->add_option("config", config_path, "JSON config file")->required();
    run->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    run->add_option("--report,-r", report_path, "Write the JSON report here (default: stdout)");
    run->add_option("--dot", dot_dir, "Write DOT diagrams of built levels into this directory");

    auto* list = app.add_subcommand("list-checks", "Print the check catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    if (*list) {
        std::cout << ddelta::runner::list_checks_text();
        return 0;
    }

    ddelta::runner::Report report;
    try {
        auto config = ddelta::runner::load_config(config_path);
        ddelta::runner::RunOptions options;
        options.jobs = jobs;
        if (!dot_dir.empty())
            options.dot_dir = dot_dir;
        report = ddelta::runner::run(config, options);
    } catch (const ddelta::runner::ConfigError& e) {
        report.instance = config_path;
        report.error = nlohmann::json{{"kind", "config"}, {"message", e.what()}, {"location", e.location()}};
    } catch (const std::exception& e) {
        report.instance = config_path;
        report.error = nlohmann::json{{"kind", "io"}, {"message", e.what()}};
    }
    print_summary(report);
    if (int rc = write_report(report, report_path))
        return rc;
    return report.exit_code();
}
