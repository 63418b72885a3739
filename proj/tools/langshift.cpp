#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "langshift/error.hpp"
#include "langshift/report.hpp"
#include "langshift/synthetic.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

int exit_code(langshift::ErrorKind kind) {
    switch (kind) {
        case langshift::ErrorKind::config: return kExitConfig;
        case langshift::ErrorKind::data: return kExitData;
        case langshift::ErrorKind::numeric: return kExitNumeric;
    }
    return kExitNumeric;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Measure language shift in target-platform comments after cross-posting"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<double> window_hours;
    std::optional<std::string> output;
    std::optional<std::string> formats;
    auto* analyze = app.add_subcommand("analyze", "Run the full pipeline from a config file");
    analyze->add_option("--config", config_path, "Run configuration (key = value lines)")->required();
    analyze->add_option("--window-hours", window_hours, "Length of the after-event window in hours");
    analyze->add_option("--output", output, "Output directory");
    analyze->add_option("--format", formats, "Comma-separated subset of markdown,json,csv");

    std::string fixture_dir;
    langshift::FixtureOptions fixture;
    auto* generate = app.add_subcommand("generate-fixture", "Write a synthetic dataset and matching config");
    generate->add_option("--out", fixture_dir, "Directory to write into")->required();
    generate->add_option("--videos", fixture.n_videos, "Number of videos")->capture_default_str();
    generate->add_option("--source-comments", fixture.source_comments)->capture_default_str();
    generate->add_option("--before-comments", fixture.before_comments)->capture_default_str();
    generate->add_option("--after-comments", fixture.after_comments)->capture_default_str();
    generate->add_option("--before-borrow", fixture.before_borrow, "Share of source vocabulary before the event")
        ->capture_default_str();
    generate->add_option("--after-borrow", fixture.after_borrow, "Share of source vocabulary after the event")
        ->capture_default_str();
    generate->add_option("--seed", fixture.seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*generate) {
            auto files = langshift::write_fixture(fixture_dir, fixture);
            std::cout << "wrote fixture; run: langshift analyze --config " << files.config.string() << "\n";
            return 0;
        }

        auto config = langshift::load_config(config_path);
        if (window_hours) config.window_hours = *window_hours;
        if (output) config.output = *output;
        if (formats) config.formats = langshift::parse_formats(*formats);
        auto report = langshift::run_pipeline(config);
        for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
        std::cout << "TF-IDF: " << to_string(report.tfidf.verdict)
                  << "; lexical categories: " << to_string(report.categories.verdict) << "\n"
                  << "outputs in " << config.output.string() << "\n";
        return 0;
    } catch (const langshift::Error& e) {
        std::cerr << "error";
        if (!e.stage().empty()) std::cerr << " [" << e.stage() << "]";
        std::cerr << ": " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
