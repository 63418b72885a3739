#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <algorithm>

#include "langshift/error.hpp"
#include "langshift/ingest.hpp"
#include "langshift/report.hpp"
#include "langshift/stats.hpp"
#include "langshift/synthetic.hpp"
#include "langshift/textprep.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cross-platform language shift analysis: text preparation, divergences, tests and the full pipeline.";

    static py::exception<langshift::Error> base(m, "LangshiftError");
    static py::exception<langshift::ConfigError> config_error(m, "ConfigError", base.ptr());
    static py::exception<langshift::DataError> data_error(m, "DataError", base.ptr());
    static py::exception<langshift::NumericError> numeric_error(m, "NumericError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const langshift::Error& e) {
            std::string msg = e.stage().empty() ? e.what() : "[" + e.stage() + "] " + e.what();
            switch (e.kind()) {
                case langshift::ErrorKind::config: py::set_error(config_error, msg.c_str()); break;
                case langshift::ErrorKind::data: py::set_error(data_error, msg.c_str()); break;
                case langshift::ErrorKind::numeric: py::set_error(numeric_error, msg.c_str()); break;
            }
        }
    });

    py::class_<langshift::TestResult>(m, "TestResult")
        .def_readonly("statistic", &langshift::TestResult::statistic)
        .def_readonly("p_value", &langshift::TestResult::p_value)
        .def_readonly("degenerate", &langshift::TestResult::degenerate)
        .def_property_readonly("method", [](const langshift::TestResult& r) { return std::string(to_string(r.method)); })
        .def("__repr__", [](const langshift::TestResult& r) {
            return "TestResult(statistic=" + std::to_string(r.statistic) + ", p_value=" + std::to_string(r.p_value) +
                   ", method='" + std::string(to_string(r.method)) + "')";
        });

    m.def("tokenize", &langshift::tokenize, py::arg("text"));
    m.def("stem", &langshift::stem, py::arg("token"));
    m.def(
        "remove_stopwords",
        [](langshift::TokenStream tokens, const std::vector<std::string>& stops) {
            std::erase_if(tokens, [&](const std::string& t) {
                return std::find(stops.begin(), stops.end(), t) != stops.end();
            });
            return tokens;
        },
        py::arg("tokens"), py::arg("stopwords"));
    m.def("canonical_video_id", &langshift::canonical_video_id, py::arg("url"));

    using Vec = std::vector<double>;
    m.def(
        "jsd", [](const Vec& p, const Vec& q) { return langshift::jsd(p, q); }, py::arg("p"), py::arg("q"),
        "Jensen-Shannon divergence (base 2) between two probability vectors.");
    m.def(
        "mann_whitney_u", [](const Vec& x, const Vec& y) { return langshift::mann_whitney_u(x, y); }, py::arg("x"),
        py::arg("y"));
    m.def(
        "paired_t", [](const Vec& a, const Vec& b) { return langshift::paired_t(a, b); }, py::arg("a"), py::arg("b"));
    m.def("student_t_cdf", &langshift::student_t_cdf, py::arg("t"), py::arg("df"));
    m.def(
        "ordering_check",
        [](double before, double after) { return std::string(to_string(langshift::ordering_check(before, after))); },
        py::arg("before_to_source"), py::arg("after_to_source"));

    m.def("default_data_dir", &langshift::default_data_dir);
    m.def(
        "analyze_json",
        [](const std::filesystem::path& config_path, std::optional<std::filesystem::path> output,
           std::optional<double> window_hours, std::optional<std::string> formats) {
            auto config = langshift::load_config(config_path);
            if (output) config.output = *output;
            if (window_hours) config.window_hours = *window_hours;
            if (formats) config.formats = langshift::parse_formats(*formats);
            langshift::AnalysisReport report;
            {
                py::gil_scoped_release release;
                report = langshift::run_pipeline(config);
            }
            return langshift::render_json(report);
        },
        py::arg("config"), py::arg("output") = py::none(), py::arg("window_hours") = py::none(),
        py::arg("formats") = py::none(), "Run the full pipeline and return the JSON report text.");

    m.def(
        "write_fixture",
        [](const std::filesystem::path& dir, std::size_t videos, std::size_t source_comments,
           std::size_t before_comments, std::size_t after_comments, double before_borrow, double after_borrow,
           std::uint64_t seed) {
            langshift::FixtureOptions o{videos, source_comments, before_comments, after_comments,
                                        before_borrow, after_borrow, seed};
            return langshift::write_fixture(dir, o).config;
        },
        py::arg("dir"), py::arg("videos") = 100, py::arg("source_comments") = 2000, py::arg("before_comments") = 4000,
        py::arg("after_comments") = 4000, py::arg("before_borrow") = 0.05, py::arg("after_borrow") = 0.30,
        py::arg("seed") = 20210601, "Write a synthetic dataset; returns the path of its config file.");
}
