#include "bezspline/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "bezspline/datasets.hpp"
#include "bezspline/diagnostics.hpp"
#include "bezspline/io.hpp"
#include "bezspline/parametric.hpp"
#include "bezspline/svg.hpp"

namespace bezspline::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string input;
    std::string output = "-";
    std::string input_format;
    std::string format = "csv";
    std::string alpha;
    std::size_t samples = kDefaultSampleCount;
    bool samples_given = false;
    bool no_strict = false;
    bool parametric = false;
    std::string parameterization;
    bool include_nodes = false;
    int example_id = 0;
    std::string svg_path;
    bool check = false;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw SplineError(ErrorCode::Io, "cannot read " + path, path);
    std::ostringstream ss;
    ss << file.rdbuf();
    if (file.bad()) throw SplineError(ErrorCode::Io, "cannot read " + path, path);
    return ss.str();
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
    if (path == "-") {
        out << bytes;
        out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw SplineError(ErrorCode::Io, "cannot write " + path, path);
    file << bytes;
    file.close();
    if (!file) throw SplineError(ErrorCode::Io, "cannot write " + path, path);
}

double parse_alpha_token(std::string_view token, std::size_t index) {
    auto number = [&](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
            throw SplineError(ErrorCode::Validation,
                              "--alpha entry " + std::to_string(index) + " (\"" + std::string(token) +
                                  "\") is not a number",
                              "alpha");
        }
        return v;
    };
    if (const auto slash = token.find('/'); slash != std::string_view::npos) {
        return number(token.substr(0, slash)) / number(token.substr(slash + 1));
    }
    return number(token);
}

/// "0.5", "1/3" or a comma-separated list with one entry per interval.
std::vector<double> parse_alpha_list(std::string_view text, std::size_t intervals) {
    std::vector<double> values;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        values.push_back(parse_alpha_token(text.substr(start, comma - start), values.size()));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (values.size() == 1) return std::vector<double>(intervals, values.front());
    if (values.size() != intervals) {
        throw SplineError(ErrorCode::Arity,
                          "--alpha has " + std::to_string(values.size()) + " entries, expected 1 or " +
                              std::to_string(intervals),
                          "alpha");
    }
    return values;
}

io::Format input_format_for(const Options& o) {
    if (!o.input_format.empty()) return io::parse_format(o.input_format);
    const auto& p = o.input;
    return p.size() >= 4 && p.compare(p.size() - 4, 4, ".csv") == 0 ? io::Format::Csv : io::Format::Json;
}

struct Job {
    io::InputDocument document;
    NodePlacement placement;
    std::size_t samples = kDefaultSampleCount;
};

Job load(const Options& o, std::istream& in) {
    Job job;
    if (o.example_id != 0) {
        const auto data = datasets::by_id(o.example_id);
        job.document = io::ScalarInputDocument{data->tau, data->F, std::nullopt, std::nullopt, std::nullopt};
    } else {
        const auto kind = o.parametric ? io::DocumentKind::Parametric : io::DocumentKind::Auto;
        job.document = io::parse_input(read_input(o.input, in), input_format_for(o), kind);
    }

    std::size_t n = 0;
    std::optional<std::vector<double>> alpha;
    std::optional<bool> strict;
    std::optional<std::size_t> samples;
    std::visit(
        [&](auto& d) {
            alpha = d.alpha;
            strict = d.strict;
            samples = d.samples;
            if constexpr (std::is_same_v<std::decay_t<decltype(d)>, io::ScalarInputDocument>) {
                n = d.tau.size();
            } else {
                n = d.points.size();
                if (!o.parameterization.empty()) d.parameterization = parse_parameterization(o.parameterization);
            }
        },
        job.document);

    if (!o.alpha.empty()) alpha = parse_alpha_list(o.alpha, n - 1);
    if (o.no_strict) strict = false;
    job.placement = io::placement_for(alpha, strict, n - 1);
    job.samples = o.samples_given ? o.samples : samples.value_or(kDefaultSampleCount);
    return job;
}

json curve_json(const SplineCurve& c) {
    const auto& g = c.grids();
    return json{{"tau", g.tau}, {"F", g.F}, {"alpha", g.alpha}, {"x", g.x},  {"f", g.f},
                {"fp", g.fp},   {"phi", c.phi()}, {"q", c.q()}};
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += format_number(v[i]);
    }
    return s;
}

struct CheckReport {
    std::string text;
    bool ok = true;
};

CheckReport check_report(const Diagnostics& d, std::size_t nodes) {
    const double tol_c1 = 1e-9 * d.scale;
    const double tol_value = 1e-10 * d.scale;
    const double tol_slope = 1e-9 * d.scale;
    CheckReport r;
    std::ostringstream os;
    os << "nodes: " << nodes << "\n";
    os << "scale: " << format_number(d.scale) << "\n";
    os << "dominance_margins: " << join(d.dominance_margins) << "\n";
    os << "min_dominance_margin: "
       << (d.dominance_margins.empty() ? std::string("none") : format_number(d.min_dominance_margin())) << "\n";
    os << "c1_residuals: " << join(d.c1_residuals) << "\n";
    os << "max_c1_residual: " << format_number(d.max_c1_residual()) << "\n";
    os << "max_interp_value_residual: " << format_number(d.max_interp_value_residual()) << "\n";
    os << "max_interp_slope_residual: " << format_number(d.max_interp_slope_residual()) << "\n";
    os << "hull_margin: " << format_number(d.hull_margin) << "\n";

    if (!d.dominance_margins.empty() && !(d.min_dominance_margin() > 0.0)) {
        os << "FAIL dominance: non-positive margin\n";
        r.ok = false;
    }
    if (d.max_c1_residual() > tol_c1) {
        os << "FAIL c1: residual above " << format_number(tol_c1) << "\n";
        r.ok = false;
    }
    if (d.max_interp_value_residual() > tol_value || d.max_interp_slope_residual() > tol_slope) {
        os << "FAIL interpolation: residual above tolerance\n";
        r.ok = false;
    }
    if (d.hull_margin < -1e-9 * d.scale) os << "note: curve leaves the control-point hull\n";
    os << "status: " << (r.ok ? "ok" : "fail") << "\n";
    r.text = os.str();
    return r;
}

int execute(const std::string& command, const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const Job job = load(o, in);
    if (!job.placement.strict) {
        err << "warning: strict mode off; solvability is only guaranteed for alpha in [1/3, 2/3]\n";
    }
    if (job.samples < 2) throw SplineError(ErrorCode::Validation, "sample count must be at least 2", "samples");

    if (const auto* pd = std::get_if<io::ParametricInputDocument>(&job.document)) {
        const ParametricCurve curve = build_parametric(pd->points, job.placement, pd->parameterization);
        if (command == "build") {
            json doc{{"mode", "parametric"},
                     {"parameterization", std::string(to_string(curve.parameterization))},
                     {"t", curve.t},
                     {"x", curve_json(curve.sx)},
                     {"y", curve_json(curve.sy)}};
            write_output(o.output, doc.dump(2) + "\n", out);
            return kOk;
        }
        const auto samples = sample_parametric(curve, job.samples);
        if (command == "sample" || command == "example") {
            write_output(o.output, io::write_samples(samples, io::parse_format(o.format)), out);
        }
        if (command == "svg" || !o.svg_path.empty()) {
            std::vector<Point2> pts(samples.size());
            for (std::size_t i = 0; i < samples.size(); ++i) pts[i] = {samples[i].x, samples[i].y};
            write_output(command == "svg" ? o.output : o.svg_path, io::write_svg(pd->points, pts), out);
        }
        if (command == "check" || o.check) {
            Diagnostics d = diagnose(curve.sx, job.samples);
            const Diagnostics dy = diagnose(curve.sy, job.samples);
            for (std::size_t i = 0; i < d.c1_residuals.size(); ++i) {
                d.c1_residuals[i] = std::max(d.c1_residuals[i], dy.c1_residuals[i]);
            }
            for (std::size_t j = 0; j < d.interp_value_residuals.size(); ++j) {
                d.interp_value_residuals[j] = std::max(d.interp_value_residuals[j], dy.interp_value_residuals[j]);
                d.interp_slope_residuals[j] = std::max(d.interp_slope_residuals[j], dy.interp_slope_residuals[j]);
            }
            d.scale = std::max(d.scale, dy.scale);
            d.hull_margin = parametric_hull_margin(curve, pd->points, job.samples);
            const CheckReport r = check_report(d, pd->points.size());
            write_output(command == "check" ? o.output : "-", r.text, out);
            return r.ok ? kOk : kCheckFailed;
        }
        return kOk;
    }

    const auto& sd = std::get<io::ScalarInputDocument>(job.document);
    const ControlPolygon control = sd.control();
    const SplineCurve curve = build_spline(control, job.placement);
    if (command == "build") {
        json doc = curve_json(curve);
        doc["mode"] = "scalar";
        doc["strict"] = job.placement.strict;
        write_output(o.output, doc.dump(2) + "\n", out);
        return kOk;
    }
    const auto samples = sample(curve, job.samples, o.include_nodes);
    if (command == "sample" || (command == "example" && (o.svg_path.empty() || o.output != "-"))) {
        write_output(o.output, io::write_samples(samples, io::parse_format(o.format)), out);
    }
    if (command == "svg" || !o.svg_path.empty()) {
        write_output(command == "svg" ? o.output : o.svg_path, io::write_svg(control, samples), out);
    }
    if (command == "check" || o.check) {
        const CheckReport r = check_report(diagnose(curve, job.samples), control.size());
        write_output(command == "check" ? o.output : "-", r.text, out);
        return r.ok ? kOk : kCheckFailed;
    }
    return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bezier-type C1 cubic spline through control-polygon tangency points", "bezspline"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub, bool needs_input) {
        if (needs_input) {
            sub->add_option("-i,--input", o.input, "Input file (JSON or CSV), - for stdin")->required();
            sub->add_option("--input-format", o.input_format, "json or csv (default: by extension)")
                ->check(CLI::IsMember({"json", "csv"}));
            sub->add_flag("--parametric", o.parametric, "Treat CSV rows as planar (x, y) points");
            sub->add_option("--parameterization", o.parameterization, "chord (default) or uniform")
                ->check(CLI::IsMember({"chord", "uniform"}));
        }
        sub->add_option("-o,--output", o.output, "Output file, - for stdout")->capture_default_str();
        sub->add_option("--alpha", o.alpha, "Node placement: one value (e.g. 0.5 or 1/3) or one per interval, comma separated");
        sub->add_flag("--no-strict", o.no_strict, "Allow alpha anywhere in (0, 1)");
        sub->add_option("--samples", o.samples, "Number of uniform samples")
            ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}))
            ->each([&o](const std::string&) { o.samples_given = true; });
    };

    auto* build = app.add_subcommand("build", "Solve the spline and print knot values and cubic coefficients as JSON");
    add_common(build, true);

    auto* sample_cmd = app.add_subcommand("sample", "Write uniform samples of the curve");
    add_common(sample_cmd, true);
    sample_cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sample_cmd->add_flag("--include-nodes", o.include_nodes, "Also sample at every knot and interior node");

    auto* svg = app.add_subcommand("svg", "Render control polygon and curve as SVG");
    add_common(svg, true);

    auto* check = app.add_subcommand("check", "Report dominance margins, C1 residuals and hull margin");
    add_common(check, true);

    auto* example = app.add_subcommand("example", "Build one of the embedded datasets (1 or 2)");
    add_common(example, false);
    example->add_option("id", o.example_id, "Dataset id")->required()->check(CLI::IsMember({1, 2}));
    example->add_option("--svg", o.svg_path, "Also write an SVG figure to this path");
    example->add_option("--format", o.format, "Sample format, csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    example->add_flag("--include-nodes", o.include_nodes, "Also sample at every knot and interior node");
    example->add_flag("--check", o.check, "Print diagnostics to stdout");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::RequiredError) && app.get_subcommands().empty()) {
            err << app.help();
        }
        return kInvalid;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return execute(command, o, in, out, err);
    } catch (const SplineError& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::Io ? kIoError : kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

}  // namespace bezspline::cli
