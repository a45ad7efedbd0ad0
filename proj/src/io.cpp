#include "bezspline/io.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

namespace bezspline::io {

using nlohmann::json;

namespace {

std::string pointer(std::string_view base, std::size_t i) { return std::string(base) + "/" + std::to_string(i); }

double json_number(const json& value, const std::string& where) {
    if (!value.is_number()) throw SplineError(ErrorCode::Syntax, where + " must be a number", where);
    const double v = value.get<double>();
    if (!std::isfinite(v)) throw SplineError(ErrorCode::NonFinite, where + " is not finite", where);
    return v;
}

std::vector<double> json_numbers(const json& value, const std::string& where) {
    if (!value.is_array()) throw SplineError(ErrorCode::Syntax, where + " must be an array of numbers", where);
    std::vector<double> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) out.push_back(json_number(value[i], pointer(where, i)));
    return out;
}

struct Options {
    std::optional<std::vector<double>> alpha;
    std::optional<bool> strict;
    std::optional<std::size_t> samples;
};

Options json_options(const json& doc, std::size_t intervals) {
    Options o;
    if (auto it = doc.find("alpha"); it != doc.end() && !it->is_null()) {
        if (it->is_number()) {
            o.alpha = std::vector<double>(intervals, json_number(*it, "/alpha"));
        } else {
            o.alpha = json_numbers(*it, "/alpha");
            if (o.alpha->size() != intervals) {
                throw SplineError(ErrorCode::Arity,
                                  "/alpha has " + std::to_string(o.alpha->size()) + " entries, expected " +
                                      std::to_string(intervals),
                                  "/alpha");
            }
        }
    }
    if (auto it = doc.find("strict"); it != doc.end() && !it->is_null()) {
        if (!it->is_boolean()) throw SplineError(ErrorCode::Syntax, "/strict must be a boolean", "/strict");
        o.strict = it->get<bool>();
    }
    if (auto it = doc.find("samples"); it != doc.end() && !it->is_null()) {
        if (!it->is_number_integer() || it->get<long long>() < 2) {
            throw SplineError(ErrorCode::Syntax, "/samples must be an integer >= 2", "/samples");
        }
        o.samples = it->get<std::size_t>();
    }
    return o;
}

ScalarInputDocument scalar_from_json(const json& doc) {
    if (!doc.contains("tau") || !doc.contains("F")) {
        throw SplineError(ErrorCode::Syntax, "scalar document needs \"tau\" and \"F\"", "");
    }
    ScalarInputDocument d;
    d.tau = json_numbers(doc["tau"], "/tau");
    d.F = json_numbers(doc["F"], "/F");
    if (d.tau.size() != d.F.size()) {
        throw SplineError(ErrorCode::Arity,
                          "/tau has " + std::to_string(d.tau.size()) + " entries but /F has " +
                              std::to_string(d.F.size()),
                          "/F");
    }
    if (d.tau.size() < 2) throw SplineError(ErrorCode::Arity, "at least 2 control points required", "/tau");
    for (std::size_t i = 1; i < d.tau.size(); ++i) {
        if (!(d.tau[i] > d.tau[i - 1])) {
            throw SplineError(ErrorCode::NonIncreasing, "/tau must be strictly increasing at " + pointer("/tau", i),
                              pointer("/tau", i));
        }
    }
    Options o = json_options(doc, d.tau.size() - 1);
    d.alpha = std::move(o.alpha);
    d.strict = o.strict;
    d.samples = o.samples;
    return d;
}

ParametricInputDocument parametric_from_json(const json& doc) {
    const json* pts = doc.contains("points") ? &doc["points"] : nullptr;
    if (pts == nullptr || !pts->is_array()) {
        throw SplineError(ErrorCode::Syntax, "parametric document needs a \"points\" array", "/points");
    }
    ParametricInputDocument d;
    for (std::size_t i = 0; i < pts->size(); ++i) {
        const json& p = (*pts)[i];
        const std::string where = pointer("/points", i);
        if (!p.is_array()) throw SplineError(ErrorCode::Syntax, where + " must be an [x, y] pair", where);
        if (p.size() != 2) throw SplineError(ErrorCode::Arity, where + " must have exactly 2 coordinates", where);
        d.points.push_back({json_number(p[0], where + "/0"), json_number(p[1], where + "/1")});
    }
    if (d.points.size() < 2) throw SplineError(ErrorCode::Arity, "at least 2 control points required", "/points");
    if (auto it = doc.find("parameterization"); it != doc.end() && !it->is_null()) {
        if (!it->is_string()) {
            throw SplineError(ErrorCode::Syntax, "/parameterization must be a string", "/parameterization");
        }
        d.parameterization = parse_parameterization(it->get<std::string>());
    }
    Options o = json_options(doc, d.points.size() - 1);
    d.alpha = std::move(o.alpha);
    d.strict = o.strict;
    d.samples = o.samples;
    return d;
}

json parse_json_text(std::string_view bytes) {
    try {
        return json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw SplineError(ErrorCode::Syntax, std::string("malformed JSON: ") + e.what(),
                          "byte " + std::to_string(e.byte));
    } catch (const json::out_of_range& e) {
        throw SplineError(ErrorCode::NonFinite, std::string("number out of range: ") + e.what());
    } catch (const json::exception& e) {
        throw SplineError(ErrorCode::Syntax, std::string("malformed JSON: ") + e.what());
    }
}

InputDocument parse_json(std::string_view bytes, DocumentKind kind) {
    const json doc = parse_json_text(bytes);
    if (!doc.is_object()) throw SplineError(ErrorCode::Syntax, "document must be a JSON object", "");
    if (kind == DocumentKind::Auto) {
        if (auto it = doc.find("mode"); it != doc.end() && it->is_string()) {
            const auto mode = it->get<std::string>();
            if (mode == "scalar") kind = DocumentKind::Scalar;
            else if (mode == "parametric") kind = DocumentKind::Parametric;
            else throw SplineError(ErrorCode::Syntax, "/mode must be \"scalar\" or \"parametric\"", "/mode");
        } else {
            kind = doc.contains("points") ? DocumentKind::Parametric : DocumentKind::Scalar;
        }
    }
    if (kind == DocumentKind::Parametric) return parametric_from_json(doc);
    return scalar_from_json(doc);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::optional<double> parse_double(std::string_view field) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) return std::nullopt;
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

/// Numeric rows of a CSV body; the first line may be a header.
std::vector<std::vector<double>> csv_rows(std::string_view bytes, std::size_t columns) {
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    bool first = true;
    for (std::string_view line : split(bytes, '\n')) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (first) {
            first = false;
            if (!parse_double(fields.front())) {
                if (fields.size() != columns) {
                    throw SplineError(ErrorCode::Arity,
                                      "header has " + std::to_string(fields.size()) + " columns, expected " +
                                          std::to_string(columns),
                                      "line " + std::to_string(line_no));
                }
                continue;
            }
        }
        const std::string where = "line " + std::to_string(line_no);
        if (fields.size() != columns) {
            throw SplineError(ErrorCode::Arity,
                              where + ": expected " + std::to_string(columns) + " fields, got " +
                                  std::to_string(fields.size()),
                              where);
        }
        std::vector<double> row;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            auto v = parse_double(fields[c]);
            if (!v) {
                throw SplineError(ErrorCode::Syntax,
                                  where + ": field " + std::to_string(c + 1) + " is not a number", where);
            }
            if (!std::isfinite(*v)) {
                throw SplineError(ErrorCode::NonFinite,
                                  where + ": field " + std::to_string(c + 1) + " is not finite", where);
            }
            row.push_back(*v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

InputDocument parse_csv(std::string_view bytes, DocumentKind kind) {
    const auto rows = csv_rows(bytes, 2);
    if (rows.size() < 2) throw SplineError(ErrorCode::Arity, "at least 2 control points required", "");
    if (kind == DocumentKind::Parametric) {
        ParametricInputDocument d;
        for (const auto& r : rows) d.points.push_back({r[0], r[1]});
        return d;
    }
    ScalarInputDocument d;
    for (const auto& r : rows) {
        d.tau.push_back(r[0]);
        d.F.push_back(r[1]);
    }
    for (std::size_t i = 1; i < d.tau.size(); ++i) {
        if (!(d.tau[i] > d.tau[i - 1])) {
            throw SplineError(ErrorCode::NonIncreasing, "tau must be strictly increasing at row " + std::to_string(i + 1),
                              "row " + std::to_string(i + 1));
        }
    }
    return d;
}

template <typename Doc>
void put_options(json& out, const Doc& d) {
    if (d.alpha) out["alpha"] = *d.alpha;
    if (d.strict) out["strict"] = *d.strict;
    if (d.samples) out["samples"] = *d.samples;
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw SplineError(ErrorCode::Validation, "format must be \"json\" or \"csv\", got \"" + std::string(text) + "\"",
                      "format");
}

std::string_view to_string(Format format) noexcept { return format == Format::Json ? "json" : "csv"; }

InputDocument parse_input(std::string_view bytes, Format format, DocumentKind kind) {
    return format == Format::Json ? parse_json(bytes, kind) : parse_csv(bytes, kind);
}

std::string write_input(const InputDocument& document, Format format) {
    if (format == Format::Json) {
        json out = json::object();
        if (const auto* s = std::get_if<ScalarInputDocument>(&document)) {
            out["tau"] = s->tau;
            out["F"] = s->F;
            put_options(out, *s);
        } else {
            const auto& p = std::get<ParametricInputDocument>(document);
            json pts = json::array();
            for (const auto& pt : p.points) pts.push_back({pt.x, pt.y});
            out["points"] = std::move(pts);
            out["parameterization"] = std::string(to_string(p.parameterization));
            put_options(out, p);
        }
        return out.dump() + "\n";
    }
    std::string out;
    if (const auto* s = std::get_if<ScalarInputDocument>(&document)) {
        out = "tau,F\n";
        for (std::size_t i = 0; i < s->tau.size(); ++i) {
            out += format_number(s->tau[i]) + "," + format_number(s->F[i]) + "\n";
        }
    } else {
        out = "x,y\n";
        for (const auto& p : std::get<ParametricInputDocument>(document).points) {
            out += format_number(p.x) + "," + format_number(p.y) + "\n";
        }
    }
    return out;
}

NodePlacement placement_for(const std::optional<std::vector<double>>& alpha, std::optional<bool> strict,
                            std::size_t intervals, double fallback_alpha) {
    NodePlacement p = alpha ? NodePlacement{*alpha, true} : NodePlacement::uniform(intervals, fallback_alpha);
    p.strict = strict.value_or(true);
    return p;
}

std::string write_samples(std::span<const Sample> samples, Format format) {
    if (format == Format::Json) {
        json xs = json::array();
        json ys = json::array();
        for (const auto& s : samples) {
            xs.push_back(s.x);
            ys.push_back(s.y);
        }
        json out;
        out["x"] = std::move(xs);
        out["y"] = std::move(ys);
        return out.dump() + "\n";
    }
    std::string out = "x,y\n";
    for (const auto& s : samples) out += format_number(s.x) + "," + format_number(s.y) + "\n";
    return out;
}

std::string write_samples(std::span<const ParametricSample> samples, Format format) {
    if (format == Format::Json) {
        json ts = json::array();
        json xs = json::array();
        json ys = json::array();
        for (const auto& s : samples) {
            ts.push_back(s.t);
            xs.push_back(s.x);
            ys.push_back(s.y);
        }
        json out;
        out["t"] = std::move(ts);
        out["x"] = std::move(xs);
        out["y"] = std::move(ys);
        return out.dump() + "\n";
    }
    std::string out = "t,x,y\n";
    for (const auto& s : samples) {
        out += format_number(s.t) + "," + format_number(s.x) + "," + format_number(s.y) + "\n";
    }
    return out;
}

std::vector<Sample> parse_samples(std::string_view bytes, Format format) {
    std::vector<Sample> out;
    if (format == Format::Json) {
        const json doc = parse_json_text(bytes);
        if (!doc.is_object() || !doc.contains("x") || !doc.contains("y")) {
            throw SplineError(ErrorCode::Syntax, "samples document needs \"x\" and \"y\"");
        }
        const auto xs = json_numbers(doc["x"], "/x");
        const auto ys = json_numbers(doc["y"], "/y");
        if (xs.size() != ys.size()) throw SplineError(ErrorCode::Arity, "/x and /y differ in length", "/y");
        for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({xs[i], ys[i]});
        return out;
    }
    for (const auto& r : csv_rows(bytes, 2)) out.push_back({r[0], r[1]});
    return out;
}

}  // namespace bezspline::io
