#include "bezspline/service.hpp"

#include <cmath>
#include <cstdlib>
#include <json.hpp>
#include <optional>

#include "bezspline/datasets.hpp"
#include "bezspline/diagnostics.hpp"
#include "bezspline/parametric.hpp"

namespace bezspline::service {

using nlohmann::json;

namespace {

struct Violation {
    std::string path;
    std::string code;
    std::string message;
};

Response json_response(int status, const json& body) {
    return Response{status, "application/json", body.dump() + "\n", {}};
}

Response error_response(int status, std::string_view message) {
    return json_response(status, json{{"error", message}});
}

Response method_not_allowed(std::string_view allow) {
    Response r = error_response(405, "method not allowed");
    r.headers.emplace_back("Allow", std::string(allow));
    return r;
}

/// Request after validation; alpha already broadcast.
struct SplineRequest {
    bool parametric = false;
    std::vector<double> tau;
    std::vector<double> F;
    std::vector<Point2> points;
    Parameterization parameterization = Parameterization::Chord;
    std::vector<double> alpha;
    bool strict = true;
    std::size_t samples = 0;
};

class Validator {
public:
    void fail(std::string path, std::string code, std::string message) {
        violations_.push_back({std::move(path), std::move(code), std::move(message)});
    }
    [[nodiscard]] bool ok() const noexcept { return violations_.empty(); }
    [[nodiscard]] std::size_t count() const noexcept { return violations_.size(); }
    [[nodiscard]] json report() const {
        json errors = json::array();
        for (const auto& v : violations_) errors.push_back({{"path", v.path}, {"code", v.code}, {"message", v.message}});
        return json{{"errors", std::move(errors)}};
    }

    std::optional<double> number(const json& v, const std::string& path) {
        if (!v.is_number()) {
            fail(path, "type", path + " must be a number");
            return std::nullopt;
        }
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            fail(path, "non_finite", path + " must be finite");
            return std::nullopt;
        }
        return d;
    }

    std::vector<double> numbers(const json& v, const std::string& path) {
        std::vector<double> out;
        if (!v.is_array()) {
            fail(path, "type", path + " must be an array of numbers");
            return out;
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto d = number(v[i], path + "/" + std::to_string(i));
            out.push_back(d.value_or(0.0));
        }
        return out;
    }

private:
    std::vector<Violation> violations_;
};

void validate_alpha(Validator& val, const json& doc, std::size_t intervals, SplineRequest& req) {
    req.alpha.assign(intervals, 0.5);
    auto it = doc.find("alpha");
    if (it == doc.end() || it->is_null()) return;
    if (it->is_number()) {
        auto a = val.number(*it, "/alpha");
        if (a) req.alpha.assign(intervals, *a);
    } else if (it->is_array()) {
        if (it->size() != intervals) {
            val.fail("/alpha", "arity",
                     "alpha has " + std::to_string(it->size()) + " entries, expected " + std::to_string(intervals));
            return;
        }
        req.alpha = val.numbers(*it, "/alpha");
    } else {
        val.fail("/alpha", "type", "alpha must be a number or an array of numbers");
        return;
    }
    const bool broadcast = it->is_number();
    const std::size_t before = val.count();
    for (std::size_t j = 0; j < req.alpha.size(); ++j) {
        const double a = req.alpha[j];
        const std::string path = broadcast ? "/alpha" : "/alpha/" + std::to_string(j);
        if (!(a > 0.0 && a < 1.0)) {
            val.fail(path, "domain", "alpha[" + std::to_string(j) + "]=" + format_number(a) + " outside (0, 1)");
        } else if (req.strict && (a < NodePlacement::kStrictLower || a > NodePlacement::kStrictUpper)) {
            val.fail(path, "validation",
                     "alpha[" + std::to_string(j) + "]=" + format_number(a) +
                         " outside [1/3, 2/3], the range where the knot system is diagonally dominant");
        }
        if (broadcast && val.count() != before) break;
    }
}

json diagnostics_json(const Diagnostics& d) {
    return json{
        {"dominance_margins", d.dominance_margins},
        {"min_dominance_margin", d.dominance_margins.empty() ? json(nullptr) : json(d.min_dominance_margin())},
        {"c1_residuals", d.c1_residuals},
        {"max_c1_residual", d.max_c1_residual()},
        {"interp_value_residuals", d.interp_value_residuals},
        {"interp_slope_residuals", d.interp_slope_residuals},
        {"hull_margin", d.hull_margin},
        {"scale", d.scale},
    };
}

std::vector<double> elementwise_max(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

Response build(const SplineRequest& req) {
    json out;
    out["mode"] = req.parametric ? "parametric" : "scalar";
    out["alpha"] = req.alpha;
    out["strict"] = req.strict;
    json warnings = json::array();
    if (!req.strict) warnings.push_back("strict mode off: solvability is only guaranteed for alpha in [1/3, 2/3]");

    const NodePlacement placement{req.alpha, req.strict};
    if (!req.parametric) {
        const ControlPolygon control{req.tau, req.F};
        const SplineCurve curve = build_spline(control, placement);
        const Diagnostics diag = diagnose(curve, std::max<std::size_t>(req.samples, 2));
        out["phi"] = curve.phi();
        out["q"] = curve.q();
        std::vector<double> xs;
        if (req.samples == 1) xs = {curve.a()};
        else xs = uniform_grid(curve.a(), curve.b(), req.samples);
        out["samples"] = json{{"x", xs}, {"y", eval_many(curve, xs)}};
        out["diagnostics"] = diagnostics_json(diag);
    } else {
        const ParametricCurve curve = build_parametric(req.points, placement, req.parameterization);
        const std::size_t count = std::max<std::size_t>(req.samples, 2);
        Diagnostics dx = diagnose(curve.sx, count);
        const Diagnostics dy = diagnose(curve.sy, count);
        Diagnostics combined = dx;
        combined.c1_residuals = elementwise_max(dx.c1_residuals, dy.c1_residuals);
        combined.interp_value_residuals = elementwise_max(dx.interp_value_residuals, dy.interp_value_residuals);
        combined.interp_slope_residuals = elementwise_max(dx.interp_slope_residuals, dy.interp_slope_residuals);
        combined.scale = std::max(dx.scale, dy.scale);
        combined.hull_margin = parametric_hull_margin(curve, req.points, count);

        out["parameterization"] = std::string(to_string(curve.parameterization));
        out["t"] = curve.t;
        out["phi"] = json{{"x", curve.sx.phi()}, {"y", curve.sy.phi()}};
        out["q"] = json{{"x", curve.sx.q()}, {"y", curve.sy.q()}};
        std::vector<double> ts;
        if (req.samples == 1) ts = {curve.t.front()};
        else ts = uniform_grid(curve.t.front(), curve.t.back(), req.samples);
        out["samples"] = json{{"t", ts}, {"x", eval_many(curve.sx, ts)}, {"y", eval_many(curve.sy, ts)}};
        out["diagnostics"] = diagnostics_json(combined);
    }
    out["warnings"] = std::move(warnings);
    return json_response(200, out);
}

Response post_spline(std::string_view body, const Config& config) {
    json doc;
    try {
        doc = json::parse(body);
    } catch (const json::out_of_range& e) {
        Validator val;
        val.fail("", "non_finite", std::string("number out of range: ") + e.what());
        return json_response(422, val.report());
    } catch (const json::exception& e) {
        return error_response(400, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) return error_response(400, "request body must be a JSON object");

    Validator val;
    SplineRequest req;

    std::string mode = "scalar";
    if (auto it = doc.find("mode"); it != doc.end()) {
        if (!it->is_string() || (*it != "scalar" && *it != "parametric")) {
            val.fail("/mode", "validation", "mode must be \"scalar\" or \"parametric\"");
            return json_response(422, val.report());
        }
        mode = it->get<std::string>();
    }
    req.parametric = mode == "parametric";

    if (auto it = doc.find("strict"); it != doc.end() && !it->is_null()) {
        if (it->is_boolean()) req.strict = it->get<bool>();
        else val.fail("/strict", "type", "strict must be a boolean");
    }

    req.samples = config.default_samples;
    if (auto it = doc.find("samples"); it != doc.end() && !it->is_null()) {
        if (!it->is_number_integer()) {
            val.fail("/samples", "type", "samples must be an integer");
        } else {
            const auto s = it->get<long long>();
            if (s < 1 || static_cast<unsigned long long>(s) > config.max_samples) {
                val.fail("/samples", "range", "samples must be in [1, " + std::to_string(config.max_samples) + "]");
            } else {
                req.samples = static_cast<std::size_t>(s);
            }
        }
    }

    std::size_t n = 0;
    if (!req.parametric) {
        const json tau = doc.value("tau", json());
        const json F = doc.value("F", json());
        if (tau.is_array() && tau.size() > config.max_points) {
            return error_response(413, "at most " + std::to_string(config.max_points) + " control points");
        }
        const std::size_t before = val.count();
        if (tau.is_null()) val.fail("/tau", "required", "tau is required");
        else req.tau = val.numbers(tau, "/tau");
        if (F.is_null()) val.fail("/F", "required", "F is required");
        else req.F = val.numbers(F, "/F");
        if (val.count() != before) return json_response(422, val.report());
        if (req.tau.size() != req.F.size()) {
            val.fail("/F", "arity",
                     "tau has " + std::to_string(req.tau.size()) + " entries but F has " + std::to_string(req.F.size()));
        }
        if (req.tau.size() < 2) val.fail("/tau", "arity", "at least 2 control points required");
        for (std::size_t i = 1; i < req.tau.size(); ++i) {
            if (!(req.tau[i] > req.tau[i - 1])) {
                val.fail("/tau/" + std::to_string(i), "non_increasing", "tau must be strictly increasing");
            }
        }
        n = req.tau.size();
    } else {
        const json pts = doc.value("points", json());
        if (pts.is_array() && pts.size() > config.max_points) {
            return error_response(413, "at most " + std::to_string(config.max_points) + " control points");
        }
        if (!pts.is_array()) {
            val.fail("/points", pts.is_null() ? "required" : "type", "points must be an array of [x, y] pairs");
        } else {
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const std::string path = "/points/" + std::to_string(i);
                if (!pts[i].is_array() || pts[i].size() != 2) {
                    val.fail(path, "arity", "each point must be an [x, y] pair");
                    req.points.push_back({0.0, 0.0});
                    continue;
                }
                const auto x = val.number(pts[i][0], path + "/0");
                const auto y = val.number(pts[i][1], path + "/1");
                req.points.push_back({x.value_or(0.0), y.value_or(0.0)});
            }
            if (req.points.size() < 2) val.fail("/points", "arity", "at least 2 control points required");
        }
        if (auto it = doc.find("parameterization"); it != doc.end() && !it->is_null()) {
            if (it->is_string() && (*it == "chord" || *it == "uniform")) {
                req.parameterization = parse_parameterization(it->get<std::string>());
            } else {
                val.fail("/parameterization", "validation", "parameterization must be \"chord\" or \"uniform\"");
            }
        }
        if (val.count() == 0 && req.parameterization == Parameterization::Chord) {
            for (std::size_t i = 1; i < req.points.size(); ++i) {
                if (req.points[i] == req.points[i - 1]) {
                    val.fail("/points/" + std::to_string(i), "validation",
                             "point coincides with its predecessor (zero chord length)");
                }
            }
        }
        n = req.points.size();
    }
    if (n >= 2) validate_alpha(val, doc, n - 1, req);
    if (!val.ok()) return json_response(422, val.report());

    try {
        return build(req);
    } catch (const SplineError& e) {
        val.fail(e.location().empty() ? "" : "/" + e.location(), std::string(to_string(e.code())), e.what());
        return json_response(422, val.report());
    }
}

Response get_example(std::string_view id_text) {
    int id = 0;
    if (id_text == "1") id = 1;
    else if (id_text == "2") id = 2;
    const auto data = datasets::by_id(id);
    if (!data) return error_response(404, "unknown example");
    return json_response(200, json{{"id", id},
                                   {"description", std::string(datasets::description(id))},
                                   {"mode", "scalar"},
                                   {"tau", data->tau},
                                   {"F", data->F}});
}

}  // namespace

Config config_from_env() {
    Config c;
    if (const char* origin = std::getenv("BEZSPLINE_CORS_ORIGIN"); origin && *origin) c.cors_origin = origin;
    if (const char* listen = std::getenv("BEZSPLINE_LISTEN"); listen && *listen) {
        const std::string s = listen;
        const auto colon = s.rfind(':');
        if (colon == std::string::npos) {
            c.host = s;
        } else {
            if (colon > 0) c.host = s.substr(0, colon);
            c.port = std::atoi(s.c_str() + colon + 1);
        }
    }
    return c;
}

Response handle(std::string_view method, std::string_view path, std::string_view body, const Config& config) {
    constexpr std::string_view examples_prefix = "/api/v1/examples/";
    if (method == "OPTIONS") return Response{204, "text/plain", "", {}};

    if (path == "/healthz") {
        if (method != "GET") return method_not_allowed("GET");
        return Response{200, "text/plain", "ok", {}};
    }
    if (path == "/api/v1/spline") {
        if (method != "POST") return method_not_allowed("POST");
        return post_spline(body, config);
    }
    if (path == "/api/v1/schema") {
        if (method != "GET") return method_not_allowed("GET");
        return Response{200, "application/json", schema(), {}};
    }
    if (path.starts_with(examples_prefix)) {
        if (method != "GET") return method_not_allowed("GET");
        return get_example(path.substr(examples_prefix.size()));
    }
    return error_response(404, "not found");
}

}  // namespace bezspline::service
