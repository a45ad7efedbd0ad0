#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bezspline::service {

struct Config {
    std::string cors_origin = "http://localhost:5173";
    std::string host = "127.0.0.1";
    int port = 8080;
    std::size_t max_points = 100000;
    std::size_t max_samples = 100000;
    std::size_t default_samples = 1000;
};

/// Reads BEZSPLINE_LISTEN ("host:port") and BEZSPLINE_CORS_ORIGIN.
Config config_from_env();

struct Response {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
    std::vector<std::pair<std::string, std::string>> headers;
};

/// Transport-independent request handler. Routes:
///   POST /api/v1/spline        build a spline, 200 | 400 | 413 | 422
///   GET  /api/v1/examples/{id} embedded dataset, 200 | 404
///   GET  /api/v1/schema        request/response JSON schema
///   GET  /healthz              "ok"
/// Known paths with the wrong method answer 405.
Response handle(std::string_view method, std::string_view path, std::string_view body, const Config& config = {});

/// JSON schema of the request and response bodies.
const std::string& schema();

}  // namespace bezspline::service
