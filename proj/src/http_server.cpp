#include "bezspline/http_server.hpp"

namespace bezspline::service {

void mount(httplib::Server& server, const Config& config) {
    auto route = [config](const httplib::Request& req, httplib::Response& res) {
        const Response r = handle(req.method, req.path, req.body, config);
        res.status = r.status;
        for (const auto& [k, v] : r.headers) res.set_header(k, v);
        res.set_header("Access-Control-Allow-Origin", config.cors_origin);
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.set_content(r.body, r.content_type);
    };
    const char* any = ".*";
    server.Get(any, route);
    server.Post(any, route);
    server.Put(any, route);
    server.Patch(any, route);
    server.Delete(any, route);
    server.Options(any, route);
    // Bodies beyond ~100000 points are rejected before parsing.
    server.set_payload_max_length(64u << 20);
}

}  // namespace bezspline::service
