#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <json.hpp>
#include <thread>

#include "bezspline/http_server.hpp"
#include "bezspline/service.hpp"

using nlohmann::json;
namespace svc = bezspline::service;

namespace {

svc::Response post(const json& body) { return svc::handle("POST", "/api/v1/spline", body.dump()); }

}  // namespace

TEST(Service, SpikyNetRequest) {
    const auto r = post({{"tau", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}, {"F", {1, 3, 3, 1, 2, 7, 1.5, 1, 10, 2, 1.5}}});
    ASSERT_EQ(r.status, 200) << r.body;
    const auto doc = json::parse(r.body);
    EXPECT_EQ(doc["phi"][0].get<double>(), 1.0);
    EXPECT_EQ(doc["phi"][10].get<double>(), 1.5);
    EXPECT_LE(doc["diagnostics"]["max_c1_residual"].get<double>(), 1e-9);
    for (const auto& m : doc["diagnostics"]["dominance_margins"]) EXPECT_GT(m.get<double>(), 0.0);
    EXPECT_EQ(doc["samples"]["x"].size(), 1000u);
    EXPECT_EQ(doc["alpha"].size(), 10u);
}

TEST(Service, TentRequest) {
    const auto r = post({{"mode", "scalar"}, {"tau", {0, 1, 2}}, {"F", {0, 1, 0}}, {"alpha", 0.5}});
    ASSERT_EQ(r.status, 200);
    const auto phi = json::parse(r.body)["phi"].get<std::vector<double>>();
    EXPECT_NEAR(phi[0], 0.0, 1e-12);
    EXPECT_NEAR(phi[1], 0.8, 1e-12);
    EXPECT_NEAR(phi[2], 0.0, 1e-12);
}

TEST(Service, StrictAlphaViolationIs422) {
    const auto r = post({{"tau", {0, 1, 2}}, {"F", {0, 1, 0}}, {"alpha", 0.9}});
    ASSERT_EQ(r.status, 422);
    const auto doc = json::parse(r.body);
    EXPECT_EQ(doc["errors"][0]["path"], "/alpha");
    EXPECT_NE(doc["errors"][0]["message"].get<std::string>().find("[1/3, 2/3]"), std::string::npos);
}

TEST(Service, ListsEveryViolation) {
    const auto r = post({{"tau", {0, 1, 1, 0.5}}, {"F", {0, 1, 0, 2}}, {"alpha", {0.5, 0.9, 0.1}}, {"samples", 0}});
    ASSERT_EQ(r.status, 422);
    std::vector<std::string> paths;
    const auto doc = json::parse(r.body);
    for (const auto& e : doc["errors"]) paths.push_back(e["path"].get<std::string>());
    const std::vector<std::string> expected{"/samples", "/tau/2", "/tau/3", "/alpha/1", "/alpha/2"};
    EXPECT_EQ(paths, expected);
}

TEST(Service, MalformedJsonIs400) { EXPECT_EQ(svc::handle("POST", "/api/v1/spline", "{oops").status, 400); }

TEST(Service, TooManyPointsIs413) {
    std::vector<double> tau(100001), F(100001, 0.0);
    for (std::size_t i = 0; i < tau.size(); ++i) tau[i] = static_cast<double>(i);
    EXPECT_EQ(post({{"tau", tau}, {"F", F}}).status, 413);
}

TEST(Service, ParametricRequest) {
    const auto r = post({{"mode", "parametric"}, {"points", {{0, 0}, {1, 0}, {1, 1}}}, {"samples", 11}});
    ASSERT_EQ(r.status, 200) << r.body;
    const auto doc = json::parse(r.body);
    EXPECT_EQ(doc["parameterization"], "chord");
    EXPECT_EQ(doc["samples"]["t"].size(), 11u);
    EXPECT_EQ(doc["phi"]["x"].size(), 3u);
    EXPECT_GE(doc["diagnostics"]["hull_margin"].get<double>(), -1e-9);
}

TEST(Service, CoincidentParametricPointsAre422) {
    const auto r = post({{"mode", "parametric"}, {"points", {{0, 0}, {0, 0}, {1, 1}}}});
    ASSERT_EQ(r.status, 422);
    EXPECT_EQ(json::parse(r.body)["errors"][0]["path"], "/points/1");
}

TEST(Service, NonStrictWarns) {
    const auto r = post({{"tau", {0, 1, 2}}, {"F", {0, 1, 0}}, {"alpha", 0.9}, {"strict", false}});
    ASSERT_EQ(r.status, 200);
    EXPECT_EQ(json::parse(r.body)["warnings"].size(), 1u);
}

TEST(Service, SingleSample) {
    const auto r = post({{"tau", {0, 1}}, {"F", {2, 3}}, {"samples", 1}});
    ASSERT_EQ(r.status, 200);
    EXPECT_EQ(json::parse(r.body)["samples"]["y"], json::array({2.0}));
}

TEST(Service, Examples) {
    const auto one = svc::handle("GET", "/api/v1/examples/1", "");
    ASSERT_EQ(one.status, 200);
    const auto d1 = json::parse(one.body);
    EXPECT_EQ(d1["F"].get<std::vector<double>>(), (std::vector<double>{1, 3, 3, 1, 2, 7, 1.5, 1, 10, 2, 1.5}));
    const auto d2 = json::parse(svc::handle("GET", "/api/v1/examples/2", "").body);
    ASSERT_EQ(d2["tau"].size(), 11u);
    for (std::size_t i = 0; i < 11; ++i) {
        const double x = d2["tau"][i];
        EXPECT_NEAR(d2["F"][i].get<double>(), std::sqrt(x - x * x), 1e-9);
    }
    EXPECT_EQ(svc::handle("GET", "/api/v1/examples/3", "").status, 404);
    EXPECT_EQ(svc::handle("GET", "/api/v1/examples/abc", "").status, 404);
}

TEST(Service, Healthz) {
    const auto a = svc::handle("GET", "/healthz", "");
    EXPECT_EQ(a.status, 200);
    EXPECT_EQ(a.body, "ok");
    EXPECT_EQ(svc::handle("GET", "/healthz", "").body, a.body);
    EXPECT_EQ(svc::handle("POST", "/healthz", "").status, 405);
    EXPECT_EQ(svc::handle("DELETE", "/healthz", "").status, 405);
}

TEST(Service, SchemaIsJson) {
    const auto r = svc::handle("GET", "/api/v1/schema", "");
    ASSERT_EQ(r.status, 200);
    EXPECT_NO_THROW((void)json::parse(r.body));
}

TEST(Service, UnknownPathAndWrongMethod) {
    EXPECT_EQ(svc::handle("GET", "/nope", "").status, 404);
    EXPECT_EQ(svc::handle("GET", "/api/v1/spline", "").status, 405);
}

TEST(Service, IdenticalRequestsGiveIdenticalBodies) {
    const json body{{"tau", {0, 1, 2, 4}}, {"F", {1, -1, 2, 0}}, {"alpha", {0.4, 0.5, 0.6}}};
    std::string a, b;
    std::thread t1([&] { a = post(body).body; });
    std::thread t2([&] { b = post(body).body; });
    t1.join();
    t2.join();
    EXPECT_EQ(a, b);
}

TEST(Service, LatencyAtDeskScale) {
    std::vector<double> tau(100), F(100);
    for (std::size_t i = 0; i < 100; ++i) {
        tau[i] = static_cast<double>(i);
        F[i] = std::sin(0.3 * static_cast<double>(i));
    }
    const json body{{"tau", tau}, {"F", F}, {"samples", 2000}};
    const auto start = std::chrono::steady_clock::now();
    const auto r = post(body);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    EXPECT_EQ(r.status, 200);
    const double ms = std::chrono::duration<double, std::milli>(elapsed).count();
    EXPECT_LT(ms, 50.0);
}

TEST(Service, ConfigFromEnvironment) {
    setenv("BEZSPLINE_LISTEN", "0.0.0.0:9123", 1);
    setenv("BEZSPLINE_CORS_ORIGIN", "http://editor.local", 1);
    const auto c = svc::config_from_env();
    EXPECT_EQ(c.host, "0.0.0.0");
    EXPECT_EQ(c.port, 9123);
    EXPECT_EQ(c.cors_origin, "http://editor.local");
    unsetenv("BEZSPLINE_LISTEN");
    unsetenv("BEZSPLINE_CORS_ORIGIN");
}

TEST(ServiceHttp, RoundTripOverSocket) {
    httplib::Server server;
    svc::Config config;
    config.cors_origin = "http://editor.test";
    svc::mount(server, config);
    const int port = server.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port, 0);
    std::thread th([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto health = client.Get("/healthz");
    ASSERT_TRUE(health);
    EXPECT_EQ(health->status, 200);
    EXPECT_EQ(health->body, "ok");
    EXPECT_EQ(health->get_header_value("Access-Control-Allow-Origin"), "http://editor.test");

    auto bad_method = client.Post("/healthz", "", "text/plain");
    ASSERT_TRUE(bad_method);
    EXPECT_EQ(bad_method->status, 405);

    auto res = client.Post("/api/v1/spline", R"({"tau":[0,1,2],"F":[0,1,0]})", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_NEAR(json::parse(res->body)["phi"][1].get<double>(), 0.8, 1e-12);

    auto missing = client.Get("/api/v1/examples/3");
    ASSERT_TRUE(missing);
    EXPECT_EQ(missing->status, 404);

    server.stop();
    th.join();
}
