#include <iostream>

#include "bezspline/http_server.hpp"

int main() {
    const auto config = bezspline::service::config_from_env();
    httplib::Server server;
    bezspline::service::mount(server, config);
    std::cerr << "bezspline-serve listening on " << config.host << ":" << config.port
              << " (CORS origin " << config.cors_origin << ")\n";
    if (!server.listen(config.host, config.port)) {
        std::cerr << "failed to bind " << config.host << ":" << config.port << "\n";
        return 1;
    }
    return 0;
}
