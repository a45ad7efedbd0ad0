#pragma once

#include <httplib.h>

#include "bezspline/service.hpp"

namespace bezspline::service {

/// Routes every method and path of `server` through handle(), adding CORS headers.
void mount(httplib::Server& server, const Config& config);

}  // namespace bezspline::service
