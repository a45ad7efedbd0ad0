#include "bezspline/datasets.hpp"

namespace bezspline::datasets {

ControlPolygon spiky_net() {
    return {
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
        {1, 3, 3, 1, 2, 7, 1.5, 1, 10, 2, 1.5},
    };
}

ControlPolygon semicircle() {
    // 0.4 and 0.6 are printed with different digit counts; kept verbatim.
    return {
        {0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1},
        {0, 0.3, 0.4, 0.458257569, 0.489897949, 0.5, 0.4898979495, 0.458257569, 0.4, 0.3, 0},
    };
}

std::optional<ControlPolygon> by_id(int id) {
    switch (id) {
        case 1: return spiky_net();
        case 2: return semicircle();
        default: return std::nullopt;
    }
}

std::string_view description(int id) {
    switch (id) {
        case 1: return "net function on [1, 11]";
        case 2: return "control points on the semicircle y = sqrt(x - x^2)";
        default: return "";
    }
}

}  // namespace bezspline::datasets
