#include "bezspline/service.hpp"

namespace bezspline::service {

const std::string& schema() {
    static const std::string text = R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "bezspline API v1",
  "definitions": {
    "alpha": {
      "description": "Interior node position per interval, alpha = (tau_right - x) / h. A number is broadcast to every interval. Strict mode requires 1/3 <= alpha <= 2/3, otherwise 0 < alpha < 1.",
      "oneOf": [
        {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
        {"type": "array", "items": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1}}
      ],
      "default": 0.5
    },
    "diagnostics": {
      "type": "object",
      "properties": {
        "dominance_margins": {"type": "array", "items": {"type": "number"}},
        "min_dominance_margin": {"type": ["number", "null"]},
        "c1_residuals": {"type": "array", "items": {"type": "number"}},
        "max_c1_residual": {"type": "number"},
        "interp_value_residuals": {"type": "array", "items": {"type": "number"}},
        "interp_slope_residuals": {"type": "array", "items": {"type": "number"}},
        "hull_margin": {"type": "number"},
        "scale": {"type": "number"}
      }
    }
  },
  "request": {
    "type": "object",
    "properties": {
      "mode": {"enum": ["scalar", "parametric"], "default": "scalar"},
      "tau": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 100000, "description": "scalar mode: strictly increasing abscissae"},
      "F": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 100000, "description": "scalar mode: ordinates, same length as tau"},
      "points": {"type": "array", "items": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}, "minItems": 2, "maxItems": 100000, "description": "parametric mode: [x, y] control points"},
      "parameterization": {"enum": ["chord", "uniform"], "default": "chord"},
      "alpha": {"$ref": "#/definitions/alpha"},
      "samples": {"type": "integer", "minimum": 1, "maximum": 100000, "default": 1000},
      "strict": {"type": "boolean", "default": true}
    }
  },
  "response": {
    "type": "object",
    "properties": {
      "mode": {"enum": ["scalar", "parametric"]},
      "alpha": {"type": "array", "items": {"type": "number"}},
      "strict": {"type": "boolean"},
      "parameterization": {"enum": ["chord", "uniform"]},
      "t": {"type": "array", "items": {"type": "number"}},
      "phi": {"description": "curve values at the knots; {x, y} arrays in parametric mode"},
      "q": {"description": "cubic coefficient per interval; {x, y} arrays in parametric mode"},
      "samples": {"type": "object", "description": "columnar x, y (and t in parametric mode)"},
      "diagnostics": {"$ref": "#/definitions/diagnostics"},
      "warnings": {"type": "array", "items": {"type": "string"}}
    }
  },
  "error": {
    "type": "object",
    "properties": {
      "errors": {"type": "array", "items": {"type": "object", "properties": {"path": {"type": "string", "description": "JSON pointer"}, "code": {"type": "string"}, "message": {"type": "string"}}}},
      "error": {"type": "string"}
    }
  }
}
)json";
    return text;
}

}  // namespace bezspline::service
