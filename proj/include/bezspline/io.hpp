#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bezspline/parametric.hpp"
#include "bezspline/spline.hpp"

namespace bezspline::io {

enum class Format { Json, Csv };

/// "json" or "csv"; throws ErrorCode::Validation otherwise.
Format parse_format(std::string_view text);
std::string_view to_string(Format format) noexcept;

struct ScalarInputDocument {
    std::vector<double> tau;
    std::vector<double> F;
    std::optional<std::vector<double>> alpha;
    std::optional<bool> strict;
    std::optional<std::size_t> samples;

    [[nodiscard]] ControlPolygon control() const { return {tau, F}; }
    friend bool operator==(const ScalarInputDocument&, const ScalarInputDocument&) = default;
};

struct ParametricInputDocument {
    std::vector<Point2> points;
    std::optional<std::vector<double>> alpha;
    std::optional<bool> strict;
    std::optional<std::size_t> samples;
    Parameterization parameterization = Parameterization::Chord;

    friend bool operator==(const ParametricInputDocument&, const ParametricInputDocument&) = default;
};

using InputDocument = std::variant<ScalarInputDocument, ParametricInputDocument>;

enum class DocumentKind { Auto, Scalar, Parametric };

/// Parses a control-data document.
///
/// JSON: {"tau": [...], "F": [...]} or {"points": [[x, y], ...], "parameterization": "chord"},
/// both with optional "alpha" (number broadcast to every interval, or array),
/// "strict" and "samples". CSV: two numeric columns per line, optional header
/// row; scalar unless `kind` is Parametric.
///
/// Errors carry a distinct code per failure class (Syntax, Arity, NonFinite,
/// NonIncreasing) and a location: a JSON pointer or "line N".
InputDocument parse_input(std::string_view bytes, Format format, DocumentKind kind = DocumentKind::Auto);

/// Serialises a document; CSV keeps only the control data.
std::string write_input(const InputDocument& document, Format format);

/// Node placement from the document's alpha (or `fallback_alpha` everywhere).
NodePlacement placement_for(const std::optional<std::vector<double>>& alpha, std::optional<bool> strict,
                            std::size_t intervals, double fallback_alpha = 0.5);

/// CSV: header "x,y", LF endings, shortest round-trip numbers.
/// JSON: {"x": [...], "y": [...]}.
std::string write_samples(std::span<const Sample> samples, Format format);
/// CSV header "t,x,y"; JSON {"t": [...], "x": [...], "y": [...]}.
std::string write_samples(std::span<const ParametricSample> samples, Format format);

/// Inverse of write_samples for scalar samples.
std::vector<Sample> parse_samples(std::string_view bytes, Format format);

}  // namespace bezspline::io
