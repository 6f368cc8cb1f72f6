#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "spm/diagram.hpp"

namespace spm {

enum class ExportFormat { dot, json };

ExportFormat parse_export_format(std::string_view name);
Coords parse_coords(std::string_view name);
const char* to_string(Coords c) noexcept;

/// Node text in a coordinate system: "4,2,1" or "~,4,2,1".
std::string node_label(const Partition& stored, Coords stored_coords, Coords shown);

/// DOT text; `shown` defaults to the diagram's own coordinates.
std::string to_dot(const Diagram& d, std::optional<Coords> shown = std::nullopt);

/// {"kind":..,"n":..,["coords":..,]"nodes":[..],"edges":[..]}. The coords key
/// is written for up-to diagrams and for any infinite-coordinate view.
std::string to_json(const Diagram& d, std::optional<Coords> shown = std::nullopt);

/// Inverse of to_json.
Diagram diagram_from_json(std::string_view text, Budget budget = {});

void write(std::ostream& os, const Diagram& d, ExportFormat format, std::optional<Coords> shown = std::nullopt);

}  // namespace spm
