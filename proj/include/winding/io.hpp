#pragma once

// Exact JSON drawing documents, SVG rendering and whole-file I/O.

#include <map>
#include <string>

#include "winding/graph_drawing.hpp"

namespace winding {

inline constexpr const char* kFormatVersion = "1";

/// Canonical document text: sorted keys, reduced rationals as strings.
std::string serialize(const Drawing& d);

/// Throws SchemaError, EndpointMismatch or BadRational.
Drawing parse_document(const std::string& text);

struct SvgOptions {
  /// Stroke colors by edge; edges not listed use `default_color`.
  std::map<Edge, std::string> edge_colors{{{1, 3}, "red"}, {{2, 4}, "blue"}};
  std::string default_color = "black";
  bool labels = true;
};

std::string render_svg(const Drawing& d, const SvgOptions& options = {});

/// Throws Error when the file cannot be read.
std::string read_file(const std::string& path);

/// Writes to a temporary file next to `path`, then renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace winding
