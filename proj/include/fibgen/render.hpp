#pragma once

// Rendering of reports, tables and grids to the formats the CLI emits.
// All output is locale-free and byte-deterministic; decimals are rounded
// DOWN at the displayed precision so a printed lower bound is still a valid
// lower bound.

#include <string>
#include <vector>

#include <json.hpp>

#include "fibgen/bounds.hpp"
#include "fibgen/sweep.hpp"

namespace fibgen::render {

using json = nlohmann::ordered_json;

/// v rounded toward minus infinity at `places` decimals, e.g. -0.4729537 ->
/// "-0.472954" at 6 places.
std::string format_decimal_floor(double v, int places);

/// Certificate value: exact rationals as "num/den", closed forms as a
/// 6-decimal down-rounded string.
std::string value_string(const BoundCertificate& cert);

std::string report_human(const Report& rep);
json report_json(const Report& rep);

std::string table_human(const std::vector<sweep::TableRow>& rows);
std::string table_csv(const std::vector<sweep::TableRow>& rows);
json table_json(const std::vector<sweep::TableRow>& rows);

std::string grid_csv(const std::vector<sweep::GridCell>& cells);
json grid_json(const sweep::GridRect& rect,
               const std::vector<sweep::GridCell>& cells);

/// Heatmap of best_lower over the rectangle: one rect per cell, axis labels
/// for n and d, and a 13-entry legend (values clamped to [0, 12]).
std::string grid_svg(const sweep::GridRect& rect,
                     const std::vector<sweep::GridCell>& cells);

}  // namespace fibgen::render
