// Text formats shared by the command-line tool: pure-state JSON, roof-curve
// CSV and shortest round-trip number formatting.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tangleroof/analytic_roof.hpp"
#include "tangleroof/pure_state.hpp"

namespace tangleroof {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Pure state as a JSON array of 8 {"re": x, "im": y} objects in index order
/// 000, 001, ..., 111.
nlohmann::json state_to_json(const PureState3Q& state);

/// Inverse of state_to_json. Throws std::invalid_argument on malformed input
/// and on vectors that fail the PureState3Q normalization check.
PureState3Q state_from_json(const nlohmann::json& j);

PureState3Q read_state_file(const std::filesystem::path& path);

inline constexpr const char* kCurveHeader = "p,region,tau_roof,tau_char_min,t_signed";

struct CurveRow {
  double p;
  RoofRegion region;
  double tau_roof;
  /// Minimum of tau_3(p, phi) over the phi grid.
  double tau_char_min;
  /// Signed characteristic curve t(p).
  double t_signed;
};

/// `grid` points uniform on [0, 1] (endpoints included).
std::vector<CurveRow> roof_curve(const FamilyParams& fam, int grid, int phi_grid);

void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows);

/// Parses CSV written by write_curve_csv. Throws std::invalid_argument on a
/// bad header, row or region label.
std::vector<CurveRow> read_curve_csv(std::istream& in);

RoofRegion parse_region(const std::string& label);

}  // namespace tangleroof
