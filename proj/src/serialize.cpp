#include "tangleroof/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tangleroof/roof_oracle.hpp"

namespace tangleroof {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

nlohmann::json state_to_json(const PureState3Q& state) {
  auto arr = nlohmann::json::array();
  for (const auto& a : state.amplitudes()) arr.push_back({{"re", a.real()}, {"im", a.imag()}});
  return arr;
}

PureState3Q state_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 8) {
    throw std::invalid_argument("state JSON must be an array of 8 amplitude objects");
  }
  Amplitudes amps{};
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& entry = j[i];
    if (!entry.is_object() || !entry.contains("re") || !entry.contains("im") ||
        !entry["re"].is_number() || !entry["im"].is_number()) {
      throw std::invalid_argument("amplitude " + std::to_string(i) +
                                  " must be an object with numeric \"re\" and \"im\"");
    }
    amps[i] = Complex(entry["re"].get<double>(), entry["im"].get<double>());
  }
  return PureState3Q(amps);
}

PureState3Q read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
  }
  return state_from_json(j);
}

std::vector<CurveRow> roof_curve(const FamilyParams& fam, int grid, int phi_grid) {
  if (grid < 2) throw std::invalid_argument("roof_curve: grid needs at least 2 points");
  std::vector<CurveRow> rows;
  rows.reserve(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    const double p = static_cast<double>(i) / (grid - 1);
    rows.push_back({p, classify(fam, p), roof_value(fam, p), char_tangle_min(fam, p, phi_grid),
                    t_curve(fam, p)});
  }
  return rows;
}

void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows) {
  out << kCurveHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.p) << ',' << region_label(r.region) << ','
        << format_double(r.tau_roof) << ',' << format_double(r.tau_char_min) << ','
        << format_double(r.t_signed) << '\n';
  }
}

RoofRegion parse_region(const std::string& label) {
  for (auto region :
       {RoofRegion::ZeroSimplex, RoofRegion::CharacteristicCurve, RoofRegion::ConvexifiedLeaf}) {
    if (label == region_label(region)) return region;
  }
  throw std::invalid_argument("unknown region label '" + label + "'");
}

namespace {

double parse_number(const std::string& field) {
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw std::invalid_argument("bad number '" + field + "' in curve CSV");
  }
  return value;
}

}  // namespace

std::vector<CurveRow> read_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCurveHeader) {
    throw std::invalid_argument("curve CSV: missing or wrong header");
  }
  std::vector<CurveRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 5) throw std::invalid_argument("curve CSV: expected 5 fields");
    rows.push_back({parse_number(fields[0]), parse_region(fields[1]), parse_number(fields[2]),
                    parse_number(fields[3]), parse_number(fields[4])});
  }
  return rows;
}

}  // namespace tangleroof
