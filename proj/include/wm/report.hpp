#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wm/profile.hpp"

namespace wm::report {

using json = nlohmann::ordered_json;

/// Shortest decimal that round-trips to the same double. Throws
/// NonFiniteError for NaN and infinities.
std::string format_double(double x);

using Cell = std::variant<double, long long, std::string, bool>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Header row, comma separated, LF line endings.
void write_csv(std::ostream& os, const Table& table);

/// Array of row objects keyed by the header.
json table_to_json(const Table& table);

struct Envelope {
  std::string command;
  json params_echo = json::object();
  json data = json::object();
  std::vector<std::string> diagnostics;
};

/// Throws NonFiniteError if any number in `value` is not finite.
void require_finite(const json& value, const std::string& where = "output");

void write_json(std::ostream& os, const Envelope& envelope);

/// Profile file: header t,h,h1,h2,h3,q,q1,q2,q3 and one row per grid point,
/// including the closing row t = T.
void write_profile_csv(std::ostream& os, const SolutionProfile& p);

/// Reads a profile file. Columns t and h are required; when h1, h2 and h3 are
/// all present they are used as given, otherwise the derivatives are
/// recomputed by periodic finite differences. Other columns are ignored.
SolutionProfile read_profile_csv(std::istream& is, const ModelParams& params);

}  // namespace wm::report
