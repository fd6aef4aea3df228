#include "wm/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "wm/errors.hpp"

namespace wm::report {

std::string format_double(double x) {
  if (!std::isfinite(x)) throw NonFiniteError("refusing to serialize a non-finite number");
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_double(*d);
  if (const long long* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const bool* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return json(v); }, c);
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) throw ParameterError("table row width does not match header");
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

json table_to_json(const Table& table) {
  json out = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.header.at(i)] = cell_json(row[i]);
    out.push_back(std::move(obj));
  }
  return out;
}

void require_finite(const json& value, const std::string& where) {
  if (value.is_number_float()) {
    if (!std::isfinite(value.get<double>())) throw NonFiniteError("non-finite number in " + where);
  } else if (value.is_object()) {
    for (const auto& [key, v] : value.items()) require_finite(v, where + "." + key);
  } else if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) require_finite(value[i], where + "[" + std::to_string(i) + "]");
  }
}

void write_json(std::ostream& os, const Envelope& envelope) {
  json out = json::object();
  out["command"] = envelope.command;
  out["params_echo"] = envelope.params_echo;
  out["data"] = envelope.data;
  out["diagnostics"] = envelope.diagnostics;
  require_finite(out, "envelope");
  os << out.dump(2) << '\n';
}

void write_profile_csv(std::ostream& os, const SolutionProfile& p) {
  Table table{{"t", "h", "h1", "h2", "h3", "q", "q1", "q2", "q3"}, {}};
  table.rows.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    table.rows.push_back({p.t[i], p.h[i], p.h1[i], p.h2[i], p.h3[i], p.q[i], p.q1[i], p.q2[i], p.q3[i]});
  write_csv(os, table);
}

namespace {

std::vector<std::string> split_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto b = field.find_first_not_of(" \t");
    const auto e = field.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& s, std::size_t line) {
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto res = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
    throw IoError("profile line " + std::to_string(line) + ": cannot parse number '" + s + "'");
  return v;
}

}  // namespace

SolutionProfile read_profile_csv(std::istream& is, const ModelParams& params) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(is, line)) throw IoError("profile file is empty");
  ++line_no;
  const std::vector<std::string> header = split_line(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col.emplace(header[i], i);
  if (!col.count("t") || !col.count("h")) throw IoError("profile header must contain columns t and h");
  const int derivative_cols = static_cast<int>(col.count("h1") + col.count("h2") + col.count("h3"));
  if (derivative_cols != 0 && derivative_cols != 3)
    throw IoError("profile must give all of h1, h2, h3 or none of them");

  std::vector<std::vector<double>> cols(5);
  const std::string names[5] = {"t", "h", "h1", "h2", "h3"};
  const int used = derivative_cols == 3 ? 5 : 2;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_line(line);
    if (fields.size() != header.size())
      throw IoError("profile line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                    " fields");
    for (int k = 0; k < used; ++k) cols[k].push_back(parse_number(fields[col.at(names[k])], line_no));
  }
  if (is.bad()) throw IoError("error while reading profile file");
  if (used == 2) return profile_from_samples(params, std::move(cols[0]), std::move(cols[1]));
  return make_profile(params, std::move(cols[0]), std::move(cols[1]), std::move(cols[2]), std::move(cols[3]),
                      std::move(cols[4]));
}

}  // namespace wm::report
