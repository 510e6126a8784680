#include "lambda_osc/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lambda_osc {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void write_value(std::ostream& os, const nlohmann::ordered_json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << nlohmann::ordered_json(it.key()).dump() << sep;
        write_value(os, it.value(), indent, depth + 1);
      }
      os << nl << close << '}';
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[' << nl;
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        write_value(os, v, indent, depth + 1);
      }
      os << nl << close << ']';
      return;
    }
    case nlohmann::ordered_json::value_t::number_float: {
      const double x = j.get<double>();
      os << (std::isfinite(x) ? format_double(x) : "null");
      return;
    }
    default:
      os << j.dump();
  }
}

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(double x) const { return format_double(x); }
    std::string operator()(long x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + '"';
    }
  } visitor;
  return std::visit(visitor, c);
}

}  // namespace

void write_json(std::ostream& os, const nlohmann::ordered_json& j, int indent) {
  write_value(os, j, indent, 0);
  os << '\n';
}

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
  std::ostringstream os;
  write_json(os, j, indent);
  return os.str();
}

void Table::add(std::vector<Cell> row) {
  if (row.size() != header.size()) throw std::invalid_argument("table row width does not match the header");
  rows.push_back(std::move(row));
}

nlohmann::ordered_json Table::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < header.size(); ++i) {
      std::visit([&](const auto& v) { obj[header[i]] = v; }, row[i]);
    }
    out.push_back(std::move(obj));
  }
  return out;
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

}  // namespace lambda_osc
