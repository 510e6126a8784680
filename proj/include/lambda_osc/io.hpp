#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace lambda_osc {

/// "%.17g"; non-finite values print as nan / inf / -inf.
std::string format_double(double x);

/// JSON text with every floating-point number written to 17 significant
/// digits (non-finite numbers become null). Keys keep insertion order.
void write_json(std::ostream& os, const nlohmann::ordered_json& j, int indent = 2);
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

using Cell = std::variant<double, long, bool, std::string>;

/// Column-named rows, written as CSV (header first, '\n' endings) or as a
/// JSON array of objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
  nlohmann::ordered_json to_json() const;
};

void write_csv(std::ostream& os, const Table& t);

}  // namespace lambda_osc
